#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "splitt/errors.hpp"

namespace splitt {

using Vertex = std::size_t;

struct Arrow {
    std::string name;
    Vertex source;
    Vertex target;
};

/// Finite quiver. Vertices are dense indices with display names; arrows keep
/// their position when the quiver is reflected, so arrow indices are stable
/// across orientation changes.
class Quiver {
public:
    Vertex add_vertex(std::string name) {
        if (index_.count(name)) throw UsageError("duplicate vertex '" + name + "'");
        index_.emplace(name, names_.size());
        names_.push_back(std::move(name));
        return names_.size() - 1;
    }

    std::size_t add_arrow(std::string name, Vertex source, Vertex target) {
        if (source >= names_.size() || target >= names_.size()) throw UsageError("arrow endpoint out of range");
        if (source == target) throw UsageError("loop at vertex '" + names_[source] + "'");
        arrows_.push_back({std::move(name), source, target});
        return arrows_.size() - 1;
    }

    std::size_t vertex_count() const noexcept { return names_.size(); }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const std::string& vertex_name(Vertex v) const { return names_.at(v); }

    std::optional<Vertex> find_vertex(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool is_sink(Vertex v) const {
        return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; });
    }
    bool is_source(Vertex v) const {
        return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.target == v; });
    }

    /// Same vertices, every arrow incident to v reversed.
    Quiver reflected_at(Vertex v) const {
        Quiver q = *this;
        for (auto& a : q.arrows_)
            if (a.source == v || a.target == v) std::swap(a.source, a.target);
        return q;
    }

    Quiver opposite() const {
        Quiver q = *this;
        for (auto& a : q.arrows_) std::swap(a.source, a.target);
        return q;
    }

    bool has_directed_cycle() const { return !topological_order().has_value(); }

    bool is_connected() const {
        const std::size_t n = vertex_count();
        if (n == 0) return false;
        std::vector<bool> seen(n, false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const auto& a : arrows_) {
                Vertex w = n;
                if (a.source == v) w = a.target;
                else if (a.target == v) w = a.source;
                if (w < n && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    /// Vertices ordered so that every arrow goes from an earlier to a later one.
    std::optional<std::vector<Vertex>> topological_order() const {
        const std::size_t n = vertex_count();
        std::vector<std::size_t> indeg(n, 0);
        for (const auto& a : arrows_) ++indeg[a.target];
        std::vector<Vertex> order;
        std::vector<Vertex> ready;
        for (Vertex v = 0; v < n; ++v)
            if (indeg[v] == 0) ready.push_back(v);
        while (!ready.empty()) {
            std::sort(ready.begin(), ready.end(), std::greater<>());
            const Vertex v = ready.back();
            ready.pop_back();
            order.push_back(v);
            for (const auto& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
        }
        if (order.size() != n) return std::nullopt;
        return order;
    }

    /// v_1, ..., v_n with v_k a sink of s_{v_{k-1}} ... s_{v_1} Q: the reverse
    /// of a topological order.
    std::vector<Vertex> admissible_sink_order() const {
        auto order = topological_order();
        if (!order) throw UsageError("quiver has a directed cycle");
        std::reverse(order->begin(), order->end());
        return *order;
    }

    /// Checks the standing invariants: no loops, no directed cycles, connected.
    void validate() const {
        if (vertex_count() == 0) throw StructuralError("quiver has no vertices");
        if (has_directed_cycle()) throw StructuralError("quiver has a directed cycle");
        if (!is_connected()) throw StructuralError("quiver is not connected");
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, Vertex> index_;
    std::vector<Arrow> arrows_;
};

enum class DynkinFamily { A, D, E };

struct DynkinType {
    DynkinFamily family;
    std::size_t rank;

    std::size_t positive_roots() const {
        switch (family) {
            case DynkinFamily::A: return rank * (rank + 1) / 2;
            case DynkinFamily::D: return rank * (rank - 1);
            case DynkinFamily::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
        }
        return 0;
    }

    std::string name() const {
        const char f = family == DynkinFamily::A ? 'A' : family == DynkinFamily::D ? 'D' : 'E';
        return std::string(1, f) + std::to_string(rank);
    }

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Recognises the underlying graph as A_n, D_n, E_6, E_7 or E_8.
inline std::optional<DynkinType> classify_dynkin(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    if (n == 0 || !q.is_connected()) return std::nullopt;
    if (q.arrows().size() != n - 1) return std::nullopt;  // connected with n-1 edges: a tree, no multi-edges
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& a : q.arrows()) {
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < n; ++v) {
        if (adj[v].size() > 3) return std::nullopt;
        if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.empty()) return DynkinType{DynkinFamily::A, n};
    if (branch.size() > 1) return std::nullopt;
    std::vector<std::size_t> arms;
    for (Vertex start : adj[branch[0]]) {
        std::size_t len = 1;
        Vertex prev = branch[0], cur = start;
        while (adj[cur].size() == 2) {
            const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return DynkinType{DynkinFamily::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinType{DynkinFamily::E, n};
    return std::nullopt;
}

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline bool valid_identifier(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

}  // namespace detail

/// Parses the line-oriented quiver format:
///
///     # comment
///     vertex 1
///     vertex 2
///     arrow a: 1 -> 2
///
/// Cycles and disconnected graphs are rejected with the offending line.
inline Quiver parse_quiver(std::istream& in) {
    Quiver q;
    std::map<std::string, std::size_t> vertex_line;
    std::string raw;
    std::size_t line = 0;
    std::size_t last_line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string text = detail::trim(raw);
        if (text.empty()) continue;
        last_line = line;
        std::istringstream ls(text);
        std::string keyword;
        ls >> keyword;
        if (keyword == "vertex") {
            std::string name, extra;
            ls >> name;
            if (!detail::valid_identifier(name) || (ls >> extra)) throw ParseError(line, "expected 'vertex <name>'");
            if (q.find_vertex(name)) throw ParseError(line, "duplicate vertex '" + name + "'");
            q.add_vertex(name);
            vertex_line[name] = line;
        } else if (keyword == "arrow") {
            const std::string rest = detail::trim(text.substr(5));
            const auto colon = rest.find(':');
            const auto to = rest.find("->");
            if (colon == std::string::npos || to == std::string::npos || to < colon)
                throw ParseError(line, "expected 'arrow <name>: <src> -> <tgt>'");
            const std::string name = detail::trim(rest.substr(0, colon));
            const std::string src = detail::trim(rest.substr(colon + 1, to - colon - 1));
            const std::string tgt = detail::trim(rest.substr(to + 2));
            if (!detail::valid_identifier(name)) throw ParseError(line, "bad arrow name");
            const auto s = q.find_vertex(src);
            const auto t = q.find_vertex(tgt);
            if (!s) throw ParseError(line, "unknown vertex '" + src + "'");
            if (!t) throw ParseError(line, "unknown vertex '" + tgt + "'");
            if (*s == *t) throw ParseError(line, "loop at vertex '" + src + "'");
            for (const auto& a : q.arrows())
                if (a.name == name) throw ParseError(line, "duplicate arrow '" + name + "'");
            q.add_arrow(name, *s, *t);
            if (q.has_directed_cycle()) throw ParseError(line, "arrow '" + name + "' closes a directed cycle");
        } else {
            throw ParseError(line, "unknown declaration '" + keyword + "'");
        }
    }
    if (q.vertex_count() == 0) throw ParseError(last_line == 0 ? 1 : last_line, "no vertices declared");
    if (!q.is_connected()) {
        // Report the first vertex not reachable from the first one.
        std::vector<bool> seen(q.vertex_count(), false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const auto& a : q.arrows()) {
                for (auto [x, y] : {std::pair{a.source, a.target}, std::pair{a.target, a.source}})
                    if (x == v && !seen[y]) {
                        seen[y] = true;
                        stack.push_back(y);
                    }
            }
        }
        for (Vertex v = 0; v < q.vertex_count(); ++v)
            if (!seen[v])
                throw ParseError(vertex_line[q.vertex_name(v)],
                                 "quiver is disconnected: vertex '" + q.vertex_name(v) + "' is unreachable");
    }
    return q;
}

inline Quiver parse_quiver(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_quiver(in);
}

/// Builtin quivers: a<n> (linear), d<n>, e6, e7, e8, kronecker.
///
///   a<n>:  1 -> 2 -> ... -> n
///   d<n>:  1 -> ... -> n-2, n-2 -> n-1, n-2 -> n
///   e<n>:  1 -> ... -> n-1, 3 -> n
inline Quiver builtin_quiver(std::string_view name) {
    auto chain = [](std::size_t n) {
        Quiver q;
        for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
        return q;
    };
    auto arrow = [](Quiver& q, std::size_t s, std::size_t t) {
        q.add_arrow("a" + std::to_string(q.arrows().size() + 1), s - 1, t - 1);
    };
    if (name == "kronecker") {
        Quiver q = chain(2);
        q.add_arrow("a", 0, 1);
        q.add_arrow("b", 0, 1);
        return q;
    }
    if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'd' || name[0] == 'e')) {
        std::size_t n = 0;
        for (char c : name.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw UsageError("unknown builtin quiver '" + std::string(name) + "'");
            n = n * 10 + static_cast<std::size_t>(c - '0');
        }
        if (name[0] == 'a' && n >= 1 && n <= 40) {
            Quiver q = chain(n);
            for (std::size_t i = 1; i < n; ++i) arrow(q, i, i + 1);
            return q;
        }
        if (name[0] == 'd' && n >= 4 && n <= 40) {
            Quiver q = chain(n);
            for (std::size_t i = 1; i + 2 < n; ++i) arrow(q, i, i + 1);
            arrow(q, n - 2, n - 1);
            arrow(q, n - 2, n);
            return q;
        }
        if (name[0] == 'e' && n >= 6 && n <= 8) {
            Quiver q = chain(n);
            for (std::size_t i = 1; i + 1 < n; ++i) arrow(q, i, i + 1);
            arrow(q, 3, n);
            return q;
        }
    }
    throw UsageError("unknown builtin quiver '" + std::string(name) + "'");
}

}  // namespace splitt
