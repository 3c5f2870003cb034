#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "splitt/errors.hpp"
#include "splitt/indec_table.hpp"
#include "splitt/model.hpp"

namespace splitt {

/// Morphisms between stalk complexes over a hereditary category live only in
/// degree gaps 0 (Hom) and 1 (Ext^1).
template <HereditaryModel M>
int hom_derived(DerivedObject x, DerivedObject y, const M& m) {
    if (y.degree == x.degree) return m.hom(x.indec, y.indec);
    if (y.degree == x.degree + 1) return m.ext(x.indec, y.indec);
    return 0;
}

/// Set of derived objects inside a window plus two saturation flags standing
/// for everything above hi (upper_tail) and everything below lo (lower_tail).
class DerivedSubcategory {
public:
    DerivedSubcategory() = default;
    DerivedSubcategory(Window w, std::size_t model_size)
        : window_(w), n_(model_size), bits_(w.degree_count() * model_size) {}

    /// Everything at degrees >= d, with the upper tail.
    static DerivedSubcategory degrees_from(Window w, std::size_t n, int d) {
        DerivedSubcategory s(w, n);
        for (int k = std::max(d, w.lo); k <= w.hi; ++k) s.insert_degree(k);
        s.upper_tail = true;
        s.lower_tail = d < w.lo;
        return s;
    }

    /// Everything at degrees <= d, with the lower tail.
    static DerivedSubcategory degrees_up_to(Window w, std::size_t n, int d) {
        DerivedSubcategory s(w, n);
        for (int k = w.lo; k <= std::min(d, w.hi); ++k) s.insert_degree(k);
        s.lower_tail = true;
        s.upper_tail = d > w.hi;
        return s;
    }

    const Window& window() const noexcept { return window_; }
    std::size_t model_size() const noexcept { return n_; }

    bool contains(DerivedObject x) const {
        if (x.degree > window_.hi) return upper_tail;
        if (x.degree < window_.lo) return lower_tail;
        return bits_.test(index(x));
    }

    void insert(DerivedObject x) { bits_.set(checked_index(x)); }
    void erase(DerivedObject x) { bits_.reset(checked_index(x)); }
    void set(DerivedObject x, bool on) { bits_.set(checked_index(x), on); }

    void insert_degree(int d) {
        for (std::size_t i = 0; i < n_; ++i) insert({i, d});
    }

    bool any_at(int d) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (contains({i, d})) return true;
        return false;
    }

    bool all_at(int d) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (!contains({i, d})) return false;
        return true;
    }

    std::vector<DerivedObject> members() const {
        std::vector<DerivedObject> out;
        for (auto k = bits_.find_first(); k != boost::dynamic_bitset<>::npos; k = bits_.find_next(k))
            out.push_back(object(k));
        return out;
    }

    std::vector<DerivedObject> members_at(int d) const {
        std::vector<DerivedObject> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (contains({i, d})) out.push_back({i, d});
        return out;
    }

    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none() && !upper_tail && !lower_tail; }

    /// Membership agrees on every interior object.
    bool equal_on_interior(const DerivedSubcategory& o) const {
        for (int d = window_.lo + 1; d < window_.hi; ++d)
            for (std::size_t i = 0; i < n_; ++i)
                if (contains({i, d}) != o.contains({i, d})) return false;
        return true;
    }

    /// Tail flags must be backed by full boundary degrees.
    void validate() const {
        if (upper_tail && !all_at(window_.hi)) throw ConsistencyError("upper tail without a full top degree");
        if (lower_tail && !all_at(window_.lo)) throw ConsistencyError("lower tail without a full bottom degree");
    }

    std::size_t index(DerivedObject x) const { return static_cast<std::size_t>(x.degree - window_.lo) * n_ + x.indec; }
    DerivedObject object(std::size_t k) const { return {k % n_, window_.lo + static_cast<int>(k / n_)}; }

    friend bool operator==(const DerivedSubcategory& a, const DerivedSubcategory& b) {
        return a.window_ == b.window_ && a.n_ == b.n_ && a.bits_ == b.bits_ && a.upper_tail == b.upper_tail &&
               a.lower_tail == b.lower_tail;
    }

    bool upper_tail = false;
    bool lower_tail = false;

private:
    std::size_t checked_index(DerivedObject x) const {
        if (!window_.contains(x.degree) || x.indec >= n_)
            throw UsageError("object outside the window (degree " + std::to_string(x.degree) + ")");
        return index(x);
    }

    Window window_;
    std::size_t n_ = 0;
    boost::dynamic_bitset<> bits_;
};

/// U^perp: objects receiving no nonzero morphism from U. Objects of U just
/// below the window (lower tail) are taken into account.
template <HereditaryModel M>
DerivedSubcategory right_orthogonal(const DerivedSubcategory& u, const M& m) {
    const Window w = u.window();
    DerivedSubcategory out(w, m.size());
    for (int d = w.lo; d <= w.hi; ++d)
        for (std::size_t j = 0; j < m.size(); ++j) {
            const DerivedObject y{j, d};
            bool ok = true;
            for (std::size_t i = 0; i < m.size() && ok; ++i) {
                if (u.contains({i, d}) && m.hom(i, j) != 0) ok = false;
                if (u.contains({i, d - 1}) && m.ext(i, j) != 0) ok = false;
            }
            if (ok) out.insert(y);
        }
    out.lower_tail = !u.lower_tail;
    out.upper_tail = !u.upper_tail && !u.any_at(w.hi);
    return out;
}

/// ^perp V: objects with no nonzero morphism into V.
template <HereditaryModel M>
DerivedSubcategory left_orthogonal(const DerivedSubcategory& v, const M& m) {
    const Window w = v.window();
    DerivedSubcategory out(w, m.size());
    for (int d = w.lo; d <= w.hi; ++d)
        for (std::size_t i = 0; i < m.size(); ++i) {
            const DerivedObject x{i, d};
            bool ok = true;
            for (std::size_t j = 0; j < m.size() && ok; ++j) {
                if (v.contains({j, d}) && m.hom(i, j) != 0) ok = false;
                if (v.contains({j, d + 1}) && m.ext(i, j) != 0) ok = false;
            }
            if (ok) out.insert(x);
        }
    out.upper_tail = !v.upper_tail;
    out.lower_tail = !v.lower_tail && !v.any_at(w.lo);
    return out;
}

/// Complement inside the window, with both tails flipped.
inline DerivedSubcategory complement(const DerivedSubcategory& s) {
    DerivedSubcategory out(s.window(), s.model_size());
    for (int d = s.window().lo; d <= s.window().hi; ++d)
        for (std::size_t i = 0; i < s.model_size(); ++i)
            if (!s.contains({i, d})) out.insert({i, d});
    out.upper_tail = !s.upper_tail;
    out.lower_tail = !s.lower_tail;
    return out;
}

using DerivedArrow = std::pair<DerivedObject, DerivedObject>;

/// dim rad/rad^2 from X@d to Y@(d+1), i.e. inside Ext^1(X, Y): the part not
/// reached by composites X -> Z -> Y[1] or X -> Z[1] -> Y[1].
inline std::size_t cross_degree_irreducible_dimension(const IndecTable& t, std::size_t x, std::size_t y) {
    const auto& q = t.quiver();
    const auto& rx = t.entry(x).rep;
    const auto& ry = t.entry(y).rep;
    const CommutationSystem sys(q, rx, ry);
    const std::size_t length = sys.cochain_dimension();
    if (length == 0) return 0;
    std::vector<std::vector<Rational>> coboundaries;
    const Matrix& delta = sys.matrix();
    for (std::size_t c = 0; c < delta.cols(); ++c) {
        std::vector<Rational> col(length);
        for (std::size_t r = 0; r < length; ++r) col[r] = delta(r, c);
        coboundaries.push_back(std::move(col));
    }
    const std::size_t boundary_rank = span_rank(coboundaries, length);
    const std::size_t ext = length - boundary_rank;
    if (ext == 0) return 0;

    auto generators = coboundaries;
    for (std::size_t z = 0; z < t.size(); ++z) {
        const auto& rz = t.entry(z).rep;
        if (z != x && t.hom(x, z) != 0 && t.ext(z, y) != 0) {
            const CommutationSystem zy(q, rz, ry);
            for (const auto& f : t.hom_basis(x, z).basis)
                for (const auto& e : zy.cochain_basis()) generators.push_back(flatten(pull_back(e, f, q)));
        }
        if (z != y && t.ext(x, z) != 0 && t.hom(z, y) != 0) {
            const CommutationSystem xz(q, rx, rz);
            for (const auto& e : xz.cochain_basis())
                for (const auto& g : t.hom_basis(z, y).basis) generators.push_back(flatten(push_forward(g, e, q)));
        }
    }
    const std::size_t rad2 = span_rank(generators, length) - boundary_rank;
    return ext - rad2;
}

/// The AR quiver of D^b(mod kQ) restricted to a window, with the tau_D-orbit
/// structure. Within a degree the arrows are the module AR arrows; across
/// degrees they come from completing meshes, and every arrow (and every
/// non-arrow) is checked against rad/rad^2.
class DerivedArQuiver {
public:
    DerivedArQuiver(const IndecTable& t, Window w) : table_(&t), window_(w) {
        w.validate();
        build_arrows();
        build_orbits();
    }

    const Window& window() const noexcept { return window_; }
    const std::vector<DerivedArrow>& arrows() const noexcept { return arrows_; }

    std::vector<DerivedObject> objects() const {
        std::vector<DerivedObject> out;
        for (int d = window_.lo; d <= window_.hi; ++d)
            for (std::size_t i = 0; i < table_->size(); ++i) out.push_back({i, d});
        return out;
    }

    std::vector<DerivedObject> successors(DerivedObject x) const { return neighbours(succ_, x); }
    std::vector<DerivedObject> predecessors(DerivedObject x) const { return neighbours(pred_, x); }

    bool has_arrow(DerivedObject x, DerivedObject y) const {
        return std::binary_search(arrows_.begin(), arrows_.end(), DerivedArrow{x, y});
    }

    std::size_t orbit_count() const noexcept { return lines_.size(); }

    /// tau_D-orbit of x, numbered by the vertex v with P_v@0 on it.
    std::size_t orbit_of(DerivedObject x) const { return orbit_.at(x).first; }

    /// Position along the orbit: x = tau_D^{-k}(P_v@0).
    int position_of(DerivedObject x) const { return orbit_.at(x).second; }

    /// Window members of an orbit, in increasing position.
    const std::vector<DerivedObject>& orbit_line(std::size_t k) const { return lines_.at(k); }

    void write_dot(std::ostream& os, const DerivedSubcategory* coloring = nullptr) const {
        os << "digraph derived_ar {\n  rankdir=LR;\n  node [shape=box];\n";
        for (const auto& x : objects()) {
            os << "  \"" << object_label(*table_, x) << "\"";
            if (coloring)
                os << " [style=filled, fillcolor=\"" << (coloring->contains(x) ? "lightblue" : "white") << "\"]";
            os << ";\n";
        }
        for (const auto& [x, y] : arrows_)
            os << "  \"" << object_label(*table_, x) << "\" -> \"" << object_label(*table_, y) << "\";\n";
        os << "}\n";
    }

private:
    void build_arrows() {
        const auto& t = *table_;
        std::set<DerivedArrow> arrows;
        for (int d = window_.lo; d <= window_.hi; ++d)
            for (const auto& [i, j] : t.ar_arrows()) arrows.insert({{i, d}, {j, d}});
        // Mesh completion: the arrows out of tau_D Z and into Z have the same other ends.
        for (bool grew = true; grew;) {
            grew = false;
            const std::vector<DerivedArrow> snapshot(arrows.begin(), arrows.end());
            for (const auto& [from, to] : snapshot) {
                if (const auto tz = t.tau_derived(to); tz && window_.contains(tz->degree))
                    grew |= arrows.insert({*tz, from}).second;
                if (const auto tiz = t.tau_inverse_derived(from); tiz && window_.contains(tiz->degree))
                    grew |= arrows.insert({to, *tiz}).second;
            }
        }
        arrows_.assign(arrows.begin(), arrows.end());

        for (const auto& [x, y] : arrows_)
            if (y.degree != x.degree && y.degree != x.degree + 1)
                throw ConsistencyError("mesh completion produced an arrow across two degrees");
        // Cross-degree arrows depend only on the degree gap, so one gap suffices.
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j) {
                const std::size_t irr = t.ext(i, j) == 0 ? 0 : cross_degree_irreducible_dimension(t, i, j);
                for (int d = window_.lo; d < window_.hi; ++d) {
                    const bool meshed = arrows.count({{i, d}, {j, d + 1}}) > 0;
                    if (irr > 1 || meshed != (irr == 1))
                        throw ConsistencyError("derived AR arrow " + t.label(i) + "@" + std::to_string(d) + " -> " +
                                               t.label(j) + "@" + std::to_string(d + 1) + ": mesh says " +
                                               (meshed ? "present" : "absent") + ", rad/rad^2 has dimension " +
                                               std::to_string(irr));
                }
            }
        for (const auto& a : arrows_) {
            succ_[a.first].push_back(a.second);
            pred_[a.second].push_back(a.first);
        }
    }

    void build_orbits() {
        const auto& t = *table_;
        for (Vertex v = 0; v < t.rank(); ++v) {
            std::vector<DerivedObject> line;
            const DerivedObject start{t.projective(v), 0};
            int k = 0;
            for (DerivedObject x = start; window_.contains(x.degree); x = *t.tau_derived(x), --k) {
                if (!orbit_.emplace(x, std::pair{std::size_t{v}, k}).second)
                    throw ConsistencyError("tau_D-orbits of two projectives meet");
                line.push_back(x);
            }
            std::reverse(line.begin(), line.end());
            k = 1;
            for (DerivedObject x = *t.tau_inverse_derived(start); window_.contains(x.degree);
                 x = *t.tau_inverse_derived(x), ++k) {
                if (!orbit_.emplace(x, std::pair{std::size_t{v}, k}).second)
                    throw ConsistencyError("tau_D-orbits of two projectives meet");
                line.push_back(x);
            }
            lines_.push_back(std::move(line));
        }
        if (orbit_.size() != window_.degree_count() * t.size())
            throw ConsistencyError("tau_D-orbits through the projectives miss objects of the window");
    }

    static std::vector<DerivedObject> neighbours(const std::map<DerivedObject, std::vector<DerivedObject>>& m,
                                                 DerivedObject x) {
        auto it = m.find(x);
        return it == m.end() ? std::vector<DerivedObject>{} : it->second;
    }

    const IndecTable* table_;
    Window window_;
    std::vector<DerivedArrow> arrows_;
    std::map<DerivedObject, std::vector<DerivedObject>> succ_, pred_;
    std::map<DerivedObject, std::pair<std::size_t, int>> orbit_;
    std::vector<std::vector<DerivedObject>> lines_;
};

}  // namespace splitt
