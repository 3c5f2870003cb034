#pragma once

// Rule-based model of D^b(mod K), K the Kronecker quiver 1 => 2. Modules
// are Post(m) = (m, m+1), Pre(m) = (m+1, m) and Reg(lambda, l) = (l, l) in
// homogeneous tubes. Only finitely many are represented (m <= range,
// l <= tube depth); the rules themselves are symbolic.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitt/derived.hpp"
#include "splitt/errors.hpp"
#include "splitt/model.hpp"
#include "splitt/report.hpp"
#include "splitt/torsion.hpp"
#include "splitt/tstruct.hpp"

namespace splitt {

enum class KKind { Post, Reg, Pre };

struct KModule {
    KKind kind = KKind::Post;
    int n = 0;              // m for Post/Pre, quasi-length for Reg
    std::size_t tube = 0;   // Reg only

    static KModule post(int m) { return {KKind::Post, m, 0}; }
    static KModule pre(int m) { return {KKind::Pre, m, 0}; }
    static KModule reg(std::size_t tube, int length) { return {KKind::Reg, length, tube}; }

    std::pair<int, int> dim() const {
        switch (kind) {
            case KKind::Post: return {n, n + 1};
            case KKind::Pre: return {n + 1, n};
            case KKind::Reg: return {n, n};
        }
        return {0, 0};
    }

    bool is_projective() const { return kind == KKind::Post && n <= 1; }
    bool is_injective() const { return kind == KKind::Pre && n <= 1; }

    friend bool operator==(const KModule&, const KModule&) = default;
};

inline int kronecker_euler(std::pair<int, int> d, std::pair<int, int> e) {
    return d.first * e.first + d.second * e.second - 2 * d.first * e.second;
}

/// dim Hom(X, Y) between indecomposable Kronecker modules.
inline int kronecker_hom(const KModule& x, const KModule& y) {
    using enum KKind;
    if (x.kind == Post && y.kind == Post) return y.n >= x.n ? y.n - x.n + 1 : 0;
    if (x.kind == Pre && y.kind == Pre) return y.n <= x.n ? x.n - y.n + 1 : 0;
    if (x.kind == Reg && y.kind == Reg) return x.tube == y.tube ? std::min(x.n, y.n) : 0;
    const bool forward = (x.kind == Post && y.kind != Post) || (x.kind == Reg && y.kind == Pre);
    return forward ? kronecker_euler(x.dim(), y.dim()) : 0;
}

/// Module-level AR translate; nullopt on the projectives Post(0), Post(1).
inline std::optional<KModule> kronecker_tau(const KModule& x) {
    switch (x.kind) {
        case KKind::Post:
            if (x.n < 2) return std::nullopt;
            return KModule::post(x.n - 2);
        case KKind::Pre: return KModule::pre(x.n + 2);
        case KKind::Reg: return x;
    }
    return std::nullopt;
}

inline std::optional<KModule> kronecker_tau_inverse(const KModule& x) {
    switch (x.kind) {
        case KKind::Pre:
            if (x.n < 2) return std::nullopt;
            return KModule::pre(x.n - 2);
        case KKind::Post: return KModule::post(x.n + 2);
        case KKind::Reg: return x;
    }
    return std::nullopt;
}

/// dim Ext^1(X, Y) = dim Hom(Y, tau X), zero for X projective.
inline int kronecker_ext(const KModule& x, const KModule& y) {
    const auto tx = kronecker_tau(x);
    return tx ? kronecker_hom(y, *tx) : 0;
}

struct KObject {
    KModule module;
    int degree = 0;

    friend bool operator==(const KObject&, const KObject&) = default;
};

inline int hom_rule(const KObject& x, const KObject& y) {
    if (y.degree == x.degree) return kronecker_hom(x.module, y.module);
    if (y.degree == x.degree + 1) return kronecker_ext(x.module, y.module);
    return 0;
}

/// tau_D: Post(0)@d -> Pre(1)@(d-1), Post(1)@d -> Pre(0)@(d-1).
inline KObject tau_rule(const KObject& x) {
    if (const auto t = kronecker_tau(x.module)) return {*t, x.degree};
    return {KModule::pre(1 - x.module.n), x.degree - 1};
}

inline KObject tau_inverse_rule(const KObject& x) {
    if (const auto t = kronecker_tau_inverse(x.module)) return {*t, x.degree};
    return {KModule::post(1 - x.module.n), x.degree + 1};
}

/// Truncated model: Post(0..range), Reg(lambda, 1..depth) per tube label,
/// Pre(range..0), in that order. Satisfies HereditaryModel.
class TameModel {
public:
    TameModel(std::size_t tubes, int tube_depth, int range, Window w)
        : depth_(tube_depth), range_(range), window_(w) {
        if (tubes < 3) throw UsageError("the Kronecker model needs at least 3 tube labels");
        if (tube_depth < 1) throw UsageError("tube depth must be positive");
        if (range < 2) throw UsageError("transjective range must be at least 2");
        w.validate();
        for (std::size_t k = 0; k < tubes; ++k)
            labels_.push_back(k == 0 ? "0" : k == 1 ? "1" : k == 2 ? "inf" : std::to_string(k - 1));
        for (int m = 0; m <= range; ++m) modules_.push_back(KModule::post(m));
        for (std::size_t k = 0; k < tubes; ++k)
            for (int l = 1; l <= tube_depth; ++l) modules_.push_back(KModule::reg(k, l));
        for (int m = range; m >= 0; --m) modules_.push_back(KModule::pre(m));
    }

    std::size_t size() const noexcept { return modules_.size(); }
    std::size_t rank() const noexcept { return 2; }
    const Window& window() const noexcept { return window_; }
    int tube_depth() const noexcept { return depth_; }
    int range() const noexcept { return range_; }
    const std::vector<std::string>& tube_labels() const noexcept { return labels_; }
    std::size_t tube_count() const noexcept { return labels_.size(); }

    const KModule& module(std::size_t i) const { return modules_.at(i); }

    std::optional<std::size_t> find(const KModule& x) const {
        for (std::size_t i = 0; i < modules_.size(); ++i)
            if (modules_[i] == x) return i;
        return std::nullopt;
    }

    bool represented(const KModule& x) const {
        if (x.kind == KKind::Reg) return x.tube < labels_.size() && x.n >= 1 && x.n <= depth_;
        return x.n >= 0 && x.n <= range_;
    }

    int hom(std::size_t i, std::size_t j) const { return kronecker_hom(modules_.at(i), modules_.at(j)); }
    int ext(std::size_t i, std::size_t j) const { return kronecker_ext(modules_.at(i), modules_.at(j)); }

    std::string label(std::size_t i) const { return name(modules_.at(i)); }

    std::string name(const KModule& x) const {
        switch (x.kind) {
            case KKind::Post: return "Post(" + std::to_string(x.n) + ")";
            case KKind::Pre: return "Pre(" + std::to_string(x.n) + ")";
            case KKind::Reg: return "Reg(" + labels_.at(x.tube) + "," + std::to_string(x.n) + ")";
        }
        return {};
    }

    /// Parses "Post(1)", "Pre(0)" or "Reg(inf,2)".
    KModule parse(std::string_view text) const {
        const std::string s = detail::trim(text);
        const auto open = s.find('('), close = s.rfind(')');
        if (open == std::string::npos || close != s.size() - 1)
            throw UsageError("bad Kronecker object '" + s + "'");
        const std::string head = s.substr(0, open), body = s.substr(open + 1, close - open - 1);
        auto number = [&](const std::string& t) {
            const std::string u = detail::trim(t);
            if (u.empty() || u.find_first_not_of("0123456789") != std::string::npos)
                throw UsageError("bad index in Kronecker object '" + s + "'");
            return std::stoi(u);
        };
        KModule x;
        if (head == "Post") {
            x = KModule::post(number(body));
        } else if (head == "Pre") {
            x = KModule::pre(number(body));
        } else if (head == "Reg") {
            const auto comma = body.find(',');
            if (comma == std::string::npos) throw UsageError("Reg needs a tube label and a length: '" + s + "'");
            const std::string lab = detail::trim(body.substr(0, comma));
            const auto it = std::find(labels_.begin(), labels_.end(), lab);
            if (it == labels_.end()) throw UsageError("unknown tube label '" + lab + "'");
            x = KModule::reg(static_cast<std::size_t>(it - labels_.begin()), number(body.substr(comma + 1)));
        } else {
            throw UsageError("bad Kronecker object '" + s + "'");
        }
        if (!represented(x)) throw UsageError("'" + s + "' lies outside the truncated model");
        return x;
    }

    Component component(std::size_t i) const {
        switch (modules_.at(i).kind) {
            case KKind::Post: return Component::Postprojective;
            case KKind::Reg: return Component::Regular;
            case KKind::Pre: return Component::Preinjective;
        }
        return Component::Regular;
    }

    /// tau_rule restricted to represented objects.
    KObject tau(const KObject& x) const {
        const auto y = tau_rule(x);
        if (!represented(y.module)) throw TruncationError("tau of " + name(x.module) + " leaves the truncated range");
        return y;
    }

    std::optional<DerivedObject> tau_derived(DerivedObject x) const {
        const auto y = tau_rule({modules_.at(x.indec), x.degree});
        if (const auto id = find(y.module)) return DerivedObject{*id, y.degree};
        return std::nullopt;
    }

    std::optional<DerivedObject> tau_inverse_derived(DerivedObject x) const {
        const auto y = tau_inverse_rule({modules_.at(x.indec), x.degree});
        if (const auto id = find(y.module)) return DerivedObject{*id, y.degree};
        return std::nullopt;
    }

    std::string truncation() const {
        return "tubes=" + std::to_string(labels_.size()) + " depth=" + std::to_string(depth_) +
               " range=" + std::to_string(range_) + " window=" + window_.str();
    }

private:
    int depth_;
    int range_;
    Window window_;
    std::vector<std::string> labels_;
    std::vector<KModule> modules_;
};

/// Aisle given per block (Post, Pre, one per tube) by a threshold degree: a
/// block object at degree d is in U iff d >= threshold. Membership is
/// symbolic, so it is defined for unrepresented objects too.
struct BlockAisle {
    int post = 0;
    int pre = 0;
    std::vector<int> tubes;

    bool contains(const KObject& x) const {
        switch (x.module.kind) {
            case KKind::Post: return x.degree >= post;
            case KKind::Pre: return x.degree >= pre;
            case KKind::Reg: return x.degree >= tubes.at(x.module.tube);
        }
        return false;
    }

    DerivedSubcategory restrict(const TameModel& m) const {
        const Window w = m.window();
        DerivedSubcategory s(w, m.size());
        for (int d = w.lo; d <= w.hi; ++d)
            for (std::size_t i = 0; i < m.size(); ++i)
                if (contains({m.module(i), d})) s.insert({i, d});
        s.upper_tail = true;
        s.lower_tail = s.all_at(w.lo);
        return s;
    }

    friend bool operator==(const BlockAisle&, const BlockAisle&) = default;
};

/// (tubes in L at degree i) ∨ C_j ∨ R_j for j > i, where C_{i+1} = Pre@i ∨ Post@(i+1).
inline BlockAisle build_aisle_63b(int i, const std::vector<bool>& in_l) {
    BlockAisle a;
    a.post = i + 1;
    a.pre = i;
    for (bool b : in_l) a.tubes.push_back(b ? i : i + 1);
    return a;
}

inline std::vector<bool> subset_from_mask(std::size_t n, std::size_t mask) {
    std::vector<bool> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = (mask >> k & 1U) != 0;
    return out;
}

/// (i) closed under [1] and U = ^perp(U^perp) on interior degrees; (ii) split.
template <HereditaryModel M>
Verdict generic_aisle_axioms(const DerivedSubcategory& s, const M& m) {
    const Window w = s.window();
    for (const auto& x : s.members())
        if (!s.contains(shift(x, 1))) return Verdict::failure(object_label(m, x) + " has its shift outside");
    const auto perp = right_orthogonal(s, m);
    const auto closure = left_orthogonal(perp, m);
    for (int d = w.lo + 1; d < w.hi; ++d)
        for (std::size_t i = 0; i < m.size(); ++i) {
            const DerivedObject x{i, d};
            if (s.contains(x) != closure.contains(x))
                return Verdict::failure(object_label(m, x) + (s.contains(x) ? " is in U but not in ^perp(U^perp)"
                                                                           : " is in ^perp(U^perp) but not in U"));
            if (!s.contains(x) && !perp.contains(x)) return Verdict::failure(object_label(m, x) + " is on neither side");
        }
    return {};
}

/// Members X of a block aisle with tau_D X outside U, decided symbolically
/// (tau_D X is always in U or U^perp for a split aisle). Degree hi is
/// included: thresholds are constant beyond it, so this covers all of U.
inline std::vector<KObject> block_ext_projectives(const BlockAisle& a, const TameModel& m) {
    std::vector<KObject> out;
    const Window w = m.window();
    for (int d = w.lo + 1; d <= w.hi; ++d)
        for (std::size_t i = 0; i < m.size(); ++i) {
            const KObject x{m.module(i), d};
            if (a.contains(x) && !a.contains(tau_rule(x))) out.push_back(x);
        }
    return out;
}

struct Scan63b {
    Report report;
    std::size_t built = 0;              // (i, L) combinations checked
    std::size_t converse_candidates = 0;
    std::size_t converse_survivors = 0;
};

/// For every interior i and every subset L: the built aisle is split,
/// shift-closed, has no Ext-projectives, and its trace at degree i is a torsion
/// pair with Pre torsion and Post torsion-free. Conversely every block aisle
/// that is a split aisle without Ext-projectives is one of them; block aisles
/// containing C_1 contain every degree >= 1.
inline Scan63b verify_63b(const TameModel& m) {
    const Window w = m.window();
    const std::size_t nt = m.tube_count();
    Scan63b out;
    auto object_name = [&](const KObject& x) { return m.name(x.module) + "@" + std::to_string(x.degree); };
    auto subset_name = [&](const std::vector<bool>& l) {
        std::string s = "{";
        for (std::size_t k = 0; k < l.size(); ++k)
            if (l[k]) s += (s.size() > 1 ? "," : "") + m.tube_labels()[k];
        return s + "}";
    };

    std::vector<BlockAisle> built;
    for (int i = w.lo + 1; i < w.hi; ++i)
        for (std::size_t mask = 0; mask < (std::size_t{1} << nt); ++mask) {
            const auto l = subset_from_mask(nt, mask);
            const auto a = build_aisle_63b(i, l);
            built.push_back(a);
            ++out.built;
            const auto s = a.restrict(m);
            ReportEntry e{"aisle_63b(i=" + std::to_string(i) + ", L=" + subset_name(l) + ")", {m.truncation()}, {}};

            auto orth = Check::ok("split and Hom-orthogonal to its complement");
            const auto perp = right_orthogonal(s, m);
            for (int d = w.lo + 1; d < w.hi; ++d)
                for (std::size_t j = 0; j < m.size(); ++j) {
                    const DerivedObject y{j, d};
                    if (s.contains(y) == perp.contains(y))
                        orth.fail(object_label(m, y) + (s.contains(y) ? " is on both sides" : " is on neither side"));
                }
            auto closed = Check::ok("closed under [1]");
            for (const auto& x : s.members())
                if (!s.contains(shift(x, 1))) closed.fail(object_label(m, x));
            if (auto v = generic_aisle_axioms(s, m); !v) closed.fail(v.reason);
            auto no_proj = Check::ok("no Ext-projectives");
            for (const auto& x : block_ext_projectives(a, m)) no_proj.fail(object_name(x));

            auto boundary = Check::ok("trace: Pre torsion, Post torsion-free");
            TorsionPair tp{Subcategory(m.size()), Subcategory(m.size()), false};
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (s.contains({j, i})) tp.torsion.insert(j);
                if (perp.contains({j, i})) tp.free.insert(j);
            }
            tp.split = (tp.torsion | tp.free).count() == m.size();
            if (auto c = check_torsion_pair(tp, m); !c.pass) boundary.fail(*c.witness);
            if (!tp.split) boundary.fail("trace is not split");
            for (std::size_t j = 0; j < m.size(); ++j) {
                const auto k = m.module(j).kind;
                if (k == KKind::Pre && !tp.torsion.contains(j)) boundary.fail(m.label(j) + " is not torsion");
                if (k == KKind::Post && !tp.free.contains(j)) boundary.fail(m.label(j) + " is not torsion-free");
            }
            e.checks = {orth, closed, no_proj, boundary};
            out.report.push_back(std::move(e));
        }

    // Converse: every threshold assignment in lo+1..hi.
    ReportEntry converse{"converse scan", {m.truncation()}, {}};
    auto only_built = Check::ok("every split aisle without Ext-projectives is some aisle_63b(i, L)");
    auto saturation = Check::ok("aisle containing C_1 contains all degrees >= 1");
    const std::size_t blocks = 2 + nt;
    const int choices = w.hi - w.lo;
    std::vector<int> th(blocks, w.lo + 1);
    for (;;) {
        BlockAisle a;
        a.post = th[0];
        a.pre = th[1];
        a.tubes.assign(th.begin() + 2, th.end());
        ++out.converse_candidates;
        const auto s = a.restrict(m);
        if (generic_aisle_axioms(s, m)) {
            bool has_c1 = true;
            for (std::size_t j = 0; j < m.size(); ++j) {
                const auto k = m.module(j).kind;
                if (k == KKind::Pre && !s.contains({j, 0})) has_c1 = false;
                if (k == KKind::Post && !s.contains({j, 1})) has_c1 = false;
            }
            if (has_c1)
                for (int d = 1; d < w.hi; ++d)
                    if (!s.all_at(d)) saturation.fail("threshold aisle misses degree " + std::to_string(d));
            if (block_ext_projectives(a, m).empty()) {
                ++out.converse_survivors;
                if (std::find(built.begin(), built.end(), a) == built.end()) {
                    std::string desc = "Post>=" + std::to_string(a.post) + " Pre>=" + std::to_string(a.pre);
                    for (std::size_t k = 0; k < nt; ++k)
                        desc += " " + m.tube_labels()[k] + ">=" + std::to_string(a.tubes[k]);
                    only_built.fail(desc);
                }
            }
        }
        std::size_t k = 0;
        while (k < blocks && th[k] == w.lo + choices) th[k++] = w.lo + 1;
        if (k == blocks) break;
        ++th[k];
    }
    if (out.converse_survivors != out.built)
        only_built.fail(std::to_string(out.converse_survivors) + " survivors for " + std::to_string(out.built) +
                        " built aisles");
    converse.checks = {only_built, saturation};
    out.report.push_back(std::move(converse));
    return out;
}

}  // namespace splitt
