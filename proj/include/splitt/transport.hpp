#pragma once

// Tilting sets, the induced torsion pair (T(T), F(T)), and mod A realized as
// the heart T(T)@0 ∨ F(T)@1 of the lifted t-structure. The maps chi (mod H
// to heart) and zeta (heart to mod H) act on torsion pairs.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "splitt/derived.hpp"
#include "splitt/errors.hpp"
#include "splitt/kronecker.hpp"
#include "splitt/model.hpp"
#include "splitt/report.hpp"
#include "splitt/torsion.hpp"
#include "splitt/tstruct.hpp"

namespace splitt {

namespace detail {

inline bool strictly_postprojective(Component c) { return c == Component::Postprojective; }
inline bool strictly_preinjective(Component c) { return c == Component::Preinjective; }

template <HereditaryModel M>
std::string id_list(const std::vector<std::size_t>& ids, const M& m) {
    std::string s = "{";
    for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? ", " : "") + m.label(ids[k]);
    return s + "}";
}

}  // namespace detail

/// |S| = rank, Ext^1(S, S) = 0 and no represented X with Hom(S, X) = 0 = Ext^1(S, X).
template <HereditaryModel M>
Check is_tilting_set(const std::vector<std::size_t>& s, const M& m) {
    auto c = Check::ok("tilting set");
    const std::set<std::size_t> distinct(s.begin(), s.end());
    if (distinct.size() != m.rank())
        c.fail(std::to_string(distinct.size()) + " summands for rank " + std::to_string(m.rank()));
    for (auto a : distinct)
        for (auto b : distinct)
            if (m.ext(a, b) != 0) c.fail("ext(" + m.label(a) + ", " + m.label(b) + ") != 0");
    for (std::size_t x = 0; x < m.size(); ++x) {
        bool killed = true;
        for (auto a : distinct)
            if (m.hom(a, x) != 0 || m.ext(a, x) != 0) killed = false;
        if (killed) c.fail(m.label(x) + " is annihilated by Hom and Ext from the set");
    }
    return c;
}

struct InducedPair {
    TorsionPair pair;
    std::vector<std::string> warnings;  // truncation artefacts, never hard failures
};

/// T(T) = {X : Ext(T, X) = 0}, F(T) = {X : Hom(T, X) = 0}.
template <HereditaryModel M>
InducedPair induced_torsion_pair(const std::vector<std::size_t>& s, const M& m) {
    if (auto c = is_tilting_set(s, m); !c.pass) throw PreconditionError("not a tilting set: " + *c.witness);
    InducedPair out{{Subcategory(m.size()), Subcategory(m.size()), false}, {}};
    for (std::size_t x = 0; x < m.size(); ++x) {
        bool ext0 = true, hom0 = true;
        for (auto a : s) {
            if (m.ext(a, x) != 0) ext0 = false;
            if (m.hom(a, x) != 0) hom0 = false;
        }
        if (ext0) out.pair.torsion.insert(x);
        if (hom0) out.pair.free.insert(x);
    }
    out.pair.split = (out.pair.torsion | out.pair.free).count() == m.size();
    if (auto c = check_torsion_pair(out.pair, m); !c.pass) {
        if constexpr (std::is_same_v<M, TameModel>)
            out.warnings.push_back("truncation: " + *c.witness);
        else
            throw ConsistencyError("induced pair: " + *c.witness);
    }
    return out;
}

/// mod A inside D^b(mod H): heart = T(T)@0 ∨ F(T)@1, with the components
/// P_A (postprojective part at degree 0), R_A (regular) and I_A (preinjective
/// part at degree 0 followed by F(T)@1 on the same tau_D orbits). For a
/// representation-finite H, P_A and I_A are the projective and injective
/// A-modules instead.
struct HeartModel {
    std::vector<std::size_t> tilting;
    TorsionPair induced;
    DerivedSubcategory heart;
    std::vector<DerivedObject> p_a;
    std::vector<DerivedObject> r_a;
    std::vector<DerivedObject> i_a;
    std::vector<std::string> warnings;
};

template <HereditaryModel M>
HeartModel heart_realization(const std::vector<std::size_t>& s, const M& m, Window w) {
    w.validate();
    if (w.hi < 2) throw UsageError("heart realization needs degree 1 in the window interior");
    auto ip = induced_torsion_pair(s, m);
    for (auto f : ip.pair.free.ids())
        if (!is_postprojective(m.component(f)))
            throw UnsupportedError("unsupported tilting set: F(T) is not contained in add P_H (" + m.label(f) +
                                   " is in F(T))");
    HeartModel hm{s, ip.pair, DerivedSubcategory(w, m.size()), {}, {}, {}, ip.warnings};
    for (std::size_t i = 0; i < m.size(); ++i)
        if (ip.pair.torsion.contains(i)) hm.heart.insert({i, 0});
    for (auto f : ip.pair.free.ids()) hm.heart.insert({f, 1});
    for (const auto& x : hm.heart.members()) {
        const auto c = m.component(x.indec);
        if (c == Component::Transjective) continue;
        if (x.degree == 1 || c == Component::Preinjective) hm.i_a.push_back(x);
        if (x.degree == 0 && c == Component::Postprojective) hm.p_a.push_back(x);
        if (c == Component::Regular) hm.r_a.push_back(x);
    }
    // One transjective component: P_A are the summands of T, I_A their Serre images.
    for (auto t : s) {
        if (m.component(t) != Component::Transjective) continue;
        hm.p_a.push_back({t, 0});
        if (auto y = m.tau_derived({t, 1})) hm.i_a.push_back(*y);
    }
    std::sort(hm.p_a.begin(), hm.p_a.end());
    std::sort(hm.i_a.begin(), hm.i_a.end());
    return hm;
}

/// Structural audit of the component identification: T ⊆ P_A, P_A closed
/// under tau_D^-1 and I_A under tau_D inside the heart (unrepresented images
/// are skipped).
template <HereditaryModel M>
Check check_components(const HeartModel& hm, const M& m) {
    auto c = Check::ok("component identification");
    auto in = [](const std::vector<DerivedObject>& v, DerivedObject x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (auto t : hm.tilting)
        if (!in(hm.p_a, {t, 0})) c.fail(m.label(t) + "@0 is not in P_A");
    auto strict = [&](DerivedObject x) { return m.component(x.indec) != Component::Transjective; };
    for (const auto& x : hm.p_a) {
        if (!strict(x)) continue;
        const auto y = m.tau_inverse_derived(x);
        if (y && hm.heart.contains(*y) && !in(hm.p_a, *y)) c.fail("tau^-1 of " + object_label(m, x) + " leaves P_A");
    }
    for (const auto& x : hm.i_a) {
        if (!strict(x)) continue;
        const auto y = m.tau_derived(x);
        if (y && hm.heart.contains(*y) && !in(hm.i_a, *y)) c.fail("tau of " + object_label(m, x) + " leaves I_A");
    }
    return c;
}

/// A torsion pair in the heart, as two derived subcategories.
struct HeartPair {
    DerivedSubcategory torsion;
    DerivedSubcategory free;

    friend bool operator==(const HeartPair&, const HeartPair&) = default;
};

/// Hom-orthogonality, covering, fixed points inside the heart, and the
/// boundary conditions I_A ⊆ torsion, P_A ⊆ free.
template <HereditaryModel M>
std::vector<Check> check_heart_pair(const HeartPair& hp, const HeartModel& hm, const M& m) {
    auto orth = Check::ok("Hom(torsion, free) = 0");
    auto cover = Check::ok("split over the heart");
    auto fixed = Check::ok("fixed-point closed in the heart");
    auto boundary = Check::ok("I_A torsion, P_A torsion-free");
    const auto tors = hp.torsion.members(), fr = hp.free.members(), heart = hm.heart.members();
    for (const auto& x : tors)
        for (const auto& y : fr)
            if (hom_derived(x, y, m) != 0)
                orth.fail("Hom(" + object_label(m, x) + ", " + object_label(m, y) + ") != 0");
    for (const auto& h : heart) {
        const bool t = hp.torsion.contains(h), f = hp.free.contains(h);
        if (t == f) cover.fail(object_label(m, h) + (t ? " is on both sides" : " is on neither side"));
        bool to_free = false, from_tors = false;
        for (const auto& y : fr) to_free = to_free || hom_derived(h, y, m) != 0;
        for (const auto& x : tors) from_tors = from_tors || hom_derived(x, h, m) != 0;
        if (t != !to_free) fixed.fail(object_label(m, h) + " breaks torsion = ^perp free");
        if (f != !from_tors) fixed.fail(object_label(m, h) + " breaks free = torsion^perp");
    }
    for (const auto& x : tors)
        if (!hm.heart.contains(x)) cover.fail(object_label(m, x) + " is outside the heart");
    for (const auto& x : fr)
        if (!hm.heart.contains(x)) cover.fail(object_label(m, x) + " is outside the heart");
    for (const auto& x : hm.i_a)
        if (!hp.torsion.contains(x)) boundary.fail(object_label(m, x) + " is not torsion");
    for (const auto& x : hm.p_a)
        if (!hp.free.contains(x)) boundary.fail(object_label(m, x) + " is not torsion-free");
    return {orth, cover, fixed, boundary};
}

/// torsion = (T' ∩ T(T))@0 ∨ F(T)@1, free = (F' ∩ T(T))@0. No preconditions.
template <HereditaryModel M>
HeartPair chi_formula(const TorsionPair& tp, const HeartModel& hm, const M& m) {
    HeartPair hp{DerivedSubcategory(hm.heart.window(), m.size()), DerivedSubcategory(hm.heart.window(), m.size())};
    for (auto x : hm.induced.torsion.ids()) {
        if (tp.torsion.contains(x)) hp.torsion.insert({x, 0});
        if (tp.free.contains(x)) hp.free.insert({x, 0});
    }
    for (auto f : hm.induced.free.ids()) hp.torsion.insert({f, 1});
    return hp;
}

template <HereditaryModel M>
void require_module_boundary(const TorsionPair& tp, const M& m) {
    if (!tp.split) throw PreconditionError("torsion pair in mod H is not split");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (detail::strictly_preinjective(m.component(i)) && !tp.torsion.contains(i))
            throw PreconditionError("preinjective " + m.label(i) + " is not torsion");
        if (detail::strictly_postprojective(m.component(i)) && !tp.free.contains(i))
            throw PreconditionError("postprojective " + m.label(i) + " is not torsion-free");
    }
}

template <HereditaryModel M>
HeartPair transport_chi(const TorsionPair& tp, const HeartModel& hm, const M& m) {
    require_module_boundary(tp, m);
    return chi_formula(tp, hm, m);
}

/// T' = degree-0 members of the heart torsion class, F' = T'^perp in mod H.
template <HereditaryModel M>
TorsionPair transport_zeta(const HeartPair& hp, const HeartModel& hm, const M& m) {
    for (const auto& x : hm.i_a)
        if (!hp.torsion.contains(x)) throw PreconditionError(object_label(m, x) + " in I_A is not torsion");
    for (const auto& x : hm.p_a)
        if (!hp.free.contains(x)) throw PreconditionError(object_label(m, x) + " in P_A is not torsion-free");
    for (const auto& h : hm.heart.members())
        if (hp.torsion.contains(h) == hp.free.contains(h))
            throw PreconditionError("heart pair is not split at " + object_label(m, h));
    TorsionPair tp{Subcategory(m.size()), Subcategory(m.size()), false};
    for (const auto& x : hp.torsion.members())
        if (x.degree == 0) tp.torsion.insert(x.indec);
    tp.free = right_orth(tp.torsion, m);
    tp.split = (tp.torsion | tp.free).count() == m.size();
    require_module_boundary(tp, m);
    return tp;
}

struct TransportBijection {
    Report report;
    std::vector<TorsionPair> class_b;
    std::vector<HeartPair> class_a;
    std::vector<TStructure> class_c;
};

/// Class (b): split torsion pairs of the truncated mod H with Pre torsion and
/// Post torsion-free, found by scanning every subset of the regular part.
/// Class (a): heart pairs with I_A torsion and P_A free, found by scanning
/// subsets of R_A. Class (c): block-threshold split aisles whose heart
/// contains Pre@0 and Post@1. chi, zeta and lift must match them up.
inline TransportBijection verify_theorem53(const TameModel& m, const std::vector<std::size_t>& tilting) {
    const Window w = m.window();
    const auto hm = heart_realization(tilting, m, w);
    TransportBijection out;

    std::vector<std::size_t> regular;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.component(i) == Component::Regular) regular.push_back(i);
    if (regular.size() > 20) throw UsageError("regular part too large for the exhaustive scan");

    for (std::size_t mask = 0; mask < (std::size_t{1} << regular.size()); ++mask) {
        TorsionPair tp{Subcategory(m.size()), Subcategory(m.size()), true};
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.component(i) == Component::Preinjective) tp.torsion.insert(i);
        for (std::size_t k = 0; k < regular.size(); ++k)
            if (mask >> k & 1U) tp.torsion.insert(regular[k]);
        tp.free = tp.torsion.complement();
        if (check_torsion_pair(tp, m).pass) out.class_b.push_back(tp);
    }

    std::vector<DerivedObject> r_a = hm.r_a;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r_a.size()); ++mask) {
        HeartPair hp{DerivedSubcategory(w, m.size()), DerivedSubcategory(w, m.size())};
        for (const auto& x : hm.i_a) hp.torsion.insert(x);
        for (const auto& x : hm.p_a) hp.free.insert(x);
        for (std::size_t k = 0; k < r_a.size(); ++k) (mask >> k & 1U ? hp.torsion : hp.free).insert(r_a[k]);
        const auto checks = check_heart_pair(hp, hm, m);
        if (std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }))
            out.class_a.push_back(hp);
    }

    const std::size_t nt = m.tube_count();
    const int span = w.hi - w.lo;
    std::vector<int> th(nt, w.lo + 1);
    for (;;) {
        BlockAisle a{1, 0, th};
        const auto ts = make_tstructure(a.restrict(m), m);
        bool c1 = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto k = m.module(i).kind;
            if (k == KKind::Pre && !ts.heart.contains({i, 0})) c1 = false;
            if (k == KKind::Post && !ts.heart.contains({i, 1})) c1 = false;
        }
        if (c1 && ts.split && generic_aisle_axioms(ts.aisle, m)) out.class_c.push_back(ts);
        std::size_t k = 0;
        while (k < nt && th[k] == w.lo + span) th[k++] = w.lo + 1;
        if (k == nt) break;
        ++th[k];
    }

    ReportEntry summary{"tilting transport", {m.truncation(), "T=" + detail::id_list(tilting, m)}, {}};
    auto sizes = Check::ok("equal cardinalities");
    if (out.class_a.size() != out.class_b.size() || out.class_b.size() != out.class_c.size())
        sizes.fail("|a|=" + std::to_string(out.class_a.size()) + " |b|=" + std::to_string(out.class_b.size()) +
                   " |c|=" + std::to_string(out.class_c.size()));
    auto comps = check_components(hm, m);
    summary.checks = {sizes, comps};
    for (const auto& warn : hm.warnings) summary.labels.push_back("warning: " + warn);
    out.report.push_back(std::move(summary));

    for (const auto& tp : out.class_b) {
        std::string name = "b:" + detail::id_list(tp.torsion.ids(), m);
        ReportEntry e{name, {}, {}};
        auto chi_ok = Check::ok("chi lands in class (a)");
        auto zc = Check::ok("zeta(chi(x)) = x");
        auto lift_ok = Check::ok("lift lands in class (c)");
        auto round = Check::ok("trace(lift(x)) = x");
        try {
            const auto hp = transport_chi(tp, hm, m);
            if (std::find(out.class_a.begin(), out.class_a.end(), hp) == out.class_a.end())
                chi_ok.fail("chi image is not an admissible heart pair");
            if (!(transport_zeta(hp, hm, m) == tp)) zc.fail("round trip changed the pair");
        } catch (const Error& err) {
            chi_ok.fail(err.what());
        }
        const auto ts = lift(tp, m, w);
        const bool found = std::any_of(out.class_c.begin(), out.class_c.end(), [&](const TStructure& c) {
            return c.aisle.equal_on_interior(ts.aisle);
        });
        if (!found) lift_ok.fail("lifted aisle is not among the enumerated t-structures");
        if (!(trace(ts, m) == tp)) round.fail("trace differs");
        e.checks = {chi_ok, zc, lift_ok, round};
        out.report.push_back(std::move(e));
    }
    for (const auto& hp : out.class_a) {
        ReportEntry e{"a:" + describe(hp.torsion, m), {}, {}};
        auto cz = Check::ok("chi(zeta(y)) = y");
        try {
            if (!(transport_chi(transport_zeta(hp, hm, m), hm, m) == hp)) cz.fail("round trip changed the pair");
        } catch (const Error& err) {
            cz.fail(err.what());
        }
        e.checks = {cz};
        out.report.push_back(std::move(e));
    }
    return out;
}

/// Falsifiability probe: chi with Post(0)@1-type objects (F(T)@1) moved from
/// the torsion side to the free side. The audit must reject it.
template <HereditaryModel M>
std::vector<Check> corrupted_chi_audit(const TorsionPair& tp, const HeartModel& hm, const M& m) {
    auto hp = chi_formula(tp, hm, m);
    for (auto f : hm.induced.free.ids()) {
        hp.torsion.erase({f, 1});
        hp.free.insert({f, 1});
    }
    return check_heart_pair(hp, hm, m);
}

}  // namespace splitt
