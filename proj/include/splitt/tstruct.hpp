#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "splitt/derived.hpp"
#include "splitt/errors.hpp"
#include "splitt/indec_table.hpp"
#include "splitt/model.hpp"
#include "splitt/report.hpp"
#include "splitt/torsion.hpp"

namespace splitt {

/// An aisle U together with U^perp, the heart U ∩ U^perp[1] and the split
/// flag. The coaisle is perp shifted by one.
struct TStructure {
    DerivedSubcategory aisle;
    DerivedSubcategory perp;
    DerivedSubcategory heart;
    bool split = false;

    const Window& window() const { return aisle.window(); }
};

namespace detail {

template <HereditaryModel M>
DerivedSubcategory heart_of(const DerivedSubcategory& aisle, const DerivedSubcategory& perp, const M& m) {
    const Window w = aisle.window();
    DerivedSubcategory h(w, m.size());
    for (int d = w.lo + 1; d < w.hi; ++d)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (aisle.contains({i, d}) && perp.contains({i, d - 1})) h.insert({i, d});
    return h;
}

template <HereditaryModel M>
bool split_on_interior(const DerivedSubcategory& aisle, const DerivedSubcategory& perp, const M& m) {
    const Window w = aisle.window();
    for (int d = w.lo + 1; d < w.hi; ++d)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (!aisle.contains({i, d}) && !perp.contains({i, d})) return false;
    return true;
}

}  // namespace detail

/// Completes an aisle to a TStructure (right orthogonal, heart, split flag).
template <HereditaryModel M>
TStructure make_tstructure(DerivedSubcategory aisle, const M& m) {
    TStructure ts;
    ts.perp = right_orthogonal(aisle, m);
    ts.heart = detail::heart_of(aisle, ts.perp, m);
    ts.split = detail::split_on_interior(aisle, ts.perp, m);
    ts.aisle = std::move(aisle);
    return ts;
}

/// Aisle T@0 ∪ H[j] for j > 0, perp H[j] for j < 0 ∪ F@0.
template <HereditaryModel M>
TStructure lift(const TorsionPair& tp, const M& m, Window w) {
    w.validate();
    TStructure ts;
    ts.aisle = DerivedSubcategory::degrees_from(w, m.size(), 1);
    ts.perp = DerivedSubcategory::degrees_up_to(w, m.size(), -1);
    ts.heart = DerivedSubcategory(w, m.size());
    for (auto i : tp.torsion.ids()) {
        ts.aisle.insert({i, 0});
        ts.heart.insert({i, 0});
    }
    for (auto j : tp.free.ids()) {
        ts.perp.insert({j, 0});
        ts.heart.insert({j, 1});
    }
    ts.split = tp.split;
    return ts;
}

/// Degree-0 parts of U and U^perp. Requires H[1] ⊆ U and H[-1] ⊆ U^perp.
template <HereditaryModel M>
TorsionPair trace(const TStructure& ts, const M& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!ts.aisle.contains({i, 1}))
            throw PreconditionError("trace needs H[1] in the aisle; missing " + object_label(m, DerivedObject{i, 1}));
        if (!ts.perp.contains({i, -1}))
            throw PreconditionError("trace needs H[-1] in the right orthogonal; missing " +
                                    object_label(m, DerivedObject{i, -1}));
    }
    TorsionPair tp{Subcategory(m.size()), Subcategory(m.size()), false};
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (ts.aisle.contains({i, 0})) tp.torsion.insert(i);
        if (ts.perp.contains({i, 0})) tp.free.insert(i);
    }
    tp.split = (tp.torsion | tp.free).count() == m.size();
    return tp;
}

struct Verdict {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
    static Verdict failure(std::string r) { return {false, std::move(r)}; }
};

/// Window version of the aisle axioms: (i) closed under [1], (ii) U equals
/// ^perp(U^perp) on interior degrees, (iii) every interior object has an
/// approximation triangle, certified by the canonical sequence at the degree
/// where the trace hypotheses hold, by splitness elsewhere.
inline Verdict is_aisle_window(const DerivedSubcategory& s, const IndecTable& t) {
    const Window w = s.window();
    try {
        s.validate();
    } catch (const ConsistencyError& e) {
        return Verdict::failure(e.what());
    }
    for (const auto& x : s.members()) {
        if (x.degree == w.hi) {
            if (!s.upper_tail) return Verdict::failure(object_label(t, x) + " has its shift outside the subcategory");
        } else if (!s.contains(shift(x, 1))) {
            return Verdict::failure(object_label(t, x) + " has its shift " + object_label(t, shift(x, 1)) + " outside");
        }
    }
    const auto perp = right_orthogonal(s, t);
    const auto closure = left_orthogonal(perp, t);
    for (int d = w.lo + 1; d < w.hi; ++d)
        for (std::size_t i = 0; i < t.size(); ++i)
            if (s.contains({i, d}) != closure.contains({i, d}))
                return Verdict::failure(object_label(t, DerivedObject{i, d}) +
                                        (s.contains({i, d}) ? " is in U but not in ^perp(U^perp)"
                                                            : " is in ^perp(U^perp) but not in U"));

    // Degree k where H[k+1] ⊆ U and H[k-1] ⊆ U^perp: every other degree lies
    // wholly on one side, and degree k is a torsion pair up to shift.
    for (int k = w.lo + 1; k < w.hi; ++k) {
        if (!s.all_at(k + 1) || !perp.all_at(k - 1)) continue;
        TorsionPair tp{Subcategory(t.size()), Subcategory(t.size()), false};
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (s.contains({i, k})) tp.torsion.insert(i);
            if (perp.contains({i, k})) tp.free.insert(i);
        }
        tp.split = (tp.torsion | tp.free).count() == t.size();
        if (auto c = check_torsion_pair(tp, t); !c.pass)
            return Verdict::failure("trace at degree " + std::to_string(k) + ": " + *c.witness);
        for (std::size_t y = 0; y < t.size(); ++y)
            if (auto cs = canonical_sequence_oracle(y, tp, t); cs.falsification)
                return Verdict::failure(object_label(t, DerivedObject{y, k}) + ": " + *cs.falsification);
        return {};
    }
    if (!detail::split_on_interior(s, perp, t))
        for (int d = w.lo + 1; d < w.hi; ++d)
            for (std::size_t i = 0; i < t.size(); ++i)
                if (!s.contains({i, d}) && !perp.contains({i, d}))
                    return Verdict::failure("no approximation triangle certified for " +
                                            object_label(t, DerivedObject{i, d}));
    return {};
}

/// Interior aisle members X with tau_D X in U^perp. Cross-checked against
/// Hom(X, Y[1]) = 0 for every Y in U.
template <HereditaryModel M>
std::vector<DerivedObject> ext_projectives(const TStructure& ts, const M& m, bool interior_only = true) {
    const Window w = ts.window();
    std::vector<DerivedObject> out;
    for (const auto& x : ts.aisle.members()) {
        if (interior_only && !w.interior(x.degree)) continue;
        const auto tx = m.tau_derived(x);
        if (!tx) throw TruncationError("tau_D of " + object_label(m, x) + " leaves the model");
        const bool criterion = ts.perp.contains(*tx);
        bool definition = true;
        for (int d = x.degree - 1; d <= x.degree && definition; ++d)
            for (std::size_t j = 0; j < m.size(); ++j)
                if (ts.aisle.contains({j, d}) && hom_derived(x, DerivedObject{j, d + 1}, m) != 0) {
                    definition = false;
                    break;
                }
        if (criterion != definition)
            throw ConsistencyError("Ext-projective criterion and definition disagree at " + object_label(m, x));
        if (criterion) out.push_back(x);
    }
    return out;
}

/// One member per tau_D-orbit and the presection condition on arrows.
inline Verdict section_check(const std::vector<DerivedObject>& s, const IndecTable& t, const DerivedArQuiver& g) {
    const std::set<DerivedObject> members(s.begin(), s.end());
    std::vector<std::size_t> hits(g.orbit_count(), 0);
    for (const auto& x : members) {
        if (!g.window().interior(x.degree)) return Verdict::failure(object_label(t, x) + " is not interior");
        ++hits[g.orbit_of(x)];
    }
    for (std::size_t k = 0; k < hits.size(); ++k)
        if (hits[k] != 1)
            return Verdict::failure("orbit of " + object_label(t, DerivedObject{t.projective(k), 0}) + " met " +
                                    std::to_string(hits[k]) + " times");
    for (const auto& [x, y] : g.arrows()) {
        if (members.count(x) && !members.count(y) && !members.count(*t.tau_derived(y)))
            return Verdict::failure("arrow " + object_label(t, x) + " -> " + object_label(t, y) + " leaves the section");
        if (members.count(y) && !members.count(x) && !members.count(*t.tau_inverse_derived(x)))
            return Verdict::failure("arrow " + object_label(t, x) + " -> " + object_label(t, y) + " enters the section");
    }
    return {};
}

/// Closure of s under AR arrows inside the window.
inline DerivedSubcategory successors(const std::vector<DerivedObject>& s, const IndecTable& t, const DerivedArQuiver& g) {
    DerivedSubcategory out(g.window(), t.size());
    std::deque<DerivedObject> queue(s.begin(), s.end());
    for (const auto& x : s) out.insert(x);
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (const auto& y : g.successors(x))
            if (!out.contains(y)) {
                out.insert(y);
                queue.push_back(y);
            }
    }
    out.upper_tail = out.any_at(g.window().hi);
    return out;
}

struct Semipath {
    bool found = false;
    bool conservative = false;  // negative answer that may depend on the window
    std::vector<DerivedObject> path;
};

namespace detail {

/// Breadth-first search along nonzero morphisms between distinct objects and
/// jumps A -> A[1], from every source at once. Sources are already one edge
/// into the walk. Degrees never decrease along an edge.
template <HereditaryModel M>
Semipath semipath_search(const std::vector<DerivedObject>& sources, const std::function<bool(DerivedObject)>& is_target,
                         const M& m, Window w) {
    std::map<DerivedObject, DerivedObject> parent;
    std::deque<DerivedObject> queue;
    for (const auto& s : sources)
        if (w.contains(s.degree) && parent.emplace(s, s).second) queue.push_back(s);
    Semipath out;
    bool touched_top = false;
    auto finish = [&](DerivedObject y) {
        out.found = true;
        for (auto cur = y;; cur = parent.at(cur)) {
            out.path.push_back(cur);
            if (parent.at(cur) == cur) break;
        }
        std::reverse(out.path.begin(), out.path.end());
    };
    while (!queue.empty()) {
        const auto a = queue.front();
        queue.pop_front();
        if (is_target(a)) {
            finish(a);
            return out;
        }
        std::vector<DerivedObject> next;
        if (a.degree == w.hi) touched_top = true;
        for (int d = a.degree; d <= a.degree + 1; ++d) {
            if (!w.contains(d)) continue;
            for (std::size_t j = 0; j < m.size(); ++j) {
                const DerivedObject b{j, d};
                if (b == a) continue;
                if (hom_derived(a, b, m) != 0 || b == shift(a, 1)) next.push_back(b);
            }
        }
        for (const auto& b : next)
            if (parent.emplace(b, a).second) queue.push_back(b);
    }
    out.conservative = touched_top;
    return out;
}

}  // namespace detail

/// Is there a chain of nonzero non-identity morphisms and shift jumps from x
/// to y (of length at least one)?
template <HereditaryModel M>
Semipath semipath_exists(DerivedObject x, DerivedObject y, const M& m, Window w) {
    std::vector<DerivedObject> firsts;
    for (int d = x.degree; d <= x.degree + 1; ++d) {
        if (!w.contains(d)) continue;
        for (std::size_t j = 0; j < m.size(); ++j) {
            const DerivedObject b{j, d};
            if (b != x && (hom_derived(x, b, m) != 0 || b == shift(x, 1))) firsts.push_back(b);
        }
    }
    auto r = detail::semipath_search<M>(firsts, [&](DerivedObject z) { return z == y; }, m, w);
    if (r.found) r.path.insert(r.path.begin(), x);
    r.conservative = !r.found && r.conservative && y.degree >= w.hi;
    return r;
}

/// No semipath from an interior aisle member to an interior member of U^perp.
template <HereditaryModel M>
Check verify_lemma42(const TStructure& ts, const M& m) {
    if (!ts.split) throw PreconditionError("semipath check needs a split t-structure");
    const Window w = ts.window();
    auto c = Check::ok("no semipath from U to U^perp");
    std::vector<DerivedObject> sources;
    for (const auto& x : ts.aisle.members())
        if (w.interior(x.degree)) sources.push_back(x);
    // Multi-source search; a source counts as reached only through an edge.
    std::vector<DerivedObject> firsts;
    std::map<DerivedObject, DerivedObject> origin;
    for (const auto& x : sources)
        for (int d = x.degree; d <= x.degree + 1; ++d) {
            if (!w.contains(d)) continue;
            for (std::size_t j = 0; j < m.size(); ++j) {
                const DerivedObject b{j, d};
                if (b != x && (hom_derived(x, b, m) != 0 || b == shift(x, 1)) && origin.emplace(b, x).second)
                    firsts.push_back(b);
            }
        }
    const auto r = detail::semipath_search<M>(
        firsts, [&](DerivedObject z) { return w.interior(z.degree) && ts.perp.contains(z); }, m, w);
    if (r.found) {
        std::string witness = object_label(m, origin.at(r.path.front()));
        for (const auto& z : r.path) witness += " -> " + object_label(m, z);
        c.fail(witness);
    }
    return c;
}

/// Interior X with no semipath from X[1] back to X.
template <HereditaryModel M>
std::vector<DerivedObject> ringel_criterion(const M& m, Window w) {
    std::vector<DerivedObject> out;
    for (int d = w.lo + 1; d < w.hi; ++d)
        for (std::size_t i = 0; i < m.size(); ++i) {
            const DerivedObject x{i, d};
            const auto r = semipath_exists(shift(x, 1), x, m, w);
            if (r.conservative) throw ConsistencyError("Ringel witness " + object_label(m, x) + " is boundary-dependent");
            if (!r.found) out.push_back(x);
        }
    return out;
}

inline std::vector<DerivedObject> heart_indecomposables(const TStructure& ts) { return ts.heart.members(); }

/// For split ts: U closed under [-1] on the interior iff the heart is zero.
template <HereditaryModel M>
Check verify_lemma41(const TStructure& ts, const M& m) {
    if (!ts.split) throw PreconditionError("zero-heart check needs a split t-structure");
    const Window w = ts.window();
    bool down_closed = true;
    std::string witness;
    for (int d = w.lo + 1; d < w.hi && down_closed; ++d)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (ts.aisle.contains({i, d}) && !ts.aisle.contains({i, d - 1})) {
                down_closed = false;
                witness = object_label(m, DerivedObject{i, d});
                break;
            }
    const bool heart_zero = ts.heart.count() == 0;
    auto c = Check::ok("triangulated iff zero heart");
    if (down_closed != heart_zero)
        c.fail(down_closed ? "aisle is shift-closed but the heart contains " + object_label(m, ts.heart.members().front())
                           : "heart is zero but " + witness + " has its [-1] outside the aisle");
    return c;
}

/// Tilting-complex checks on a set E (normally the Ext-projectives): E in the heart,
/// Hom(e, e'[s]) = 0 for s != 0 within the window, signed dimension vectors
/// of full rank.
inline std::vector<Check> verify_cor64(const std::vector<DerivedObject>& e, const TStructure& ts, const IndecTable& t) {
    const Window w = ts.window();
    auto in_heart = Check::ok("E in heart"), orth = Check::ok("E shift-self-orthogonal"),
         rank_check = Check::ok("signed dimension vectors span");
    for (const auto& x : e)
        if (!ts.heart.contains(x)) in_heart.fail(object_label(t, x) + " is not in the heart");
    for (const auto& x : e)
        for (const auto& y : e)
            for (int s = w.lo - y.degree; s <= w.hi - y.degree; ++s)
                if (s != 0 && hom_derived(x, shift(y, s), t) != 0)
                    orth.fail("Hom(" + object_label(t, x) + ", " + object_label(t, shift(y, s)) + ") != 0");
    std::vector<std::vector<Rational>> rows;
    for (const auto& x : e) {
        std::vector<Rational> r;
        for (int c : t.entry(x.indec).dim.coords) r.emplace_back(x.degree % 2 == 0 ? c : -c);
        rows.push_back(std::move(r));
    }
    if (const auto r = span_rank(rows, t.rank()); r != t.rank())
        rank_check.fail("rank " + std::to_string(r) + " < " + std::to_string(t.rank()));
    return {in_heart, orth, rank_check};
}

struct SplitClassification {
    TStructure ts;
    std::vector<DerivedObject> ext_projectives;  // over the whole window
    std::string label;                           // "section", "zero-heart" or "boundary"
    std::vector<Check> checks;
};

/// Every split aisle in the window that contains all of degree hi (upper
/// tail) and nothing at degree lo. A split aisle is closed under AR arrows,
/// so it meets each tau_D-orbit in a final segment; the candidates are
/// enumerated as one cut per orbit, then filtered by the aisle and split
/// tests. Survivors with interior Ext-projectives must have |Q_0| of them,
/// forming a section whose successors are U.
inline std::vector<SplitClassification> classify_split(const IndecTable& t, const DerivedArQuiver& g) {
    const Window w = g.window();
    const std::size_t orbits = g.orbit_count();
    std::vector<std::size_t> lo_cut(orbits), hi_cut(orbits);
    for (std::size_t k = 0; k < orbits; ++k) {
        const auto& line = g.orbit_line(k);
        std::size_t a = 0;
        while (a < line.size() && line[a].degree == w.lo) ++a;
        std::size_t b = line.size();
        while (b > 0 && line[b - 1].degree == w.hi) --b;
        lo_cut[k] = a;  // first position allowed in U
        hi_cut[k] = b;  // positions >= b must be in U
    }

    std::vector<DerivedSubcategory> candidates;
    std::vector<std::size_t> cut(orbits);
    DerivedSubcategory current(w, t.size());
    auto arrows_ok = [&](std::size_t upto) {
        for (const auto& [x, y] : g.arrows()) {
            if (g.orbit_of(x) > upto || g.orbit_of(y) > upto) continue;
            if (current.contains(x) && !current.contains(y)) return false;
        }
        return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == orbits) {
            auto c = current;
            c.upper_tail = true;
            candidates.push_back(std::move(c));
            return;
        }
        const auto& line = g.orbit_line(k);
        for (std::size_t c = lo_cut[k]; c <= hi_cut[k]; ++c) {
            for (std::size_t p = 0; p < line.size(); ++p) current.set(line[p], p >= c);
            if (arrows_ok(k)) rec(k + 1);
        }
        for (const auto& x : line) current.erase(x);
    };
    rec(0);

    std::vector<SplitClassification> out;
    for (auto& aisle : candidates) {
        if (!is_aisle_window(aisle, t)) continue;
        auto ts = make_tstructure(aisle, t);
        if (!ts.split) continue;
        SplitClassification sc;
        sc.ext_projectives = ext_projectives(ts, t, false);
        const bool boundary = std::any_of(sc.ext_projectives.begin(), sc.ext_projectives.end(),
                                          [&](const DerivedObject& x) { return !w.interior(x.degree); });
        if (boundary) {
            sc.label = "boundary";
        } else if (sc.ext_projectives.empty()) {
            sc.label = "zero-heart";
            auto c = Check::ok("no Ext-projectives: zero heart, tail aisle");
            if (ts.heart.count() != 0) c.fail("heart contains " + object_label(t, ts.heart.members().front()));
            bool tail = false;
            for (int k = w.lo; k <= w.hi + 1 && !tail; ++k)
                tail = ts.aisle.equal_on_interior(DerivedSubcategory::degrees_from(w, t.size(), k));
            if (!tail) c.fail("aisle is not a tail");
            sc.checks.push_back(c);
        } else {
            sc.label = "section";
            auto size = Check::ok("|E| = |Q_0|");
            if (sc.ext_projectives.size() != t.rank())
                size.fail(std::to_string(sc.ext_projectives.size()) + " Ext-projectives");
            auto section = Check::ok("E is a section");
            if (auto v = section_check(sc.ext_projectives, t, g); !v) section.fail(v.reason);
            auto succ = Check::ok("Succ E = U");
            if (!successors(sc.ext_projectives, t, g).equal_on_interior(ts.aisle))
                succ.fail("successors of E differ from the aisle");
            sc.checks = {size, section, succ};
        }
        sc.ts = std::move(ts);
        out.push_back(std::move(sc));
    }
    return out;
}

/// Label for reports: interior members of a derived subcategory by degree.
template <HereditaryModel M>
std::string describe(const DerivedSubcategory& s, const M& m) {
    std::string out;
    for (const auto& x : s.members()) {
        if (!s.window().interior(x.degree)) continue;
        if (!out.empty()) out += ' ';
        out += object_label(m, x);
    }
    if (s.upper_tail) out += out.empty() ? "+tail" : " +tail";
    return out.empty() ? "0" : out;
}

}  // namespace splitt
