#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "splitt/indec_table.hpp"

using namespace splitt;

namespace {

// Positive roots as the positive solutions of the Tits form q(d) = 1,
// searched in a box (all Dynkin roots of rank <= 6 have coefficients <= 3).
std::set<DimensionVector> tits_roots(const Quiver& q, int bound) {
    std::set<DimensionVector> out;
    std::vector<int> d(q.vertex_count(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == d.size()) {
            int form = 0;
            for (int x : d) form += x * x;
            for (const auto& a : q.arrows()) form -= d[a.source] * d[a.target];
            if (form == 1) out.insert(DimensionVector(d));
            return;
        }
        for (int x = 0; x <= bound; ++x) {
            d[v] = x;
            rec(v + 1);
        }
    };
    rec(0);
    return out;
}

// Linear A_n, arrows i -> i+1: M[a,b] -> M[c,d] is nonzero iff c <= a <= d <= b.
int interval_hom(std::pair<int, int> x, std::pair<int, int> y) {
    return y.first <= x.first && x.first <= y.second && y.second <= x.second ? 1 : 0;
}

std::pair<int, int> interval_of(const DimensionVector& d) {
    int a = -1, b = -1;
    for (std::size_t v = 0; v < d.size(); ++v)
        if (d[v]) {
            if (a < 0) a = static_cast<int>(v);
            b = static_cast<int>(v);
        }
    return {a, b};
}

}  // namespace

TEST(IndecTable, CountsMatchPositiveRoots) {
    EXPECT_EQ(enumerate_indecomposables(builtin_quiver("a2")).size(), 3u);
    EXPECT_EQ(enumerate_indecomposables(builtin_quiver("a3")).size(), 6u);
    EXPECT_EQ(enumerate_indecomposables(builtin_quiver("d4")).size(), 12u);
    EXPECT_EQ(enumerate_indecomposables(builtin_quiver("e6")).size(), 36u);
}

TEST(IndecTable, DimensionVectorsAreTitsRoots) {
    for (const char* name : {"a3", "d4", "d5", "e6"}) {
        const Quiver q = builtin_quiver(name);
        const auto t = enumerate_indecomposables(q);
        std::set<DimensionVector> built;
        for (const auto& e : t.entries()) built.insert(e.dim);
        EXPECT_EQ(built, tits_roots(q, 3)) << name;
    }
}

TEST(IndecTable, A2Values) {
    const auto t = enumerate_indecomposables(builtin_quiver("a2"));
    const auto s1 = *t.find(DimensionVector({1, 0}));
    const auto s2 = *t.find(DimensionVector({0, 1}));
    const auto p1 = *t.find(DimensionVector({1, 1}));
    EXPECT_EQ(t.hom(p1, s1), 1);
    EXPECT_EQ(t.hom(s1, p1), 0);
    EXPECT_EQ(t.ext(s1, s2), 1);
    EXPECT_EQ(t.ext(s2, s1), 0);
    EXPECT_EQ(tau(s1, t), s2);
    EXPECT_FALSE(tau(p1, t).has_value());
    EXPECT_EQ(t.projective(0), p1);
    EXPECT_EQ(t.projective(1), s2);
    EXPECT_EQ(t.injective(0), s1);
    EXPECT_EQ(t.injective(1), p1);
    // tau_D(P_1@0) = I_1@(-1) = S_1@(-1)
    EXPECT_EQ(t.tau_derived({p1, 0}), (DerivedObject{s1, -1}));
    EXPECT_EQ(t.tau_inverse_derived({s1, -1}), (DerivedObject{p1, 0}));
}

TEST(IndecTable, LinearAnMatchesIntervalFormula) {
    for (const char* name : {"a3", "a4", "a5"}) {
        const auto t = enumerate_indecomposables(builtin_quiver(name));
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j)
                EXPECT_EQ(t.hom(i, j), interval_hom(interval_of(t.entry(i).dim), interval_of(t.entry(j).dim)))
                    << name << " " << t.label(i) << " -> " << t.label(j);
    }
}

TEST(IndecTable, ArQuiverA3) {
    const auto t = enumerate_indecomposables(builtin_quiver("a3"));
    // 2 arrows per mesh edge of the A3 AR quiver: 6 vertices, 6 arrows
    EXPECT_EQ(t.ar_arrows().size(), 6u);
    const auto p3 = *t.find(DimensionVector({0, 0, 1}));
    const auto p2 = *t.find(DimensionVector({0, 1, 1}));
    EXPECT_TRUE(std::count(t.ar_arrows().begin(), t.ar_arrows().end(), ArArrow{p3, p2}));
}

TEST(IndecTable, OrientationIndependentCounts) {
    Quiver q;
    for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
    q.add_arrow("a", 1, 0);
    q.add_arrow("b", 1, 2);
    q.add_arrow("c", 3, 2);
    const auto t = enumerate_indecomposables(q);
    EXPECT_EQ(t.size(), 10u);
    EXPECT_EQ(t.ar_arrows().size(), 12u);
}

TEST(IndecTable, TranslateIsCoxeterAndSerreHolds) {
    for (const char* name : {"a3", "d4", "e6"}) {
        const auto t = enumerate_indecomposables(builtin_quiver(name));
        std::size_t non_projective = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (!t.entry(i).tau) continue;
            ++non_projective;
            for (std::size_t j = 0; j < t.size(); ++j) EXPECT_EQ(t.ext(i, j), t.hom(j, *t.entry(i).tau));
        }
        EXPECT_EQ(non_projective, t.size() - t.rank());
    }
}

TEST(IndecTable, NonDynkinUnsupported) {
    EXPECT_THROW(enumerate_indecomposables(builtin_quiver("kronecker")), UnsupportedError);
}

TEST(IndecTable, OverrideBreaksInvariants) {
    const auto t = enumerate_indecomposables(builtin_quiver("a2"));
    for (const auto& c : check_table_invariants(t)) EXPECT_TRUE(c.pass) << c.name;
    const auto s1 = *t.find(DimensionVector({1, 0}));
    const auto s2 = *t.find(DimensionVector({0, 1}));
    const auto bad = t.with_hom_override(s1, s2, 1);
    bool any_failed = false;
    for (const auto& c : check_table_invariants(bad)) any_failed |= !c.pass;
    EXPECT_TRUE(any_failed);
}
