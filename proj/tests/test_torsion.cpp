#include <gtest/gtest.h>

#include <map>

#include "splitt/torsion.hpp"

using namespace splitt;

namespace {

// Number of torsion classes of a Dynkin type: prod (h + e_i + 1) / (e_i + 1)
// over the exponents e_i, h the Coxeter number.
long coxeter_catalan(int h, const std::vector<int>& exponents) {
    Rational r = 1;
    for (int e : exponents) {
        Rational f(h + e + 1, e + 1);
        f.canonicalize();
        r *= f;
    }
    return r.get_num().get_si();
}

Subcategory by_dims(const IndecTable& t, const std::vector<std::vector<int>>& dims) {
    Subcategory s(t.size());
    for (const auto& d : dims) s.insert(*t.find(DimensionVector(d)));
    return s;
}

}  // namespace

TEST(Torsion, OrthogonalsA2) {
    const auto t = enumerate_indecomposables(builtin_quiver("a2"));
    EXPECT_EQ(right_orth(by_dims(t, {{0, 1}}), t), by_dims(t, {{1, 0}}));
    EXPECT_EQ(left_orth(by_dims(t, {{1, 0}}), t), by_dims(t, {{0, 1}}));
    EXPECT_EQ(left_orth(by_dims(t, {{0, 1}, {1, 1}}), t), by_dims(t, {{1, 0}}));
    EXPECT_EQ(right_orth(Subcategory(t.size()), t), Subcategory::all(t.size()));
    EXPECT_EQ(left_orth(Subcategory(t.size()), t), Subcategory::all(t.size()));
    EXPECT_TRUE(right_orth(Subcategory::all(t.size()), t).empty());
}

TEST(Torsion, A2HasFivePairsFourSplit) {
    const auto t = enumerate_indecomposables(builtin_quiver("a2"));
    const auto pairs = enumerate_torsion_pairs(t);
    ASSERT_EQ(pairs.size(), 5u);
    std::vector<Subcategory> expected{Subcategory(3), by_dims(t, {{1, 0}}), by_dims(t, {{1, 0}, {1, 1}}),
                                      by_dims(t, {{0, 1}}), Subcategory::all(3)};
    std::size_t split = 0;
    for (const auto& tp : pairs) {
        EXPECT_NE(std::find(expected.begin(), expected.end(), tp.torsion), expected.end());
        split += tp.split;
        if (tp.torsion == by_dims(t, {{0, 1}})) {
            EXPECT_FALSE(tp.split);
        }
    }
    EXPECT_EQ(split, 4u);
}

TEST(Torsion, CountsMatchCoxeterCatalan) {
    EXPECT_EQ(enumerate_torsion_pairs(enumerate_indecomposables(builtin_quiver("a3"))).size(),
              static_cast<std::size_t>(coxeter_catalan(4, {1, 2, 3})));
    EXPECT_EQ(enumerate_torsion_pairs(enumerate_indecomposables(builtin_quiver("a4"))).size(),
              static_cast<std::size_t>(coxeter_catalan(5, {1, 2, 3, 4})));
    EXPECT_EQ(enumerate_torsion_pairs(enumerate_indecomposables(builtin_quiver("d4"))).size(),
              static_cast<std::size_t>(coxeter_catalan(6, {1, 3, 3, 5})));
}

TEST(Torsion, E6ByNextClosure) {
    const auto t = enumerate_indecomposables(builtin_quiver("e6"));
    const auto pairs = enumerate_torsion_pairs(t);
    EXPECT_EQ(pairs.size(), static_cast<std::size_t>(coxeter_catalan(12, {1, 4, 5, 7, 8, 11})));
    for (std::size_t k = 1; k < pairs.size(); ++k) EXPECT_TRUE(mask_less(pairs[k - 1].torsion, pairs[k].torsion));
}

TEST(Torsion, NextClosureAgreesWithBruteForce) {
    for (const char* name : {"a2", "a3", "a4", "d4"}) {
        const auto t = enumerate_indecomposables(builtin_quiver(name));
        EXPECT_EQ(enumerate_torsion_pairs_brute_force(t), enumerate_torsion_pairs_next_closure(t)) << name;
    }
}

TEST(Torsion, EveryPairPassesInvariantsAndOracle) {
    for (const char* name : {"a2", "a3", "d4"}) {
        const auto t = enumerate_indecomposables(builtin_quiver(name));
        for (const auto& tp : enumerate_torsion_pairs(t)) {
            EXPECT_TRUE(check_torsion_pair(tp, t).pass);
            for (std::size_t y = 0; y < t.size(); ++y) {
                const auto cs = canonical_sequence_oracle(y, tp, t);
                EXPECT_FALSE(cs.falsification.has_value()) << name << " " << *cs.falsification;
                for (std::size_t v = 0; v < t.rank(); ++v)
                    EXPECT_EQ(cs.trace.dims[v] + cs.quotient.dims[v], t.entry(y).rep.dims[v]);
                if (tp.torsion.contains(y)) {
                    EXPECT_TRUE(cs.quotient.is_zero());
                }
                if (tp.free.contains(y)) {
                    EXPECT_TRUE(cs.trace.is_zero());
                }
            }
        }
    }
}

TEST(Torsion, CanonicalSequenceOfP1) {
    const auto t = enumerate_indecomposables(builtin_quiver("a2"));
    const auto tp = torsion_pair_generated_by(by_dims(t, {{0, 1}}), t);
    const auto cs = canonical_sequence_oracle(*t.find(DimensionVector({1, 1})), tp, t);
    EXPECT_EQ(cs.trace.dimension_vector(), DimensionVector({0, 1}));
    EXPECT_EQ(cs.quotient.dimension_vector(), DimensionVector({1, 0}));
}

TEST(Torsion, OracleFalsifiesNonPair) {
    const auto t = enumerate_indecomposables(builtin_quiver("a2"));
    // ({P_1}, {S_1}) is Hom-orthogonal in neither direction's closure: P_1 -> S_1 is nonzero
    TorsionPair bogus{by_dims(t, {{1, 1}}), by_dims(t, {{1, 0}}), false};
    EXPECT_FALSE(check_torsion_pair(bogus, t).pass);
    const auto cs = canonical_sequence_oracle(*t.find(DimensionVector({1, 1})), bogus, t);
    EXPECT_TRUE(cs.falsification.has_value());
}

TEST(Torsion, ClosureIsIdempotent) {
    const auto t = enumerate_indecomposables(builtin_quiver("a3"));
    for (std::uint64_t mask = 0; mask < (1U << t.size()); ++mask) {
        const auto s = Subcategory::from_mask(t.size(), mask);
        const auto once = left_orth(right_orth(s, t), t);
        EXPECT_EQ(left_orth(right_orth(once, t), t), once);
    }
}

TEST(Torsion, TorsionClassesFormALattice) {
    const auto t = enumerate_indecomposables(builtin_quiver("a3"));
    const auto pairs = enumerate_torsion_pairs(t);
    for (const auto& a : pairs)
        for (const auto& b : pairs) {
            const auto meet = a.torsion & b.torsion;
            EXPECT_EQ(left_orth(right_orth(meet, t), t), meet);
        }
}

TEST(Torsion, DualityWithOppositeQuiver) {
    for (const char* name : {"a3", "d4"}) {
        const Quiver q = builtin_quiver(name);
        const auto t = enumerate_indecomposables(q);
        const auto op = enumerate_indecomposables(q.opposite());
        // D sends a module to one with the same dimension vector
        auto translate = [&](const Subcategory& s) {
            Subcategory out(op.size());
            for (auto i : s.ids()) out.insert(*op.find(t.entry(i).dim));
            return out;
        };
        std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> dual;
        for (const auto& tp : enumerate_torsion_pairs(op)) dual.insert({tp.torsion.ids(), tp.free.ids()});
        const auto pairs = enumerate_torsion_pairs(t);
        EXPECT_EQ(pairs.size(), dual.size());
        for (const auto& tp : pairs) EXPECT_TRUE(dual.count({translate(tp.free).ids(), translate(tp.torsion).ids()}));
    }
}
