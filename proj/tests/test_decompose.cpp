#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "tautilt/decompose.hpp"
#include "tautilt/error.hpp"

using namespace tautilt;
using fixtures::from_maps;

namespace {

std::map<std::string, std::size_t> class_counts(const DecompositionResult& d) {
    std::map<std::string, std::size_t> out;
    for (const auto& c : d.classes) out[c.module.label()] += c.multiplicity;
    return out;
}

void expect_split_identity(const Representation& m, const DecompositionResult& d) {
    Morphism sum = zero_morphism(m, m);
    for (const auto& s : d.parts) {
        EXPECT_TRUE(is_morphism(s.module, m, s.inclusion));
        EXPECT_TRUE(is_morphism(m, s.module, s.projection));
        EXPECT_TRUE(compose(s.projection, s.inclusion) == identity_morphism(s.module));
        EXPECT_TRUE(is_indecomposable(s.module));
        sum = add(sum, compose(s.inclusion, s.projection));
    }
    EXPECT_EQ(sum, identity_morphism(m));
}

Representation scramble(const Representation& m, std::uint64_t seed) { return conjugate(m, random_base_change(m, seed)); }

}  // namespace

TEST(EndRing, Dimensions) {
    const auto k = fixtures::load("a2.alg");
    const auto p1 = projective(k, 0);
    const auto e = endomorphism_ring(direct_sum_module({p1, p1}));
    EXPECT_EQ(e.dim(), 4u);
    EXPECT_EQ(e.top_dim(), 4u);
    const auto e2 = endomorphism_ring(direct_sum_module({p1, projective(k, 1)}));
    EXPECT_EQ(e2.dim(), 3u);
    EXPECT_EQ(e2.top_dim(), 2u);
    EXPECT_FALSE(is_indecomposable(Representation::zero(k)));
}

TEST(Decompose, MatrixRingSummand) {
    const auto k = fixtures::load("a2.alg");
    const auto p1 = projective(k, 0);
    const auto m = scramble(direct_sum_module({p1, p1}), 4);
    const auto d = decompose(m);
    ASSERT_EQ(d.classes.size(), 1u);
    EXPECT_EQ(d.classes[0].module.label(), "11");
    EXPECT_EQ(d.classes[0].multiplicity, 2u);
    expect_split_identity(m, d);
}

TEST(Decompose, ConjugatedSumOverLinearA3) {
    const auto lin = fixtures::load("a3lin.alg");
    const auto m = scramble(direct_sum_module({simple(lin, 1), projective(lin, 0)}), 17);
    const auto d = decompose(m);
    EXPECT_EQ(class_counts(d), (std::map<std::string, std::size_t>{{"010", 1}, {"111", 1}}));
    expect_split_identity(m, d);
}

TEST(Decompose, RegularModulesAreKrullSchmidt) {
    for (const char* f : {"a2.alg", "a3lin.alg", "a3rel.alg", "skewed.alg", "wild4.alg", "kronecker.alg"}) {
        const auto a = fixtures::load(f);
        const auto m = scramble(regular(a), 23);
        const auto d = decompose(m, 1);
        EXPECT_EQ(d.parts.size(), static_cast<std::size_t>(a->vertex_count())) << f;
        expect_split_identity(m, d);
        for (int i = 0; i < a->vertex_count(); ++i) {
            std::size_t hits = 0;
            for (const auto& c : d.classes) hits += isomorphic(c.module, projective(a, i)) ? 1 : 0;
            EXPECT_EQ(hits, 1u) << f << " P" << i + 1;
        }
    }
}

TEST(Decompose, SkewedIndecomposables) {
    const auto skew = fixtures::load("skewed.alg");
    // a, b, c with b*a = 0
    const auto m121 = from_maps(skew, {1, 2, 1}, {{{1}, {0}}, {{0, 1}}, {{1}}});
    ASSERT_TRUE(validate(m121).ok);
    EXPECT_TRUE(is_indecomposable(m121));
    EXPECT_TRUE(is_indecomposable(scramble(m121, 3)));
    const auto p1 = from_maps(skew, {1, 1, 1}, {{{1}}, {}, {{1}}});
    const auto other = from_maps(skew, {1, 1, 1}, {{}, {{1}}, {{1}}});
    EXPECT_TRUE(isomorphic(p1, projective(skew, 0)));
    EXPECT_TRUE(is_indecomposable(other));
    EXPECT_FALSE(isomorphic(p1, other));
}

TEST(Decompose, KroneckerEigenvalues) {
    const auto kr = fixtures::load("kronecker.alg");
    // R(lambda) has x = 1, y = lambda
    const auto r2 = from_maps(kr, {1, 1}, {{{1}}, {{2}}});
    const auto r3 = from_maps(kr, {1, 1}, {{{1}}, {{3}}});
    const auto m = scramble(direct_sum_module({r2, r3, r2}), 8);
    const auto d = decompose(m);
    EXPECT_EQ(d.parts.size(), 3u);
    EXPECT_EQ(d.classes.size(), 2u);
    expect_split_identity(m, d);
    // a Jordan block is indecomposable
    const auto jordan = from_maps(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{2, 1}, {0, 2}}});
    EXPECT_TRUE(is_indecomposable(jordan));
    EXPECT_FALSE(isomorphic(jordan, direct_sum_module({r2, r2})));
}

TEST(Decompose, IrrationalEndomorphismRingIsDomainError) {
    const auto kr = fixtures::load("kronecker.alg");
    // End is Q(sqrt 2)
    const auto m = from_maps(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{0, 2}, {1, 0}}});
    EXPECT_FALSE(is_indecomposable(m));
    try {
        (void)decompose(m);
        ADD_FAILURE() << "expected failure";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("non-split endomorphism ring"), std::string::npos);
    }
}

TEST(IsoTest, RandomBaseChange) {
    const auto skew = fixtures::load("skewed.alg");
    const auto m = direct_sum_module({projective(skew, 0), injective(skew, 2), simple(skew, 1)});
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto n = scramble(m, s);
        const auto f = iso_test(m, n, s);
        ASSERT_TRUE(f);
        EXPECT_TRUE(is_morphism(m, n, *f));
        EXPECT_TRUE(is_isomorphism(*f));
    }
    EXPECT_FALSE(iso_test(m, direct_sum_module({projective(skew, 0), projective(skew, 0), simple(skew, 1)})));
}
