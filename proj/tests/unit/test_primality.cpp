#include <gtest/gtest.h>

#include <random>

#include "circprime/errors.hpp"
#include "circprime/minpoly.hpp"
#include "circprime/primality.hpp"
#include "oracle.hpp"

namespace circprime {
namespace {

TEST(CirculantFull, Examples) {
    const auto v97 = is_prime_circulant_full(97);
    EXPECT_TRUE(v97.is_prime);
    EXPECT_EQ(v97.evidence, Evidence(evidence::OrbitCount{2}));

    const auto v101 = is_prime_circulant_full(101);
    EXPECT_TRUE(v101.is_prime);
    EXPECT_EQ(v101.evidence, Evidence(evidence::OrbitCount{2}));

    const auto v90 = is_prime_circulant_full(90);
    EXPECT_FALSE(v90.is_prime);
    EXPECT_EQ(v90.evidence, Evidence(evidence::SmallPrimeDivisor{2}));

    ASSERT_TRUE(oracle::brute_is_prime(1'000'003));
    const auto big = is_prime_circulant_full(1'000'003);
    EXPECT_TRUE(big.is_prime);
    EXPECT_EQ(big.evidence, Evidence(evidence::FactorizationShape{}));

    EXPECT_TRUE(is_prime_circulant_full(2).is_prime);
    EXPECT_TRUE(is_prime_circulant_full(3).is_prime);
    EXPECT_THROW(is_prime_circulant_full(1), DomainError);
}

TEST(CirculantFull, OrbitBranchSeesCompositesWithoutSmallFactors) {
    const auto v = is_prime_circulant_full(101 * 103);
    EXPECT_FALSE(v.is_prime);
    EXPECT_EQ(v.evidence, Evidence(evidence::OrbitCount{4}));
    const auto sq = is_prime_circulant_full(101 * 101);
    EXPECT_FALSE(sq.is_prime);
    EXPECT_EQ(sq.evidence, Evidence(evidence::OrbitCount{3}));
}

TEST(CirculantFull, BranchThresholdIsConfigurable) {
    CirculantOptions low;
    low.branch_threshold = 1000;
    const auto v = is_prime_circulant_full(1009, low);
    EXPECT_TRUE(v.is_prime);
    EXPECT_EQ(v.evidence, Evidence(evidence::FactorizationShape{}));
    EXPECT_EQ(is_prime_circulant_full(1009).evidence, Evidence(evidence::OrbitCount{2}));
}

TEST(CirculantFull, AgreesWithFactorCountOnOrbitBranch) {
    for (u64 n = 3; n <= 300; ++n) {
        const auto v = is_prime_circulant_full(n);
        if (!std::holds_alternative<evidence::OrbitCount>(v.evidence)) continue;
        ASSERT_EQ(v.is_prime, factor_count(n) == 2) << n;
    }
}

TEST(SimplifiedFactorCount, Examples) {
    EXPECT_EQ(simplified_factor_count(7), 2u);
    EXPECT_EQ(simplified_factor_count(12), 5u);
    EXPECT_EQ(simplified_factor_count(25), 3u);
    EXPECT_EQ(simplified_factor_count(6), 4u);
    EXPECT_THROW(simplified_factor_count(1), DomainError);
}

TEST(CirculantSimplified, Examples) {
    EXPECT_TRUE(is_prime_circulant_simplified(97).is_prime);
    const auto v49 = is_prime_circulant_simplified(49);
    EXPECT_FALSE(v49.is_prime);
    EXPECT_EQ(v49.evidence, Evidence(evidence::HeuristicFactorCount{3}));
    const auto v6 = is_prime_circulant_simplified(6);
    EXPECT_FALSE(v6.is_prime);
    EXPECT_EQ(v6.evidence, Evidence(evidence::HeuristicFactorCount{4}));
}

TEST(CirculantSimplified, ExactPredicateOnRandom64BitInputs) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const u64 n = (rng() >> 20) + 2;  // up to ~1.7e13
        ASSERT_EQ(is_prime_circulant_simplified(n).is_prime, is_prime_u64(n)) << n;
    }
}

TEST(Dispatcher, Examples) {
    EXPECT_FALSE(test(561, MethodId::miller_rabin(20, 1)).is_prime);
    const auto two = test(2, MethodId::circulant_full());
    EXPECT_TRUE(two.is_prime);
    EXPECT_EQ(two.method, MethodId::circulant_full());
    EXPECT_FALSE(test(91, MethodId::aks()).is_prime);
    EXPECT_THROW(test(1, MethodId::aks()), DomainError);
    EXPECT_EQ(evidence_name(test(97, MethodId::miller_rabin()).evidence), "WitnessPassed");
}

TEST(Dispatcher, AllMethodsAgreeUpTo20000) {
    const auto table = oracle::sieve(20'000);
    for (u64 n = 2; n <= 20'000; ++n) {
        const bool expected = table.is_prime(n);
        ASSERT_EQ(is_prime_circulant_full(n).is_prime, expected) << n;
        ASSERT_EQ(is_prime_circulant_simplified(n).is_prime, expected) << n;
        ASSERT_EQ(test(n, MethodId::optimized_trial_division()).is_prime, expected) << n;
        if (n <= 2000) {
            ASSERT_EQ(test(n, MethodId::aks()).is_prime, expected) << n;
        }
    }
}

}  // namespace
}  // namespace circprime
