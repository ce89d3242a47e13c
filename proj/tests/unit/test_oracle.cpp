#include <gtest/gtest.h>

#include "oracle.hpp"

namespace circprime::oracle {
namespace {

TEST(Sieve, SmallTables) {
    const auto s = sieve(30);
    EXPECT_EQ(s.primes(), (std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
    EXPECT_EQ(sieve(2).primes(), (std::vector<u64>{2}));
    EXPECT_EQ(sieve(100'000).count(), 9592u);
}

TEST(Brute, Arithmetic) {
    EXPECT_EQ(brute_gcd(84, 36), 12u);
    EXPECT_EQ(brute_divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(brute_totient(90), 24u);
    EXPECT_TRUE(brute_is_prime(97));
    EXPECT_FALSE(brute_is_prime(91));
}

TEST(Brute, Orbits) {
    EXPECT_EQ(brute_orbits(7).size(), 2u);
    EXPECT_EQ(brute_orbits(12).size(), 6u);
    EXPECT_EQ(brute_orbits(4).size(), 3u);
}

TEST(Brute, MinimalPolynomial) {
    const auto f7 = brute_min_poly(7);
    ASSERT_EQ(f7.factors.size(), 2u);
    EXPECT_EQ(f7.factors[0].coefficients(), (std::vector<BigInt>{-2, 1}));
    EXPECT_EQ(f7.factors[1].coefficients(), (std::vector<BigInt>{1, 4, 9, 8, 4, 2, 1}));
    EXPECT_EQ(brute_min_poly(6).factors.size(), 4u);
    EXPECT_EQ(brute_min_poly(12).factors.size(), 6u);
}

}  // namespace
}  // namespace circprime::oracle
