#pragma once

/**
 * Exact integer arithmetic on 64-bit inputs: gcd, factorization, divisors,
 * totient, perfect powers and multiplicative orders.
 *
 * Products are formed in unsigned __int128, so every operation is exact
 * for the full std::uint64_t range.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace circprime {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent, primes strictly ascending.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;

    std::size_t distinct_primes() const noexcept { return factors.size(); }
    /// True iff n is a single prime to the first power.
    bool is_prime_shape() const noexcept {
        return factors.size() == 1 && factors.front().exponent == 1;
    }
};

u64 gcd(u64 a, u64 b) noexcept;

u64 mul_mod(u64 a, u64 b, u64 m) noexcept;
u64 pow_mod(u64 base, u64 exp, u64 m) noexcept;

/// Deterministic primality for all 64-bit n (fixed Miller-Rabin base set
/// proven sufficient below 2^64). Used to certify factorization output.
bool is_prime_u64(u64 n) noexcept;

/// Trial division by primes up to 10^6, then Brent-style rho with a fixed
/// seed schedule for the remaining cofactor. Throws DomainError for n < 2.
Factorization factorize(u64 n);

/// All divisors of n in ascending order. Throws DomainError for n < 1.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

/// phi(n); phi(1) = 1. Throws DomainError for n < 1.
u64 euler_totient(u64 n);
u64 euler_totient(const Factorization& f);

/// (b, k) with b^k = n and k >= 2 maximal, or nullopt. Throws for n < 2.
std::optional<std::pair<u64, unsigned>> is_perfect_power(u64 n);

/// Smallest k >= 1 with a^k = 1 (mod r). Throws DomainError if r < 2 or
/// gcd(a, r) != 1.
u64 multiplicative_order(u64 a, u64 r);

/// floor(k-th root of n).
u64 integer_root(u64 n, unsigned k) noexcept;
u64 integer_sqrt(u64 n) noexcept;

/// Smallest prime >= n.
u64 next_prime(u64 n);

/// Primes below 10^6, ascending. Built once on first use.
const std::vector<u64>& trial_division_primes();

}  // namespace circprime
