#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "circprime/baselines.hpp"
#include "circprime/numtheory.hpp"

namespace circprime {

/// Default cutover between orbit counting and factorization.
inline constexpr u64 kDefaultBranchThreshold = 1'000'000;
/// Screen primes are those below this bound.
inline constexpr u64 kSmallPrimeBound = 100;

namespace evidence {
/// n has the listed prime below 100 as a proper divisor.
struct SmallPrimeDivisor {
    u64 prime;
    friend bool operator==(const SmallPrimeDivisor&, const SmallPrimeDivisor&) = default;
};
/// Number of Galois orbits found by direct enumeration.
struct OrbitCount {
    u64 count;
    friend bool operator==(const OrbitCount&, const OrbitCount&) = default;
};
/// Verdict read off the prime factorization (n >= branch threshold), or
/// n is 2 or 3.
struct FactorizationShape {
    friend bool operator==(const FactorizationShape&, const FactorizationShape&) = default;
};
struct HeuristicFactorCount {
    u64 count;
    friend bool operator==(const HeuristicFactorCount&, const HeuristicFactorCount&) = default;
};
/// Miller-Rabin: every witness round passed (or one failed, when composite).
struct WitnessPassed {
    friend bool operator==(const WitnessPassed&, const WitnessPassed&) = default;
};
/// Trial division or AKS ran to completion.
struct CongruenceHeld {
    friend bool operator==(const CongruenceHeld&, const CongruenceHeld&) = default;
};
}  // namespace evidence

using Evidence = std::variant<evidence::SmallPrimeDivisor, evidence::OrbitCount,
                              evidence::FactorizationShape, evidence::HeuristicFactorCount,
                              evidence::WitnessPassed, evidence::CongruenceHeld>;

std::string evidence_name(const Evidence& e);

struct Verdict {
    u64 n = 0;
    bool is_prime = false;
    MethodId method;
    Evidence evidence;
};

struct CirculantOptions {
    u64 branch_threshold = kDefaultBranchThreshold;
};

/// n = 2, 3 are prime outright. Otherwise reject n with a proper divisor
/// among the primes below 100, then decide by orbit count (n < threshold)
/// or factorization shape (n >= threshold). Throws DomainError for n < 2.
Verdict is_prime_circulant_full(u64 n, const CirculantOptions& options = {});

/// 1 for (x - 2), +1 per prime with exponent 1, +2 per prime with exponent
/// > 1, +1 if n has more than one distinct prime.
u64 simplified_factor_count(u64 n);

/// simplified_factor_count(n) == 2.
Verdict is_prime_circulant_simplified(u64 n);

/// Dispatch on method. Throws DomainError for n < 2.
Verdict test(u64 n, const MethodId& method, const CirculantOptions& options = {});

}  // namespace circprime
