#pragma once

/**
 * Galois orbits of the eigenvalue indices of C_n.
 *
 * The unit group (Z/nZ)* acts on indices by j -> j * a mod n. Orbits are
 * exactly the classes {j : gcd(j, n) = n / d} for d | n, so there are
 * tau(n) of them and the orbit of order d has phi(d) members.
 */

#include <vector>

#include "circprime/numtheory.hpp"

namespace circprime {

struct OrbitPartition {
    u64 n = 0;
    /// Each orbit sorted ascending; orbits ordered by smallest member.
    std::vector<std::vector<u64>> orbits;

    std::size_t size() const noexcept { return orbits.size(); }
};

/// Units of Z/nZ in ascending order (a in 1..n-1 with gcd(a, n) = 1).
std::vector<u64> unit_group(u64 n);

/// Orbit enumeration: for each unvisited j, sweep every unit a and mark
/// j * a mod n. Throws DomainError for n < 3.
OrbitPartition compute_orbits(u64 n);

/// Same sweep as compute_orbits without storing the orbits.
u64 orbit_count_direct(u64 n);

/// 1 + #{d | n : d > 1, gcd(d, n/d) = 1, Phi_d irreducible}. This counts
/// unitary divisors and undercounts prime powers (n = 4 gives 2, not 3);
/// kept as written for comparison against orbit_count_direct.
u64 orbit_count_divisor_formula(u64 n);

/// Phi_d is irreducible over Q for every d >= 1. Throws for d = 0.
bool cyclotomic_is_irreducible(u64 d);

}  // namespace circprime
