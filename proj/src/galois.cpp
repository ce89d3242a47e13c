#include "circprime/galois.hpp"

#include <algorithm>
#include <string>

#include "circprime/errors.hpp"

namespace circprime {

namespace {

void require_n(u64 n, const char* who) {
    if (n < 3) throw DomainError(std::string(who) + ": n must be >= 3, got " + std::to_string(n));
}

// Visits each orbit in order of its smallest member. `on_member(j)` sees
// every index once; `on_orbit_end()` fires after each orbit.
template <typename OnMember, typename OnOrbitEnd>
void sweep_orbits(u64 n, OnMember&& on_member, OnOrbitEnd&& on_orbit_end) {
    const std::vector<u64> units = unit_group(n);
    std::vector<bool> visited(n, false);
    for (u64 j = 0; j < n; ++j) {
        if (visited[j]) continue;
        visited[j] = true;
        on_member(j);
        for (u64 a : units) {
            const u64 image = static_cast<u64>(static_cast<u128>(j) * a % n);
            if (!visited[image]) {
                visited[image] = true;
                on_member(image);
            }
        }
        on_orbit_end();
    }
}

}  // namespace

std::vector<u64> unit_group(u64 n) {
    // Sieve out multiples of each prime factor: same set as gcd(a, n) = 1.
    std::vector<bool> coprime(n, true);
    if (n >= 2) {
        for (const auto& pp : factorize(n).factors) {
            for (u64 m = 0; m < n; m += pp.prime) coprime[m] = false;
        }
    }
    std::vector<u64> units;
    for (u64 a = 1; a < n; ++a) {
        if (coprime[a]) units.push_back(a);
    }
    return units;
}

OrbitPartition compute_orbits(u64 n) {
    require_n(n, "compute_orbits");
    OrbitPartition out;
    out.n = n;
    std::vector<u64> current;
    sweep_orbits(
        n, [&](u64 j) { current.push_back(j); },
        [&] {
            std::sort(current.begin(), current.end());
            out.orbits.push_back(std::move(current));
            current.clear();
        });
    return out;
}

u64 orbit_count_direct(u64 n) {
    require_n(n, "orbit_count_direct");
    u64 count = 0;
    sweep_orbits(n, [](u64) {}, [&] { ++count; });
    return count;
}

u64 orbit_count_divisor_formula(u64 n) {
    require_n(n, "orbit_count_divisor_formula");
    u64 count = 1;
    for (u64 d : divisors(n)) {
        if (d > 1 && gcd(d, n / d) == 1 && cyclotomic_is_irreducible(d)) ++count;
    }
    return count;
}

bool cyclotomic_is_irreducible(u64 d) {
    if (d < 1) throw DomainError("cyclotomic_is_irreducible: d must be >= 1");
    return true;
}

}  // namespace circprime
