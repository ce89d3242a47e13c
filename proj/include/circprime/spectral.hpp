#pragma once

#include <vector>

#include "circprime/minpoly.hpp"
#include "circprime/numtheory.hpp"

namespace circprime {

/// Separates the factor-count axis: primes sit at 2, composites at >= 3.
inline constexpr double kPhaseBoundary = 2.5;

struct PhasePoint {
    u64 n = 0;
    u64 factor_count = 0;
    double spectral_value = 0.0;
    bool is_prime = false;
};

/// S(n) = (1/n) sum_{j=1}^{n-1} |mu_j - mean| / (2 sigma) + phi(n)/n.
/// Mean and population standard deviation are taken over j = 1..n-1 only;
/// sigma = sqrt(mean |mu_j - mean|^2). When sigma = 0 (n = 3) the sum
/// term is 0.
double spectral_property(u64 n);

/// factor_count(n) paired with S(n); is_prime from the 2.5 boundary.
PhasePoint phase_point(u64 n, const PrecisionPolicy& policy = {});

/// Coefficients (constant first) of the highest-degree factor of the
/// minimal polynomial; the last one in factor order on ties.
std::vector<BigInt> coefficient_series(u64 n, const PrecisionPolicy& policy = {});

}  // namespace circprime
