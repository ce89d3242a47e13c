#pragma once

/**
 * Minimal polynomial of C_n as a product of integer factors, one per
 * Galois orbit. Each factor is prod (x - mu_j) over the distinct values
 * mu_j on the orbit, expanded in high precision and rounded.
 */

#include <compare>
#include <string>
#include <vector>

#include "circprime/galois.hpp"
#include "circprime/real.hpp"

namespace circprime {

/// Monic, degree >= 1, coefficients constant term first.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    /// Throws DomainError unless the list is monic with degree >= 1.
    explicit IntegerPolynomial(std::vector<BigInt> coefficients);

    const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
    std::size_t degree() const noexcept { return coefficients_.size() - 1; }

    /// "x^2 + 2x + 2"
    std::string to_string() const;

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;
    /// Orders by degree, then lexicographically on the coefficient list.
    friend std::strong_ordering operator<=>(const IntegerPolynomial& a, const IntegerPolynomial& b);

private:
    std::vector<BigInt> coefficients_;
};

struct FactorSet {
    u64 n = 0;
    /// Distinct factors sorted by IntegerPolynomial ordering.
    std::vector<IntegerPolynomial> factors;
    /// Largest |coefficient - nearest integer| seen while rounding.
    double rounding_residual = 0.0;

    /// "(x - 2)(x^6 + 2x^5 + ...)"
    std::string product_string() const;
};

struct OrbitFactor {
    IntegerPolynomial polynomial;
    double residual = 0.0;
    unsigned digits = 0;
};

/// Residual at or above this is retried with more digits.
inline constexpr double kPrecisionResidual = 1e-3;
/// Residual at or above this means the coefficient is not an integer.
inline constexpr double kIntegralityResidual = 0.5;
/// Two eigenvalues closer than this count as one root.
inline constexpr double kDistinctTolerance = 1e-10;

struct PrecisionPolicy {
    unsigned initial_digits = 30;
    unsigned max_digits = 480;
};

/// Indices of `orbit` whose eigenvalues are pairwise distinct (first
/// occurrence kept).
std::vector<u64> distinct_value_indices(u64 n, const std::vector<u64>& orbit);

/// Digits needed so that rounding the expansion of the distinct roots of
/// `orbit` is unambiguous: log10 prod(1 + |mu|) + log10(degree) + 20.
unsigned required_digits(u64 n, const std::vector<u64>& orbit);

/// Expands prod (x - mu_j) over the distinct values on `orbit` at `digits`
/// digits and rounds. Throws PrecisionError when the residual is >= 1e-3
/// and IntegralityError when it is >= 0.5.
OrbitFactor orbit_polynomial(u64 n, const std::vector<u64>& orbit, unsigned digits);

/// One factor per orbit of compute_orbits(n). Starts each orbit at
/// max(policy.initial_digits, required_digits) and doubles on
/// PrecisionError; gives up (PrecisionError) past policy.max_digits.
FactorSet minimal_polynomial_factors(u64 n, const PrecisionPolicy& policy = {});

/// Number of irreducible factors of the minimal polynomial of C_n.
u64 factor_count(u64 n, const PrecisionPolicy& policy = {});

}  // namespace circprime
