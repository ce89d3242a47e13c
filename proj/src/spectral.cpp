#include "circprime/spectral.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "circprime/errors.hpp"
#include "circprime/spectrum.hpp"

namespace circprime {

double spectral_property(u64 n) {
    if (n < 3) throw DomainError("spectral_property: n must be >= 3, got " + std::to_string(n));
    const auto mu = full_spectrum(n).to_complex();
    const double count = static_cast<double>(n - 1);

    std::complex<double> mean{0.0, 0.0};
    for (u64 j = 1; j < n; ++j) mean += mu[j];
    mean /= count;

    double variance = 0.0;
    for (u64 j = 1; j < n; ++j) variance += std::norm(mu[j] - mean);
    variance /= count;
    const double sigma = std::sqrt(variance);

    const double totient_ratio =
        static_cast<double>(euler_totient(n)) / static_cast<double>(n);
    // n = 3 is the only case with all nontrivial eigenvalues equal; use a
    // tolerance since they agree only to rounding.
    if (sigma < 1e-12) return totient_ratio;

    double dispersion = 0.0;
    for (u64 j = 1; j < n; ++j) dispersion += std::abs((mu[j] - mean) / (2.0 * sigma));
    return dispersion / static_cast<double>(n) + totient_ratio;
}

PhasePoint phase_point(u64 n, const PrecisionPolicy& policy) {
    PhasePoint p;
    p.n = n;
    p.factor_count = factor_count(n, policy);
    p.spectral_value = spectral_property(n);
    p.is_prime = static_cast<double>(p.factor_count) < kPhaseBoundary;
    return p;
}

std::vector<BigInt> coefficient_series(u64 n, const PrecisionPolicy& policy) {
    const FactorSet set = minimal_polynomial_factors(n, policy);
    const IntegerPolynomial* best = &set.factors.front();
    for (const auto& f : set.factors) {
        if (f.degree() >= best->degree()) best = &f;
    }
    return best->coefficients();
}

}  // namespace circprime
