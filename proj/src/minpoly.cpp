#include "circprime/minpoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "circprime/errors.hpp"
#include "circprime/spectrum.hpp"

namespace circprime {

namespace {

std::string term(const BigInt& c, std::size_t power, bool leading) {
    if (c == 0) return {};
    std::string out;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (leading) {
        out += negative ? "-" : "";
    } else {
        out += negative ? " - " : " + ";
    }
    if (power == 0 || mag != 1) out += mag.str();
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
    return out;
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.size() < 2) throw DomainError("IntegerPolynomial: degree must be >= 1");
    if (coefficients_.back() != 1) throw DomainError("IntegerPolynomial: must be monic");
}

std::string IntegerPolynomial::to_string() const {
    std::string out;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        out += term(coefficients_[k], k, out.empty());
    }
    return out;
}

std::strong_ordering operator<=>(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t k = 0; k < a.coefficients_.size(); ++k) {
        if (a.coefficients_[k] < b.coefficients_[k]) return std::strong_ordering::less;
        if (b.coefficients_[k] < a.coefficients_[k]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string FactorSet::product_string() const {
    std::string out;
    for (const auto& f : factors) out += "(" + f.to_string() + ")";
    return out;
}

std::vector<u64> distinct_value_indices(u64 n, const std::vector<u64>& orbit) {
    std::vector<u64> kept;
    std::vector<std::complex<double>> values;
    for (u64 j : orbit) {
        const auto mu = eigenvalue(n, j);
        const bool seen = std::any_of(values.begin(), values.end(), [&](const auto& v) {
            return std::abs(v - mu) < kDistinctTolerance;
        });
        if (!seen) {
            kept.push_back(j);
            values.push_back(mu);
        }
    }
    return kept;
}

unsigned required_digits(u64 n, const std::vector<u64>& orbit) {
    double log_bound = 0.0;
    const auto kept = distinct_value_indices(n, orbit);
    for (u64 j : kept) log_bound += std::log10(1.0 + std::abs(eigenvalue(n, j)));
    log_bound += std::log10(static_cast<double>(kept.size()) + 1.0);
    return static_cast<unsigned>(std::ceil(log_bound)) + 20;
}

OrbitFactor orbit_polynomial(u64 n, const std::vector<u64>& orbit, unsigned digits) {
    if (orbit.empty()) throw DomainError("orbit_polynomial: empty orbit");
    const auto roots = distinct_value_indices(n, orbit);
    const mpfr_prec_t bits = digits_to_bits(digits);

    // c[k] = re[k] + i im[k]; starts as the constant polynomial 1.
    std::vector<Real> re, im;
    re.reserve(roots.size() + 1);
    im.reserve(roots.size() + 1);
    re.emplace_back(1.0, bits);
    im.emplace_back(0.0, bits);

    Real t1(bits), t2(bits);
    for (u64 j : roots) {
        const ComplexValue mu = stable_eigenvalue(n, j, digits);
        // Multiply by (x - mu): c'[k] = c[k-1] - mu c[k].
        re.push_back(re.back());
        im.push_back(im.back());
        for (std::size_t k = re.size() - 2;; --k) {
            // t1 = Re(mu c[k]), t2 = Im(mu c[k])
            mpfr_mul(t1.raw(), mu.re.raw(), re[k].raw(), MPFR_RNDN);
            mpfr_fms(t1.raw(), mu.im.raw(), im[k].raw(), t1.raw(), MPFR_RNDN);
            mpfr_neg(t1.raw(), t1.raw(), MPFR_RNDN);
            mpfr_mul(t2.raw(), mu.re.raw(), im[k].raw(), MPFR_RNDN);
            mpfr_fma(t2.raw(), mu.im.raw(), re[k].raw(), t2.raw(), MPFR_RNDN);
            if (k == 0) {
                mpfr_neg(re[0].raw(), t1.raw(), MPFR_RNDN);
                mpfr_neg(im[0].raw(), t2.raw(), MPFR_RNDN);
                break;
            }
            mpfr_sub(re[k].raw(), re[k - 1].raw(), t1.raw(), MPFR_RNDN);
            mpfr_sub(im[k].raw(), im[k - 1].raw(), t2.raw(), MPFR_RNDN);
        }
    }

    std::vector<BigInt> coefficients;
    coefficients.reserve(re.size());
    double residual = 0.0;
    Real frac(bits);
    for (std::size_t k = 0; k < re.size(); ++k) {
        coefficients.push_back(re[k].round(&frac));
        residual = std::max({residual, frac.to_double(), std::abs(im[k].to_double())});
    }

    std::ostringstream where;
    where << "orbit_polynomial(n=" << n << ", orbit of " << orbit.front() << ", " << digits
          << " digits): rounding residual " << residual;
    if (!(residual < kIntegralityResidual)) throw IntegralityError(where.str(), residual);
    if (!(residual < kPrecisionResidual)) throw PrecisionError(where.str(), residual);
    return {IntegerPolynomial(std::move(coefficients)), residual, digits};
}

FactorSet minimal_polynomial_factors(u64 n, const PrecisionPolicy& policy) {
    const OrbitPartition partition = compute_orbits(n);
    FactorSet out;
    out.n = n;
    for (const auto& orbit : partition.orbits) {
        unsigned digits = std::max(policy.initial_digits, required_digits(n, orbit));
        for (;;) {
            if (digits > policy.max_digits) {
                throw PrecisionError("minimal_polynomial_factors(n=" + std::to_string(n) +
                                         "): needs more than " + std::to_string(policy.max_digits) +
                                         " digits",
                                     1.0);
            }
            try {
                OrbitFactor factor = orbit_polynomial(n, orbit, digits);
                out.rounding_residual = std::max(out.rounding_residual, factor.residual);
                out.factors.push_back(std::move(factor.polynomial));
                break;
            } catch (const PrecisionError&) {
                digits *= 2;
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end());
    out.factors.erase(std::unique(out.factors.begin(), out.factors.end()), out.factors.end());
    return out;
}

u64 factor_count(u64 n, const PrecisionPolicy& policy) {
    return minimal_polynomial_factors(n, policy).factors.size();
}

}  // namespace circprime
