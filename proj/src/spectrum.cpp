#include "circprime/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "circprime/errors.hpp"

namespace circprime {

namespace {

void check_index(u64 n, u64 j) {
    if (n < 3) throw DomainError("spectrum: n must be >= 3, got " + std::to_string(n));
    if (j >= n) {
        throw DomainError("spectrum: index " + std::to_string(j) + " out of range for n = " +
                          std::to_string(n));
    }
}

std::complex<double> unit_root(u64 n, u64 k) {
    // k < n, so the angle is already in [0, 2 pi).
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace

std::vector<std::complex<double>> Spectrum::to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.to_complex());
    return out;
}

std::complex<double> eigenvalue(u64 n, u64 j) {
    check_index(n, j);
    if (j == 0) return {2.0, 0.0};
    return unit_root(n, j) + unit_root(n, static_cast<u64>((static_cast<u128>(2) * j) % n));
}

ComplexValue stable_eigenvalue(u64 n, u64 j, unsigned digits) {
    check_index(n, j);
    const mpfr_prec_t bits = digits_to_bits(digits);
    if (j == 0) return {Real(2.0, bits), Real(0.0, bits)};

    Real theta = Real::pi(bits);
    mpfr_mul_ui(theta.raw(), theta.raw(), 2, MPFR_RNDN);
    mpfr_mul_ui(theta.raw(), theta.raw(), j, MPFR_RNDN);
    mpfr_div_ui(theta.raw(), theta.raw(), n, MPFR_RNDN);

    Real c(bits), s(bits);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);

    // cos 2t = c^2 - s^2, sin 2t = 2 s c
    Real c2 = c * c - s * s;
    Real s2 = s * c;
    mpfr_mul_2ui(s2.raw(), s2.raw(), 1, MPFR_RNDN);

    return {c + c2, s + s2};
}

Spectrum full_spectrum(u64 n) {
    if (n < 3) throw DomainError("full_spectrum: n must be >= 3, got " + std::to_string(n));
    Spectrum out;
    out.n = n;
    out.precision_digits = kDoubleDigits;
    out.values.reserve(n);
    for (u64 j = 0; j < n; ++j) {
        const auto mu = eigenvalue(n, j);
        out.values.emplace_back(Real(mu.real(), 53), Real(mu.imag(), 53));
    }
    return out;
}

Spectrum stable_spectrum(u64 n, unsigned digits) {
    if (n < 3) throw DomainError("stable_spectrum: n must be >= 3, got " + std::to_string(n));
    if (digits < kDoubleDigits) {
        throw DomainError("stable_spectrum: precision must be >= 15 digits");
    }
    Spectrum out;
    out.n = n;
    out.precision_digits = digits;
    out.values.reserve(n);
    for (u64 j = 0; j < n; ++j) out.values.push_back(stable_eigenvalue(n, j, digits));
    return out;
}

unsigned default_stable_digits(u64 n) noexcept {
    const double d = 2.0 * std::log10(static_cast<double>(std::max<u64>(n, 1))) + 20.0;
    return std::max(30u, static_cast<unsigned>(std::ceil(d)));
}

}  // namespace circprime
