#pragma once

/**
 * Eigenvalues of C_n = W_n + W_n^2, where W_n is the n x n cyclic shift.
 * Both circulants are diagonalized by the n-th roots of unity, so
 *
 *     mu_j = lambda_j + lambda_j^2,   lambda_j = exp(2 pi i j / n),
 *
 * and no matrix is ever formed.
 */

#include <complex>
#include <vector>

#include "circprime/numtheory.hpp"
#include "circprime/real.hpp"

namespace circprime {

/// Working precision of the double-precision route.
inline constexpr unsigned kDoubleDigits = 15;

struct Spectrum {
    u64 n = 0;
    unsigned precision_digits = kDoubleDigits;
    /// values[j] = mu_j for j = 0 .. n-1.
    std::vector<ComplexValue> values;

    std::vector<std::complex<double>> to_complex() const;
};

/// mu_j in double precision. Both angles are reduced mod 2 pi before the
/// trig calls. Throws DomainError for n < 3 or j >= n.
std::complex<double> eigenvalue(u64 n, u64 j);

/// mu_j at `digits` significant digits, via cos/sin of theta_j and the
/// double-angle identities for lambda_j^2.
ComplexValue stable_eigenvalue(u64 n, u64 j, unsigned digits);

/// All n eigenvalues through eigenvalue(). O(n).
Spectrum full_spectrum(u64 n);

/// All n eigenvalues through stable_eigenvalue(). Requires digits >= 15.
Spectrum stable_spectrum(u64 n, unsigned digits);

/// max(30, 2 log10(n) + 20).
unsigned default_stable_digits(u64 n) noexcept;

}  // namespace circprime
