#pragma once

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <string>

namespace circprime {

using BigInt = boost::multiprecision::mpz_int;

/// Bits needed to carry `digits` significant decimal digits, plus guard bits.
mpfr_prec_t digits_to_bits(unsigned digits) noexcept;

/// Owning MPFR value with a fixed precision chosen at construction.
/// Binary operators produce a result at the larger operand precision.
class Real {
public:
    explicit Real(mpfr_prec_t bits = 53);
    Real(double value, mpfr_prec_t bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real pi(mpfr_prec_t bits);

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
    double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits.
    std::string to_string(unsigned digits = 17) const;
    bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

    /// Nearest integer (ties away from zero) and |value - nearest|.
    BigInt round(Real* residual = nullptr) const;

    mpfr_ptr raw() noexcept { return value_; }
    mpfr_srcptr raw() const noexcept { return value_; }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
    friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
    Real operator-() const;

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }

private:
    void widen_to(mpfr_prec_t bits);

    mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real hypot(const Real& x, const Real& y);

/// Complex number with Real components.
struct ComplexValue {
    Real re;
    Real im;

    explicit ComplexValue(mpfr_prec_t bits = 53) : re(bits), im(bits) {}
    ComplexValue(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
    Real modulus() const { return hypot(re, im); }
};

}  // namespace circprime
