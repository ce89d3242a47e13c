#include "circprime/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace circprime {

mpfr_prec_t digits_to_bits(unsigned digits) noexcept {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

Real::Real(mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(mpfr_prec_t bits) {
    Real out(bits);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
}

std::string Real::to_string(unsigned digits) const {
    if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (mpfr_sgn(value_) > 0 ? "inf" : "-inf");
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits > 0 ? digits - 1 : 0),
                  value_);
    return buf.data();
}

BigInt Real::round(Real* residual) const {
    Real nearest(precision());
    mpfr_round(nearest.value_, value_);
    BigInt out;
    mpfr_get_z(out.backend().data(), nearest.value_, MPFR_RNDN);
    if (residual != nullptr) {
        *residual = Real(precision());
        mpfr_sub(residual->value_, value_, nearest.value_, MPFR_RNDN);
        mpfr_abs(residual->value_, residual->value_, MPFR_RNDN);
    }
    return out;
}

void Real::widen_to(mpfr_prec_t bits) {
    if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

Real& Real::operator+=(const Real& rhs) {
    widen_to(rhs.precision());
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    widen_to(rhs.precision());
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    widen_to(rhs.precision());
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    widen_to(rhs.precision());
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real out(*this);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

Real abs(const Real& x) {
    Real out(x.precision());
    mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

Real sqrt(const Real& x) {
    Real out(x.precision());
    mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

Real cos(const Real& x) {
    Real out(x.precision());
    mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

Real sin(const Real& x) {
    Real out(x.precision());
    mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

Real hypot(const Real& x, const Real& y) {
    Real out(std::max(x.precision(), y.precision()));
    mpfr_hypot(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return out;
}

}  // namespace circprime
