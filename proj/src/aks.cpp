#include <gmp.h>

#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "circprime/baselines.hpp"
#include "circprime/errors.hpp"

namespace circprime {

namespace {

class Mpz {
public:
    Mpz() { mpz_init(value_); }
    ~Mpz() { mpz_clear(value_); }
    Mpz(const Mpz&) = delete;
    Mpz& operator=(const Mpz&) = delete;
    mpz_ptr get() noexcept { return value_; }

private:
    mpz_t value_;
};

// Dense polynomials modulo (x^r - 1, n). Products go through Kronecker
// substitution: coefficients are packed into fixed-width word slots of one
// big integer, multiplied by GMP, and unpacked.
class CyclicRing {
public:
    CyclicRing(u64 n, u64 r) : n_(n), r_(r) {
        const unsigned bits = 2 * std::bit_width(n) + std::bit_width(r) + 1;
        slot_words_ = (bits + 63) / 64;
        packed_.resize(r_ * slot_words_);
        unpacked_.resize((2 * r_ - 1) * slot_words_);
    }

    using Poly = std::vector<u64>;

    void square(Poly& p) {
        std::fill(packed_.begin(), packed_.end(), 0);
        for (u64 i = 0; i < r_; ++i) packed_[i * slot_words_] = p[i];
        mpz_import(z_.get(), packed_.size(), -1, sizeof(u64), 0, 0, packed_.data());
        mpz_mul(z_.get(), z_.get(), z_.get());
        std::fill(unpacked_.begin(), unpacked_.end(), 0);
        std::size_t count = 0;
        mpz_export(unpacked_.data(), &count, -1, sizeof(u64), 0, 0, z_.get());

        std::fill(p.begin(), p.end(), 0);
        for (u64 k = 0; k < 2 * r_ - 1; ++k) {
            u64 acc = 0;
            for (std::size_t w = slot_words_; w-- > 0;) {
                const u128 v = (static_cast<u128>(acc) << 64) | unpacked_[k * slot_words_ + w];
                acc = static_cast<u64>(v % n_);
            }
            u64& slot = p[k % r_];
            slot = static_cast<u64>((static_cast<u128>(slot) + acc) % n_);
        }
    }

    // p <- p * (x + a)
    void mul_linear(Poly& p, u64 a) const {
        const u64 top = p[r_ - 1];
        for (u64 i = r_ - 1; i > 0; --i) {
            p[i] = static_cast<u64>((static_cast<u128>(p[i]) * a + p[i - 1]) % n_);
        }
        p[0] = static_cast<u64>((static_cast<u128>(p[0]) * a + top) % n_);
    }

    // (x + a)^n mod (x^r - 1, n)
    Poly pow_linear(u64 a) {
        Poly p(r_, 0);
        p[0] = a % n_;
        p[1 % r_] = (p[1 % r_] + 1) % n_;
        for (int bit = std::bit_width(n_) - 2; bit >= 0; --bit) {
            square(p);
            if ((n_ >> bit) & 1) mul_linear(p, a % n_);
        }
        return p;
    }

private:
    u64 n_;
    u64 r_;
    std::size_t slot_words_;
    std::vector<u64> packed_;
    std::vector<u64> unpacked_;
    Mpz z_;
};

// Smallest r with ord_r(n) > bound.
u64 find_order_modulus(u64 n, u64 bound) {
    for (u64 r = 2;; ++r) {
        if (std::gcd(r, n) != 1) continue;
        u64 x = 1;
        bool small_order = false;
        for (u64 k = 1; k <= bound; ++k) {
            x = mul_mod(x, n % r, r);
            if (x == 1) {
                small_order = true;
                break;
            }
        }
        if (!small_order) return r;
    }
}

}  // namespace

bool aks_is_prime(u64 n) {
    if (n < 2) throw DomainError("aks_is_prime: n must be >= 2, got " + std::to_string(n));
    if (n < 4) return true;
    if (is_perfect_power(n)) return false;

    const double log2n = std::log2(static_cast<double>(n));
    const u64 order_bound = static_cast<u64>(std::floor(log2n * log2n));
    const u64 r = find_order_modulus(n, order_bound);

    for (u64 a = 2; a <= std::min(r, n - 1); ++a) {
        const u64 g = std::gcd(a, n);
        if (g > 1 && g < n) return false;
    }
    if (n <= r) return true;

    const u64 limit =
        static_cast<u64>(std::floor(std::sqrt(static_cast<double>(euler_totient(r))) * log2n));
    CyclicRing ring(n, r);
    const u64 shift = n % r;
    for (u64 a = 1; a <= limit; ++a) {
        const auto lhs = ring.pow_linear(a);
        for (u64 i = 0; i < r; ++i) {
            u64 expected = 0;
            if (i == shift) expected += 1;
            if (i == 0) expected += a % n;
            if (lhs[i] != expected % n) return false;
        }
    }
    return true;
}

}  // namespace circprime
