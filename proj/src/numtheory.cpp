#include "circprime/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "circprime/errors.hpp"

namespace circprime {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

std::vector<u64> sieve_primes(u64 limit) {
    std::vector<bool> composite(limit, false);
    std::vector<u64> primes;
    for (u64 i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j < limit; j += i) composite[j] = true;
    }
    return primes;
}

// Fixed seed schedule: c = 1, 2, 3, ... and x0 = 2. Output never depends on
// anything but n.
u64 brent_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    const u64 d = brent_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(u64 n) noexcept {
    if (n < 2) return false;
    static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : kBases) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kBases) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

const std::vector<u64>& trial_division_primes() {
    static const std::vector<u64> primes = sieve_primes(kTrialLimit);
    return primes;
}

Factorization factorize(u64 n) {
    if (n < 2) throw DomainError("factorize: n must be >= 2, got " + std::to_string(n));
    Factorization f;
    f.n = n;
    u64 rest = n;
    for (u64 p : trial_division_primes()) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest > 1) {
        std::vector<u64> large;
        split_large(rest, large);
        std::sort(large.begin(), large.end());
        for (u64 p : large) {
            if (!f.factors.empty() && f.factors.back().prime == p) {
                ++f.factors.back().exponent;
            } else {
                f.factors.push_back({p, 1});
            }
        }
    }
    return f;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base_count = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base_count; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> divisors(u64 n) {
    if (n < 1) throw DomainError("divisors: n must be >= 1");
    if (n == 1) return {1};
    return divisors(factorize(n));
}

u64 euler_totient(const Factorization& f) {
    u64 phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (unsigned k = 1; k < e; ++k) phi *= p;
    }
    return phi;
}

u64 euler_totient(u64 n) {
    if (n < 1) throw DomainError("euler_totient: n must be >= 1");
    if (n == 1) return 1;
    return euler_totient(factorize(n));
}

u64 integer_root(u64 n, unsigned k) noexcept {
    if (k == 0) return 0;
    if (k == 1 || n < 2) return n;
    // Checks b^k <= n without overflow.
    auto fits = [&](u64 b) {
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= b;
            if (acc > n) return false;
        }
        return true;
    };
    u64 lo = 1, hi = u64{1} << ((64 + k - 1) / k);
    while (lo < hi) {
        const u64 mid = lo + (hi - lo + 1) / 2;
        if (fits(mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

u64 integer_sqrt(u64 n) noexcept { return integer_root(n, 2); }

std::optional<std::pair<u64, unsigned>> is_perfect_power(u64 n) {
    if (n < 2) throw DomainError("is_perfect_power: n must be >= 2");
    const unsigned max_k = static_cast<unsigned>(std::bit_width(n) - 1);
    for (unsigned k = max_k; k >= 2; --k) {
        const u64 b = integer_root(n, k);
        if (b < 2) continue;
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) acc *= b;
        if (acc == n) return std::pair{b, k};
    }
    return std::nullopt;
}

u64 multiplicative_order(u64 a, u64 r) {
    if (r < 2) throw DomainError("multiplicative_order: modulus must be >= 2");
    a %= r;
    if (std::gcd(a, r) != 1) {
        throw DomainError("multiplicative_order: gcd(a, r) != 1");
    }
    u64 k = 1;
    u64 x = a;
    while (x != 1) {
        x = mul_mod(x, a, r);
        ++k;
    }
    return k;
}

u64 next_prime(u64 n) {
    if (n <= 2) return 2;
    u64 c = n | 1;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

}  // namespace circprime
