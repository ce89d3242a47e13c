#include "circprime/primality.hpp"

#include "circprime/errors.hpp"
#include "circprime/galois.hpp"

namespace circprime {

namespace {

constexpr u64 kScreenPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

void require_at_least_two(u64 n, const char* who) {
    if (n < 2) throw DomainError(std::string(who) + ": n must be >= 2, got " + std::to_string(n));
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

std::string evidence_name(const Evidence& e) {
    return std::visit(
        overloaded{
            [](const evidence::SmallPrimeDivisor& s) {
                return "SmallPrimeDivisor(" + std::to_string(s.prime) + ")";
            },
            [](const evidence::OrbitCount& o) {
                return "OrbitCount(" + std::to_string(o.count) + ")";
            },
            [](const evidence::FactorizationShape&) { return std::string("FactorizationShape"); },
            [](const evidence::HeuristicFactorCount& h) {
                return "HeuristicFactorCount(" + std::to_string(h.count) + ")";
            },
            [](const evidence::WitnessPassed&) { return std::string("WitnessPassed"); },
            [](const evidence::CongruenceHeld&) { return std::string("CongruenceHeld"); },
        },
        e);
}

Verdict is_prime_circulant_full(u64 n, const CirculantOptions& options) {
    require_at_least_two(n, "is_prime_circulant_full");
    Verdict v{n, false, MethodId::circulant_full(), evidence::FactorizationShape{}};
    if (n <= 3) {
        v.is_prime = true;
        return v;
    }
    // A screen prime that equals n is not a proper divisor; n falls through.
    for (u64 p : kScreenPrimes) {
        if (n != p && n % p == 0) {
            v.evidence = evidence::SmallPrimeDivisor{p};
            return v;
        }
    }
    if (n < options.branch_threshold) {
        const u64 k = orbit_count_direct(n);
        v.is_prime = k == 2;
        v.evidence = evidence::OrbitCount{k};
        return v;
    }
    v.is_prime = factorize(n).is_prime_shape();
    return v;
}

u64 simplified_factor_count(u64 n) {
    require_at_least_two(n, "simplified_factor_count");
    const Factorization f = factorize(n);
    u64 count = 1;
    for (const auto& pp : f.factors) count += pp.exponent == 1 ? 1 : 2;
    if (f.distinct_primes() > 1) count += 1;
    return count;
}

Verdict is_prime_circulant_simplified(u64 n) {
    const u64 k = simplified_factor_count(n);
    return {n, k == 2, MethodId::circulant_simplified(), evidence::HeuristicFactorCount{k}};
}

Verdict test(u64 n, const MethodId& method, const CirculantOptions& options) {
    require_at_least_two(n, "test");
    switch (method.tag()) {
        case Method::TrialDivision:
            return {n, trial_division(n), method, evidence::CongruenceHeld{}};
        case Method::OptimizedTrialDivision:
            return {n, optimized_trial_division(n), method, evidence::CongruenceHeld{}};
        case Method::MillerRabin: {
            const auto& p = method.params();
            if (!p) throw ConfigError("miller-rabin requires rounds and seed");
            return {n, miller_rabin(n, p->rounds, p->seed), method, evidence::WitnessPassed{}};
        }
        case Method::AKS:
            return {n, aks_is_prime(n), method, evidence::CongruenceHeld{}};
        case Method::CirculantFull:
            return is_prime_circulant_full(n, options);
        case Method::CirculantSimplified:
            return is_prime_circulant_simplified(n);
    }
    throw ConfigError("unknown method");
}

}  // namespace circprime
