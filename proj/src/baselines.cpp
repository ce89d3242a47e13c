#include "circprime/baselines.hpp"

#include <array>
#include <random>
#include <string>

#include "circprime/errors.hpp"

namespace circprime {

namespace {

void require_at_least_two(u64 n, const char* who) {
    if (n < 2) throw DomainError(std::string(who) + ": n must be >= 2, got " + std::to_string(n));
}

constexpr std::array<std::pair<Method, std::string_view>, 6> kNames{{
    {Method::TrialDivision, "trial-division"},
    {Method::OptimizedTrialDivision, "optimized-trial-division"},
    {Method::MillerRabin, "miller-rabin"},
    {Method::AKS, "aks"},
    {Method::CirculantFull, "circulant-full"},
    {Method::CirculantSimplified, "circulant-simplified"},
}};

}  // namespace

std::string_view method_name(Method tag) noexcept {
    for (const auto& [t, name] : kNames) {
        if (t == tag) return name;
    }
    return "unknown";
}

MethodId MethodId::miller_rabin(unsigned rounds, std::uint64_t seed) {
    if (rounds == 0) throw DomainError("miller-rabin: rounds must be positive");
    MethodId m(Method::MillerRabin);
    m.params_ = MillerRabinParams{rounds, seed};
    return m;
}

MethodId MethodId::of(Method tag, std::uint64_t seed) {
    if (tag == Method::MillerRabin) return miller_rabin(kDefaultMillerRabinRounds, seed);
    return MethodId(tag);
}

MethodId MethodId::parse(std::string_view name, std::uint64_t seed, unsigned rounds) {
    for (const auto& [tag, spelled] : kNames) {
        if (spelled == name) {
            return tag == Method::MillerRabin ? miller_rabin(rounds, seed) : MethodId(tag);
        }
    }
    throw ConfigError("unknown method '" + std::string(name) + "'");
}

std::string MethodId::name() const { return std::string(method_name(tag_)); }

std::string MethodId::label() const {
    switch (tag_) {
        case Method::TrialDivision: return "Trial Div.";
        case Method::OptimizedTrialDivision: return "Opt. Trial Div.";
        case Method::MillerRabin: return "Miller-Rabin (" + std::to_string(params_->rounds) + ")";
        case Method::AKS: return "AKS";
        case Method::CirculantSimplified: return "Circulant (Simpl.)";
        case Method::CirculantFull: return "Circulant (Full)";
    }
    return "unknown";
}

bool trial_division(u64 n) {
    require_at_least_two(n, "trial_division");
    for (u64 d = 2; d <= n / d; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool optimized_trial_division(u64 n) {
    require_at_least_two(n, "optimized_trial_division");
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (u64 d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

bool miller_rabin(u64 n, unsigned rounds, std::uint64_t seed) {
    if (rounds == 0) throw DomainError("miller_rabin: rounds must be positive");
    require_at_least_two(n, "miller_rabin");
    if (n < 4) return true;
    if (n % 2 == 0) return false;

    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }

    std::mt19937_64 rng(seed);
    for (unsigned round = 0; round < rounds; ++round) {
        // a in [2, n-2]
        const u64 a = 2 + rng() % (n - 3);
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace circprime
