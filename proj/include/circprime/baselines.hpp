#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "circprime/numtheory.hpp"

namespace circprime {

enum class Method {
    TrialDivision,
    OptimizedTrialDivision,
    MillerRabin,
    AKS,
    CirculantFull,
    CirculantSimplified,
};

inline constexpr unsigned kDefaultMillerRabinRounds = 20;

struct MillerRabinParams {
    unsigned rounds = kDefaultMillerRabinRounds;
    std::uint64_t seed = 1;

    friend bool operator==(const MillerRabinParams&, const MillerRabinParams&) = default;
};

/// A primality method plus its parameters. Only MillerRabin carries
/// parameters; use the factory functions to keep that invariant.
class MethodId {
public:
    constexpr MethodId() = default;
    static MethodId trial_division() { return MethodId(Method::TrialDivision); }
    static MethodId optimized_trial_division() { return MethodId(Method::OptimizedTrialDivision); }
    static MethodId miller_rabin(unsigned rounds = kDefaultMillerRabinRounds,
                                 std::uint64_t seed = 1);
    static MethodId aks() { return MethodId(Method::AKS); }
    static MethodId circulant_full() { return MethodId(Method::CirculantFull); }
    static MethodId circulant_simplified() { return MethodId(Method::CirculantSimplified); }
    /// Method without explicit parameters; MillerRabin gets the defaults.
    static MethodId of(Method tag, std::uint64_t seed = 1);

    /// Accepts the CLI spellings ("trial-division", "miller-rabin", ...).
    /// Throws ConfigError on an unknown name.
    static MethodId parse(std::string_view name, std::uint64_t seed = 1,
                          unsigned rounds = kDefaultMillerRabinRounds);

    Method tag() const noexcept { return tag_; }
    const std::optional<MillerRabinParams>& params() const noexcept { return params_; }
    std::string name() const;
    /// Row label as printed in the comparison table.
    std::string label() const;

    friend bool operator==(const MethodId&, const MethodId&) = default;

private:
    explicit constexpr MethodId(Method tag) : tag_(tag) {}

    Method tag_ = Method::CirculantFull;
    std::optional<MillerRabinParams> params_;
};

std::string_view method_name(Method tag) noexcept;

/// True iff no d in [2, sqrt(n)] divides n.
bool trial_division(u64 n);

/// 2, 3, then 6k +- 1 up to sqrt(n).
bool optimized_trial_division(u64 n);

/// false means composite for certain. Witnesses come from mt19937_64(seed),
/// so the verdict for a given (n, rounds, seed) never changes.
bool miller_rabin(u64 n, unsigned rounds = kDefaultMillerRabinRounds, std::uint64_t seed = 1);

/// Agrawal-Kayal-Saxena with the standard congruence check
/// (x + a)^n = x^n + a mod (x^r - 1, n).
bool aks_is_prime(u64 n);

}  // namespace circprime
