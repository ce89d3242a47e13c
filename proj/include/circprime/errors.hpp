#pragma once

#include <stdexcept>
#include <string>

namespace circprime {

/// Precondition violation on an argument (n out of range, j >= n, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Coefficient rounding was not conclusive at the working precision.
/// Retryable with more digits.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A rounded coefficient was at least 0.5 away from any integer.
class IntegralityError : public std::runtime_error {
public:
    IntegralityError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A computation exceeded its time or size budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (unknown method name, malformed config value).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace circprime
