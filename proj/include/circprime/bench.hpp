#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circprime/primality.hpp"

namespace circprime {

struct BenchRecord {
    MethodId method;
    u64 n = 0;
    unsigned repetitions = 0;
    /// Absent when the cell timed out or failed.
    std::optional<double> mean_seconds;
    std::optional<double> min_seconds;
    std::optional<bool> verdict;
    std::optional<u64> peak_memory_bytes;
    bool timed_out = false;
    /// Non-empty when the cell failed for a reason other than timeout.
    std::string error;
};

/// A suite input: an exact integer, or the smallest prime >= 10^k.
class InputSpec {
public:
    static InputSpec exact(u64 n);
    static InputSpec prime_above_power_of_ten(unsigned exponent);
    /// "1000003" or "10^6" / "1e6" (the latter two are prime anchors).
    static InputSpec parse(std::string_view text);

    u64 resolve() const;
    /// Column header: "n = 1000003" or "n ~ 10^6".
    std::string label() const;
    bool is_anchor() const noexcept { return anchor_; }
    u64 value() const noexcept { return value_; }

private:
    InputSpec(bool anchor, u64 value) : anchor_(anchor), value_(value) {}

    bool anchor_ = false;
    u64 value_ = 0;
};

struct SuiteConfig {
    std::vector<MethodId> methods;
    std::vector<InputSpec> inputs;
    unsigned repetitions = 3;
    /// Per (method, input) cell, covering warm-up and all repetitions.
    /// <= 0 runs the cell in-process with no limit.
    double timeout_seconds = 60.0;
    std::uint64_t seed = 1;
    CirculantOptions circulant;
};

/// Six methods x {10^6, 10^8, 10^9, 10^10} x 3 repetitions.
SuiteConfig table_config(std::uint64_t seed = 1, double timeout_seconds = 300.0);
/// Six methods x prime anchors 10^2 .. 10^15.
SuiteConfig scaling_config(std::uint64_t seed = 1, double timeout_seconds = 10.0);

struct SuiteResult {
    SuiteConfig config;
    std::vector<u64> resolved_inputs;
    /// Methods outer, inputs inner, in config order.
    std::vector<BenchRecord> records;

    const BenchRecord& at(std::size_t method_index, std::size_t input_index) const {
        return records[method_index * resolved_inputs.size() + input_index];
    }
};

/// One untimed warm-up, then `repetitions` timed runs on a monotonic clock.
/// With timeout_seconds > 0 the cell runs in a child process that is killed
/// at the deadline; peak memory is the child's resident-set peak.
BenchRecord time_method(const MethodId& method, u64 n, unsigned repetitions,
                        double timeout_seconds = 0.0, const CirculantOptions& options = {});

/// Every method x input cell, strictly sequential. A failing cell is
/// recorded and the suite continues.
SuiteResult run_suite(const SuiteConfig& config);

/// Methods as rows, inputs as columns, mean seconds per cell.
std::string render_table(const SuiteResult& result);

/// Per input: whether AKS had the largest mean time. nullopt when AKS was
/// absent from the suite or had no timing for that input. Timeouts count
/// as slower than any finished cell.
std::vector<std::optional<bool>> aks_slowest_by_input(const SuiteResult& result);

struct Disagreement {
    u64 n;
    bool method_verdict;
    bool baseline_verdict;
};

struct SweepReport {
    u64 lo = 0;
    u64 hi = 0;
    MethodId method;
    MethodId baseline;
    u64 tested = 0;
    u64 primes_found = 0;
    std::vector<Disagreement> disagreements;
    double elapsed_seconds = 0.0;
};

/// Runs both methods on every n in [lo, hi]. `workers` > 1 splits the range
/// into contiguous chunks; results merge in ascending n.
SweepReport sweep_validate(u64 lo, u64 hi, const MethodId& method, const MethodId& baseline,
                           const CirculantOptions& options = {}, unsigned workers = 1);

}  // namespace circprime
