#include "circprime/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <iomanip>
#include <sstream>
#include <thread>

#include "circprime/errors.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>
#define CIRCPRIME_HAVE_FORK 1
#endif

namespace circprime {

namespace {

using Clock = std::chrono::steady_clock;

struct CellOutcome {
    bool ok = false;
    bool verdict = false;
    double mean_seconds = 0.0;
    double min_seconds = 0.0;
    char error[240] = {};
};

CellOutcome run_cell(const MethodId& method, u64 n, unsigned repetitions,
                     const CirculantOptions& options) {
    CellOutcome out;
    try {
        const bool first = test(n, method, options).is_prime;
        double total = 0.0;
        double best = INFINITY;
        for (unsigned rep = 0; rep < repetitions; ++rep) {
            const auto start = Clock::now();
            const bool v = test(n, method, options).is_prime;
            const std::chrono::duration<double> elapsed = Clock::now() - start;
            if (v != first) throw std::runtime_error("verdict changed between repetitions");
            total += elapsed.count();
            best = std::min(best, elapsed.count());
        }
        out.ok = true;
        out.verdict = first;
        out.mean_seconds = total / repetitions;
        out.min_seconds = best;
    } catch (const std::exception& e) {
        std::snprintf(out.error, sizeof out.error, "%s", e.what());
    }
    return out;
}

void fill(BenchRecord& r, const CellOutcome& c) {
    if (c.ok) {
        r.verdict = c.verdict;
        r.mean_seconds = c.mean_seconds;
        r.min_seconds = c.min_seconds;
    } else {
        r.error = c.error;
    }
}

#ifdef CIRCPRIME_HAVE_FORK
bool read_all(int fd, void* buf, std::size_t size) {
    auto* p = static_cast<char*>(buf);
    while (size > 0) {
        const ssize_t got = ::read(fd, p, size);
        if (got < 0 && errno == EINTR) continue;
        if (got <= 0) return false;
        p += got;
        size -= static_cast<std::size_t>(got);
    }
    return true;
}

void run_isolated(BenchRecord& record, const MethodId& method, u64 n, unsigned repetitions,
                  double timeout_seconds, const CirculantOptions& options) {
    int fds[2];
    if (::pipe(fds) != 0) throw ResourceError("bench: pipe() failed");
    std::fflush(nullptr);
    const pid_t pid = ::fork();
    if (pid < 0) {
        ::close(fds[0]);
        ::close(fds[1]);
        throw ResourceError("bench: fork() failed");
    }
    if (pid == 0) {
        ::close(fds[0]);
        const CellOutcome outcome = run_cell(method, n, repetitions, options);
        const char* p = reinterpret_cast<const char*>(&outcome);
        std::size_t left = sizeof outcome;
        while (left > 0) {
            const ssize_t put = ::write(fds[1], p, left);
            if (put <= 0) break;
            p += put;
            left -= static_cast<std::size_t>(put);
        }
        ::close(fds[1]);
        ::_exit(0);
    }
    ::close(fds[1]);

    pollfd pfd{fds[0], POLLIN, 0};
    const auto deadline = Clock::now() + std::chrono::duration<double>(timeout_seconds);
    bool ready = false;
    for (;;) {
        const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
        if (left.count() <= 0) break;
        const int rc = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count(), 1 << 30)));
        if (rc > 0) {
            ready = true;
            break;
        }
        if (rc < 0 && errno != EINTR) break;
    }

    CellOutcome outcome;
    const bool got = ready && read_all(fds[0], &outcome, sizeof outcome);
    if (!got) ::kill(pid, SIGKILL);
    ::close(fds[0]);

    int status = 0;
    rusage usage{};
    while (::wait4(pid, &status, 0, &usage) < 0 && errno == EINTR) {
    }
    record.peak_memory_bytes = static_cast<u64>(usage.ru_maxrss) * 1024;

    if (got) {
        outcome.error[sizeof outcome.error - 1] = '\0';
        fill(record, outcome);
    } else if (ready) {
        record.error = "worker exited without a result";
    } else {
        record.timed_out = true;
    }
}
#endif

std::string format_seconds(double s) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << s;
    return os.str();
}

std::string determinism(Method tag) {
    return tag == Method::MillerRabin ? "No*" : "Yes";
}

std::string theory(Method tag) {
    switch (tag) {
        case Method::TrialDivision:
        case Method::OptimizedTrialDivision: return "Exhaus.";
        case Method::MillerRabin: return "Fermat";
        case Method::AKS: return "Poly.";
        case Method::CirculantSimplified: return "Approx.";
        case Method::CirculantFull: return "Galois";
    }
    return "";
}

std::vector<MethodId> all_methods(std::uint64_t seed) {
    return {MethodId::trial_division(),       MethodId::optimized_trial_division(),
            MethodId::miller_rabin(20, seed), MethodId::aks(),
            MethodId::circulant_simplified(), MethodId::circulant_full()};
}

}  // namespace

InputSpec InputSpec::exact(u64 n) { return InputSpec(false, n); }

InputSpec InputSpec::prime_above_power_of_ten(unsigned exponent) {
    if (exponent > 18) throw ConfigError("magnitude anchor 10^k needs k <= 18");
    return InputSpec(true, exponent);
}

InputSpec InputSpec::parse(std::string_view text) {
    auto to_u64 = [&](std::string_view s) -> u64 {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ConfigError("bad bench input '" + std::string(text) + "'");
        }
        try {
            return std::stoull(std::string(s));
        } catch (const std::exception&) {
            throw ConfigError("bench input out of range '" + std::string(text) + "'");
        }
    };
    if (text.starts_with("10^")) {
        return prime_above_power_of_ten(static_cast<unsigned>(to_u64(text.substr(3))));
    }
    if (text.starts_with("1e") || text.starts_with("1E")) {
        return prime_above_power_of_ten(static_cast<unsigned>(to_u64(text.substr(2))));
    }
    return exact(to_u64(text));
}

u64 InputSpec::resolve() const {
    if (!anchor_) return value_;
    u64 p = 1;
    for (unsigned i = 0; i < value_; ++i) p *= 10;
    return next_prime(p);
}

std::string InputSpec::label() const {
    if (anchor_) return "n ~ 10^" + std::to_string(value_);
    return "n = " + std::to_string(value_);
}

SuiteConfig table_config(std::uint64_t seed, double timeout_seconds) {
    SuiteConfig c;
    c.methods = all_methods(seed);
    for (unsigned k : {6u, 8u, 9u, 10u}) c.inputs.push_back(InputSpec::prime_above_power_of_ten(k));
    c.repetitions = 3;
    c.timeout_seconds = timeout_seconds;
    c.seed = seed;
    return c;
}

SuiteConfig scaling_config(std::uint64_t seed, double timeout_seconds) {
    SuiteConfig c;
    c.methods = all_methods(seed);
    for (unsigned k = 2; k <= 15; ++k) c.inputs.push_back(InputSpec::prime_above_power_of_ten(k));
    c.repetitions = 3;
    c.timeout_seconds = timeout_seconds;
    c.seed = seed;
    return c;
}

BenchRecord time_method(const MethodId& method, u64 n, unsigned repetitions,
                        double timeout_seconds, const CirculantOptions& options) {
    if (n < 2) throw DomainError("time_method: n must be >= 2");
    if (repetitions < 1) throw DomainError("time_method: repetitions must be >= 1");
    BenchRecord record;
    record.method = method;
    record.n = n;
    record.repetitions = repetitions;
#ifdef CIRCPRIME_HAVE_FORK
    if (timeout_seconds > 0.0) {
        run_isolated(record, method, n, repetitions, timeout_seconds, options);
        return record;
    }
#endif
    fill(record, run_cell(method, n, repetitions, options));
    return record;
}

SuiteResult run_suite(const SuiteConfig& config) {
    if (config.repetitions < 1) throw ConfigError("suite: repetitions must be >= 1");
    SuiteResult result;
    result.config = config;
    for (const auto& input : config.inputs) result.resolved_inputs.push_back(input.resolve());
    for (const auto& method : config.methods) {
        for (u64 n : result.resolved_inputs) {
            try {
                result.records.push_back(time_method(method, n, config.repetitions,
                                                     config.timeout_seconds, config.circulant));
            } catch (const std::exception& e) {
                BenchRecord r;
                r.method = method;
                r.n = n;
                r.repetitions = config.repetitions;
                r.error = e.what();
                result.records.push_back(std::move(r));
            }
        }
    }
    return result;
}

std::string render_table(const SuiteResult& result) {
    std::vector<std::string> header{"Method"};
    for (const auto& in : result.config.inputs) header.push_back(in.label());
    header.push_back("Det.?");
    header.push_back("Theory");

    std::vector<std::vector<std::string>> rows;
    for (std::size_t m = 0; m < result.config.methods.size(); ++m) {
        const MethodId& method = result.config.methods[m];
        std::vector<std::string> row{method.label()};
        for (std::size_t i = 0; i < result.resolved_inputs.size(); ++i) {
            const BenchRecord& r = result.at(m, i);
            if (r.timed_out) {
                row.push_back("timeout");
            } else if (!r.mean_seconds) {
                row.push_back("error");
            } else {
                row.push_back(format_seconds(*r.mean_seconds));
            }
        }
        row.push_back(determinism(method.tag()));
        row.push_back(theory(method.tag()));
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto rule = [&] {
        for (std::size_t c = 0; c < width.size(); ++c) os << '+' << std::string(width[c] + 2, '-');
        os << "+\n";
    };
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            os << "| " << std::left << std::setw(static_cast<int>(width[c])) << cells[c] << ' ';
        }
        os << "|\n";
    };
    rule();
    line(header);
    rule();
    for (const auto& row : rows) line(row);
    rule();
    os << "Mean seconds over " << result.config.repetitions
       << " runs after one warm-up. Inputs:";
    for (std::size_t i = 0; i < result.resolved_inputs.size(); ++i) {
        os << (i ? ", " : " ") << result.resolved_inputs[i];
    }
    os << '\n';
    return os.str();
}

std::vector<std::optional<bool>> aks_slowest_by_input(const SuiteResult& result) {
    std::vector<std::optional<bool>> out(result.resolved_inputs.size());
    const auto& methods = result.config.methods;
    const auto aks = std::find_if(methods.begin(), methods.end(),
                                  [](const MethodId& m) { return m.tag() == Method::AKS; });
    if (aks == methods.end()) return out;
    const std::size_t a = static_cast<std::size_t>(aks - methods.begin());

    // Timeouts rank above every finished time.
    auto cost = [](const BenchRecord& r) -> std::optional<double> {
        if (r.timed_out) return INFINITY;
        return r.mean_seconds;
    };
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto aks_cost = cost(result.at(a, i));
        if (!aks_cost) continue;
        bool slowest = true;
        for (std::size_t m = 0; m < methods.size(); ++m) {
            if (m == a) continue;
            const auto other = cost(result.at(m, i));
            if (other && *other > *aks_cost) slowest = false;
        }
        out[i] = slowest;
    }
    return out;
}

SweepReport sweep_validate(u64 lo, u64 hi, const MethodId& method, const MethodId& baseline,
                           const CirculantOptions& options, unsigned workers) {
    if (lo < 2 || lo > hi) throw DomainError("sweep_validate: need 2 <= lo <= hi");
    const auto start = Clock::now();
    SweepReport report;
    report.lo = lo;
    report.hi = hi;
    report.method = method;
    report.baseline = baseline;

    struct Chunk {
        u64 primes = 0;
        std::vector<Disagreement> disagreements;
    };
    auto scan = [&](u64 from, u64 to, Chunk& chunk) {
        for (u64 n = from;; ++n) {
            const bool a = test(n, method, options).is_prime;
            const bool b = test(n, baseline, options).is_prime;
            if (a) ++chunk.primes;
            if (a != b) chunk.disagreements.push_back({n, a, b});
            if (n == to) break;
        }
    };

    const u64 span = hi - lo + 1;
    workers = static_cast<unsigned>(std::clamp<u64>(workers, 1, span));
    std::vector<Chunk> chunks(workers);
    if (workers == 1) {
        scan(lo, hi, chunks[0]);
    } else {
        std::vector<std::jthread> threads;
        const u64 step = span / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const u64 from = lo + w * step;
            const u64 to = w + 1 == workers ? hi : from + step - 1;
            threads.emplace_back([&, from, to, w] { scan(from, to, chunks[w]); });
        }
    }
    for (auto& c : chunks) {
        report.primes_found += c.primes;
        report.disagreements.insert(report.disagreements.end(), c.disagreements.begin(),
                                    c.disagreements.end());
    }
    report.tested = span;
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

}  // namespace circprime
