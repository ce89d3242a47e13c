#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "circprime/bench.hpp"
#include "circprime/errors.hpp"
#include "circprime/serialize.hpp"

namespace {

using namespace circprime;

enum Exit : int {
    kPrime = 0,
    kComposite = 1,
    kError = 2,
    kUsage = 64,
    kDataError = 65,
    kCantCreate = 73,
};

constexpr u64 kForceLimit = 100'000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::optional<unsigned> precision_digits;
    unsigned max_digits = PrecisionPolicy{}.max_digits;
    u64 branch_threshold = kDefaultBranchThreshold;
    unsigned mr_rounds = kDefaultMillerRabinRounds;
    std::uint64_t seed = 1;
    std::string output_format = "text";
    std::string output_path;

    PrecisionPolicy policy() const {
        PrecisionPolicy p;
        if (precision_digits) p.initial_digits = *precision_digits;
        p.max_digits = std::max(max_digits, p.initial_digits);
        return p;
    }
    CirculantOptions circulant() const { return CirculantOptions{branch_threshold}; }
};

u64 parse_n(const std::string& text) {
    u64 v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw UsageError("'" + text + "' is not a non-negative integer");
    }
    return v;
}

void require_at_least_three(u64 n) {
    if (n < 3) throw DomainError("n must be >= 3, got " + std::to_string(n));
}

void guard_size(u64 n, bool force) {
    if (n > kForceLimit && !force) {
        throw UsageError("n = " + std::to_string(n) + " exceeds " + std::to_string(kForceLimit) +
                         "; pass --force to run anyway");
    }
}

void emit(const CliConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty() || cfg.output_path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.output_path);
    if (!out) throw OutputError("cannot write '" + cfg.output_path + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    if (!out) throw OutputError("cannot write '" + cfg.output_path + "'");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out || !(out << text)) throw OutputError("cannot write '" + path + "'");
}

std::string render(const CliConfig& cfg, const Verdict& v) {
    if (cfg.output_format == "json") return to_json(v).dump(2);
    if (cfg.output_format == "csv") {
        return "n,is_prime,method,evidence\n" + std::to_string(v.n) + ',' +
               (v.is_prime ? "true" : "false") + ',' + v.method.name() + ',' +
               evidence_name(v.evidence) + '\n';
    }
    return std::to_string(v.n) + (v.is_prime ? " is prime" : " is composite") + " [" +
           v.method.label() + ", " + evidence_name(v.evidence) + "]";
}

std::string render(const CliConfig& cfg, const OrbitPartition& p) {
    if (cfg.output_format == "json") return to_json(p).dump(2);
    std::ostringstream os;
    if (cfg.output_format == "csv") {
        os << "orbit,j\n";
        for (std::size_t i = 0; i < p.orbits.size(); ++i) {
            for (u64 j : p.orbits[i]) os << i << ',' << j << '\n';
        }
        return os.str();
    }
    os << "n = " << p.n << ": " << p.size() << " orbits\n";
    for (const auto& orbit : p.orbits) {
        os << "  {";
        for (std::size_t k = 0; k < orbit.size(); ++k) os << (k ? ", " : "") << orbit[k];
        os << "}\n";
    }
    return os.str();
}

std::string render(const CliConfig& cfg, const FactorSet& f) {
    if (cfg.output_format == "json") return to_json(f).dump(2);
    std::ostringstream os;
    if (cfg.output_format == "csv") {
        os << "factor,index,coefficient\n";
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            const auto& c = f.factors[i].coefficients();
            for (std::size_t k = 0; k < c.size(); ++k) os << i << ',' << k << ',' << c[k] << '\n';
        }
        return os.str();
    }
    os << "n = " << f.n << ": " << f.factors.size() << " irreducible factors\n";
    for (const auto& poly : f.factors) os << "  " << poly.to_string() << '\n';
    os << "rounding residual " << format_double(f.rounding_residual) << '\n';
    return os.str();
}

std::string render(const CliConfig& cfg, const PhasePoint& p) {
    if (cfg.output_format == "json") return to_json(p).dump(2);
    if (cfg.output_format == "csv") return phase_points_csv({p});
    return "n = " + std::to_string(p.n) + ": S = " + format_double(p.spectral_value) +
           ", factors = " + std::to_string(p.factor_count) + (p.is_prime ? ", prime" : ", composite");
}

std::string render(const CliConfig& cfg, const SweepReport& r) {
    if (cfg.output_format == "json") return to_json(r).dump(2);
    std::ostringstream os;
    if (cfg.output_format == "csv") {
        os << "n," << r.method.name() << ',' << r.baseline.name() << '\n';
        for (const auto& d : r.disagreements) {
            os << d.n << ',' << (d.method_verdict ? "true" : "false") << ','
               << (d.baseline_verdict ? "true" : "false") << '\n';
        }
        return os.str();
    }
    os << "[" << r.lo << ", " << r.hi << "] " << r.method.label() << " vs " << r.baseline.label()
       << ": " << r.tested << " tested, " << r.primes_found << " prime, "
       << r.disagreements.size() << " disagreements, " << format_double(r.elapsed_seconds) << " s\n";
    for (const auto& d : r.disagreements) {
        os << "  " << d.n << ": " << r.method.name() << '=' << (d.method_verdict ? "prime" : "composite")
           << ' ' << r.baseline.name() << '=' << (d.baseline_verdict ? "prime" : "composite") << '\n';
    }
    return os.str();
}

std::vector<MethodId> parse_methods(const std::vector<std::string>& names, const CliConfig& cfg) {
    std::vector<MethodId> out;
    for (const auto& name : names) out.push_back(MethodId::parse(name, cfg.seed, cfg.mr_rounds));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"Circulant-matrix primality testing and analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Key-value configuration file; flags override it");

    app.add_option("--format", cfg.output_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("-o,--output", cfg.output_path, "Write output to this file");
    app.add_option("--precision", cfg.precision_digits, "Starting precision in decimal digits")
        ->envname("CIRCPRIME_PRECISION")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-digits", cfg.max_digits, "Precision cap in decimal digits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for Miller-Rabin witnesses")
        ->envname("CIRCPRIME_SEED")
        ->capture_default_str();
    app.add_option("--branch-threshold", cfg.branch_threshold,
                   "Above this n the full test uses the factorization shape")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--rounds", cfg.mr_rounds, "Miller-Rabin rounds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string n_text;
    std::string method_name = "circulant-full";
    bool force = false;

    auto* test_cmd = app.add_subcommand("test", "Decide primality of n");
    test_cmd->add_option("n", n_text, "Integer >= 2")->required();
    test_cmd->add_option("-m,--method", method_name, "Method")->capture_default_str();

    auto* orbits_cmd = app.add_subcommand("orbits", "Galois orbits of the eigenvalue indices");
    auto* minpoly_cmd = app.add_subcommand("minpoly", "Irreducible factors of the minimal polynomial");
    for (auto* cmd : {orbits_cmd, minpoly_cmd}) {
        cmd->add_option("n", n_text, "Integer >= 3")->required();
        cmd->add_flag("--force", force, "Allow n > 100000");
    }
    auto* spectral_cmd = app.add_subcommand("spectral", "Spectral property and factor count");
    spectral_cmd->add_option("n", n_text, "Integer >= 3")->required();

    std::string suite = "table";
    std::vector<std::string> bench_methods;
    std::vector<std::string> bench_inputs;
    std::optional<unsigned> repetitions;
    std::optional<double> timeout;
    std::string csv_path;
    auto* bench_cmd = app.add_subcommand("bench", "Timing comparison across methods");
    bench_cmd->add_option("--suite", suite, "Preset suite")
        ->check(CLI::IsMember({"table", "scaling"}))
        ->capture_default_str();
    bench_cmd->add_option("--methods", bench_methods, "Override the method list")->delimiter(',');
    bench_cmd->add_option("--inputs", bench_inputs, "Override inputs: integers or 10^k anchors")
        ->delimiter(',');
    bench_cmd->add_option("--repetitions", repetitions, "Timed runs per cell")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--timeout", timeout, "Seconds per cell; 0 disables");
    bench_cmd->add_option("--csv", csv_path, "Also write per-cell records as CSV");

    std::string lo_text, hi_text;
    std::vector<std::string> sweep_methods{"circulant-full", "miller-rabin"};
    unsigned workers = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Compare two methods on every n in [lo, hi]");
    sweep_cmd->add_option("lo", lo_text)->required();
    sweep_cmd->add_option("hi", hi_text)->required();
    sweep_cmd->add_option("--methods", sweep_methods, "Method and baseline")
        ->delimiter(',')
        ->expected(2)
        ->capture_default_str();
    sweep_cmd->add_option("--workers", workers, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string kind;
    std::string from_text = "3", to_text = "130";
    auto* plot_cmd = app.add_subcommand("plot-data", "CSV series for plotting");
    plot_cmd->add_option("kind", kind, "coefficients, phase or eigenvalues")
        ->required()
        ->check(CLI::IsMember({"coefficients", "phase", "eigenvalues"}));
    plot_cmd->add_option("--from", from_text, "First n")->capture_default_str();
    plot_cmd->add_option("--to", to_text, "Last n")->capture_default_str();
    plot_cmd->add_option("--n", n_text, "n for the eigenvalue scatter");
    plot_cmd->add_flag("--force", force, "Allow --to > 100000");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*test_cmd) {
            const u64 n = parse_n(n_text);
            if (n < 2) throw UsageError("n must be >= 2, got " + std::to_string(n));
            const auto method = MethodId::parse(method_name, cfg.seed, cfg.mr_rounds);
            const auto verdict = test(n, method, cfg.circulant());
            emit(cfg, render(cfg, verdict));
            return verdict.is_prime ? kPrime : kComposite;
        }
        if (*orbits_cmd || *minpoly_cmd || *spectral_cmd) {
            const u64 n = parse_n(n_text);
            try {
                require_at_least_three(n);
            } catch (const DomainError& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kDataError;
            }
            if (*orbits_cmd) {
                guard_size(n, force);
                emit(cfg, render(cfg, compute_orbits(n)));
            } else if (*minpoly_cmd) {
                guard_size(n, force);
                emit(cfg, render(cfg, minimal_polynomial_factors(n, cfg.policy())));
            } else {
                emit(cfg, render(cfg, phase_point(n, cfg.policy())));
            }
            return 0;
        }
        if (*bench_cmd) {
            SuiteConfig sc = suite == "scaling" ? scaling_config(cfg.seed) : table_config(cfg.seed);
            if (!bench_methods.empty()) sc.methods = parse_methods(bench_methods, cfg);
            for (auto& m : sc.methods) m = MethodId::parse(m.name(), cfg.seed, cfg.mr_rounds);
            if (!bench_inputs.empty()) {
                sc.inputs.clear();
                for (const auto& in : bench_inputs) sc.inputs.push_back(InputSpec::parse(in));
            }
            if (repetitions) sc.repetitions = *repetitions;
            if (timeout) sc.timeout_seconds = *timeout;
            sc.circulant = cfg.circulant();
            const auto result = run_suite(sc);
            if (!csv_path.empty()) write_file(csv_path, bench_csv(result.records));
            if (cfg.output_format == "json") {
                emit(cfg, to_json(result).dump(2));
            } else if (cfg.output_format == "csv") {
                emit(cfg, bench_csv(result.records));
            } else {
                emit(cfg, render_table(result));
            }
            return 0;
        }
        if (*sweep_cmd) {
            const auto methods = parse_methods(sweep_methods, cfg);
            const auto report = sweep_validate(parse_n(lo_text), parse_n(hi_text), methods[0],
                                               methods[1], cfg.circulant(), workers);
            emit(cfg, render(cfg, report));
            return report.disagreements.empty() ? 0 : 1;
        }
        if (*plot_cmd) {
            if (kind == "eigenvalues") {
                if (n_text.empty()) throw UsageError("plot-data eigenvalues requires --n");
                const u64 n = parse_n(n_text);
                require_at_least_three(n);
                const unsigned digits = cfg.precision_digits.value_or(default_stable_digits(n));
                emit(cfg, spectrum_csv(stable_spectrum(n, digits)));
                return 0;
            }
            // Both series need n >= 3; a lower --from is clamped.
            const u64 from = std::max<u64>(parse_n(from_text), 3);
            const u64 to = parse_n(to_text);
            if (to < from) throw UsageError("--to must be >= --from");
            guard_size(to, force);
            if (kind == "phase") {
                std::vector<PhasePoint> points;
                for (u64 n = from; n <= to; ++n) points.push_back(phase_point(n, cfg.policy()));
                emit(cfg, phase_points_csv(points));
            } else {
                std::vector<std::pair<u64, std::vector<BigInt>>> series;
                for (u64 n = from; n <= to; ++n) series.emplace_back(n, coefficient_series(n, cfg.policy()));
                emit(cfg, coefficient_series_csv(series));
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const OutputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCantCreate;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
