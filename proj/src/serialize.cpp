#include "circprime/serialize.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace circprime {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        return v.convert_to<long long>();
    }
    return v.str();
}

json to_json(const OrbitPartition& p) {
    return {{"n", p.n}, {"orbits", p.orbits}};
}

json to_json(const FactorSet& f) {
    json factors = json::array();
    for (const auto& poly : f.factors) {
        json coeffs = json::array();
        for (const auto& c : poly.coefficients()) coeffs.push_back(bigint_to_json(c));
        factors.push_back(std::move(coeffs));
    }
    return {{"n", f.n},
            {"factors", std::move(factors)},
            {"product", f.product_string()},
            {"rounding_residual", f.rounding_residual}};
}

json to_json(const Verdict& v) {
    json method = {{"name", v.method.name()}};
    if (const auto& p = v.method.params()) {
        method["rounds"] = p->rounds;
        method["seed"] = p->seed;
    }
    return {{"n", v.n},
            {"is_prime", v.is_prime},
            {"method", std::move(method)},
            {"evidence", evidence_name(v.evidence)}};
}

json to_json(const PhasePoint& p) {
    return {{"n", p.n},
            {"factor_count", p.factor_count},
            {"spectral_value", p.spectral_value},
            {"is_prime", p.is_prime}};
}

json to_json(const BenchRecord& r) {
    auto opt = [](const auto& o) -> json { return o ? json(*o) : json(nullptr); };
    json out = {{"method", r.method.name()},
                {"n", r.n},
                {"repetitions", r.repetitions},
                {"mean_seconds", opt(r.mean_seconds)},
                {"min_seconds", opt(r.min_seconds)},
                {"verdict", opt(r.verdict)},
                {"peak_memory_bytes", opt(r.peak_memory_bytes)},
                {"timeout", r.timed_out}};
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

json to_json(const SweepReport& r) {
    json dis = json::array();
    for (const auto& d : r.disagreements) {
        dis.push_back({{"n", d.n}, {"method", d.method_verdict}, {"baseline", d.baseline_verdict}});
    }
    return {{"lo", r.lo},
            {"hi", r.hi},
            {"method", r.method.name()},
            {"baseline", r.baseline.name()},
            {"tested", r.tested},
            {"primes_found", r.primes_found},
            {"disagreements", std::move(dis)},
            {"elapsed_seconds", r.elapsed_seconds}};
}

json to_json(const SuiteResult& r) {
    json records = json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    json slowest = json::array();
    for (const auto& s : aks_slowest_by_input(r)) slowest.push_back(s ? json(*s) : json(nullptr));
    return {{"inputs", r.resolved_inputs},
            {"repetitions", r.config.repetitions},
            {"timeout_seconds", r.config.timeout_seconds},
            {"seed", r.config.seed},
            {"records", std::move(records)},
            {"aks_slowest", std::move(slowest)}};
}

std::string spectrum_csv(const Spectrum& s) {
    std::ostringstream os;
    os << "j,re,im\n";
    for (std::size_t j = 0; j < s.values.size(); ++j) {
        os << j << ',' << format_double(s.values[j].re.to_double()) << ','
           << format_double(s.values[j].im.to_double()) << '\n';
    }
    return os.str();
}

std::string phase_points_csv(const std::vector<PhasePoint>& points) {
    std::ostringstream os;
    os << "n,factor_count,spectral_value,is_prime\n";
    for (const auto& p : points) {
        os << p.n << ',' << p.factor_count << ',' << format_double(p.spectral_value) << ','
           << (p.is_prime ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string coefficient_series_csv(const std::vector<std::pair<u64, std::vector<BigInt>>>& series) {
    std::ostringstream os;
    os << "n,index,coefficient\n";
    for (const auto& [n, coeffs] : series) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) os << n << ',' << i << ',' << coeffs[i] << '\n';
    }
    return os.str();
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << "method,n,repetitions,mean_seconds,min_seconds,verdict,peak_memory_bytes,timeout\n";
    for (const auto& r : records) {
        os << r.method.name() << ',' << r.n << ',' << r.repetitions << ','
           << (r.mean_seconds ? format_double(*r.mean_seconds) : "") << ','
           << (r.min_seconds ? format_double(*r.min_seconds) : "") << ','
           << (r.verdict ? (*r.verdict ? "true" : "false") : "") << ','
           << (r.peak_memory_bytes ? std::to_string(*r.peak_memory_bytes) : "") << ','
           << (r.timed_out ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace circprime
