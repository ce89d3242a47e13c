#pragma once

/// JSON and CSV renderings of the library's value types.

#include "json.hpp"
#include <string>
#include <vector>

#include "circprime/bench.hpp"
#include "circprime/galois.hpp"
#include "circprime/minpoly.hpp"
#include "circprime/primality.hpp"
#include "circprime/spectral.hpp"
#include "circprime/spectrum.hpp"

namespace circprime {

/// {"n": n, "orbits": [[...], ...]}
nlohmann::json to_json(const OrbitPartition& p);
/// {"n": n, "factors": [[c0, c1, ...], ...]}; coefficients are JSON
/// integers when they fit in 64 bits, decimal strings otherwise.
nlohmann::json to_json(const FactorSet& f);
/// {"n", "is_prime", "method", "evidence"}
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const PhasePoint& p);
nlohmann::json to_json(const BenchRecord& r);
nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const SuiteResult& r);

/// Coefficient as JSON: integer if it fits in int64, else string.
nlohmann::json bigint_to_json(const BigInt& v);

/// j,re,im with 17 significant digits.
std::string spectrum_csv(const Spectrum& s);
/// n,factor_count,spectral_value,is_prime
std::string phase_points_csv(const std::vector<PhasePoint>& points);
/// n,index,coefficient
std::string coefficient_series_csv(const std::vector<std::pair<u64, std::vector<BigInt>>>& series);
/// method,n,repetitions,mean_seconds,min_seconds,verdict,peak_memory_bytes,timeout
std::string bench_csv(const std::vector<BenchRecord>& records);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace circprime
