#include <gtest/gtest.h>

#include <sstream>

#include "circprime/serialize.hpp"

namespace circprime {
namespace {

using nlohmann::json;

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(std::move(cells));
    }
    return rows;
}

TEST(Json, Orbits) {
    const json j = to_json(compute_orbits(6));
    EXPECT_EQ(j["n"], 6);
    EXPECT_EQ(j["orbits"], json::parse("[[0],[1,5],[2,4],[3]]"));
}

TEST(Json, FactorSet) {
    const json j = to_json(minimal_polynomial_factors(4));
    EXPECT_EQ(j["n"], 4);
    ASSERT_EQ(j["factors"].size(), 3u);
    EXPECT_EQ(j["factors"], json::parse("[[-2,1],[0,1],[2,2,1]]"));
    EXPECT_TRUE(j["product"].is_string());
    EXPECT_LT(j["rounding_residual"].get<double>(), 1e-6);
}

TEST(Json, Verdict) {
    const json full = to_json(test(97, MethodId::circulant_full()));
    EXPECT_EQ(full["is_prime"], true);
    EXPECT_EQ(full["method"]["name"], "circulant-full");
    EXPECT_EQ(full["evidence"], "OrbitCount(2)");
    EXPECT_FALSE(full["method"].contains("rounds"));

    const json mr = to_json(test(91, MethodId::miller_rabin(7, 42)));
    EXPECT_EQ(mr["is_prime"], false);
    EXPECT_EQ(mr["method"]["rounds"], 7);
    EXPECT_EQ(mr["method"]["seed"], 42);
}

TEST(Json, BenchRecordNullsWhenTimedOut) {
    BenchRecord r;
    r.method = MethodId::aks();
    r.n = 101;
    r.repetitions = 3;
    r.timed_out = true;
    const json j = to_json(r);
    EXPECT_TRUE(j["mean_seconds"].is_null());
    EXPECT_TRUE(j["verdict"].is_null());
    EXPECT_EQ(j["timeout"], true);
    EXPECT_FALSE(j.contains("error"));
}

TEST(Json, SweepReport) {
    const auto r = sweep_validate(2, 100, MethodId::circulant_simplified(), MethodId::trial_division());
    const json j = to_json(r);
    EXPECT_EQ(j["primes_found"], 25);
    EXPECT_EQ(j["tested"], 99);
    EXPECT_TRUE(j["disagreements"].empty());
}

TEST(Json, BigIntegers) {
    EXPECT_EQ(bigint_to_json(BigInt(-5)), json(-5));
    const BigInt big("123456789012345678901234567890");
    EXPECT_EQ(bigint_to_json(big), json("123456789012345678901234567890"));
    EXPECT_EQ(bigint_to_json(-big), json("-123456789012345678901234567890"));
}

TEST(Csv, SpectrumRoundTrip) {
    const auto s = stable_spectrum(11, 30);
    const auto rows = parse_csv(spectrum_csv(s));
    ASSERT_EQ(rows.size(), 12u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"j", "re", "im"}));
    for (std::size_t j = 0; j < 11; ++j) {
        EXPECT_EQ(std::stoul(rows[j + 1][0]), j);
        EXPECT_EQ(std::stod(rows[j + 1][1]), s.values[j].re.to_double());
        EXPECT_EQ(std::stod(rows[j + 1][2]), s.values[j].im.to_double());
    }
}

TEST(Csv, PhasePointsRoundTrip) {
    const std::vector<PhasePoint> pts{phase_point(7), phase_point(12)};
    const auto rows = parse_csv(phase_points_csv(pts));
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1][0], "7");
    EXPECT_EQ(rows[1][1], "2");
    EXPECT_EQ(std::stod(rows[1][2]), pts[0].spectral_value);
    EXPECT_EQ(rows[1][3], "true");
    EXPECT_EQ(rows[2][1], "6");
    EXPECT_EQ(rows[2][3], "false");
}

TEST(Csv, CoefficientSeries) {
    const auto rows = parse_csv(coefficient_series_csv({{7, coefficient_series(7)}}));
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_EQ(rows[1], (std::vector<std::string>{"7", "0", "1"}));
    EXPECT_EQ(rows[7], (std::vector<std::string>{"7", "6", "1"}));
    EXPECT_EQ(rows[4][2], "8");
}

TEST(Csv, BenchEmptyCells) {
    BenchRecord done;
    done.method = MethodId::trial_division();
    done.n = 97;
    done.repetitions = 3;
    done.mean_seconds = 0.25;
    done.min_seconds = 0.125;
    done.verdict = true;
    BenchRecord killed = done;
    killed.mean_seconds.reset();
    killed.min_seconds.reset();
    killed.verdict.reset();
    killed.timed_out = true;
    const auto rows = parse_csv(bench_csv({done, killed}));
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].size(), 8u);
    EXPECT_EQ(rows[1], (std::vector<std::string>{"trial-division", "97", "3", "0.25", "0.125", "true", "", "false"}));
    EXPECT_EQ(rows[2], (std::vector<std::string>{"trial-division", "97", "3", "", "", "", "", "true"}));
}

TEST(FormatDouble, RoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 1.7567593946498534}) {
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

}  // namespace
}  // namespace circprime
