#pragma once

/**
 * @file survey.hpp
 * @brief Exhaustive (t, N) sweep checked three ways.
 *
 * Each instance is classified analytically, searched for an exact hit in
 * rational arithmetic, and (for small N) simulated on a dense statevector.
 * Records come back in (N, t) order whatever the execution order was.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grover/core.hpp"
#include "grover/rational.hpp"

namespace grover {

struct SurveyRecord {
    std::uint64_t size;
    std::uint64_t targets;
    Rational cos_two_theta;
    ExactnessVerdict verdict;
    std::optional<std::uint64_t> exact_hit;
    std::optional<double> sim_max_prob;
    std::optional<std::uint64_t> sim_argmax_n;
    bool agreement;
    /// max over n <= n_max of the exact p_n, as a double. Not part of the reports.
    double exact_max_prob;
};

struct SurveyOptions {
    /// Largest N that is also simulated on a statevector.
    std::uint64_t sim_cap = 64;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Does the exact hit agree with what the verdict promises?
bool verdict_agrees(const ExactnessVerdict& verdict, const std::optional<std::uint64_t>& exact_hit);

SurveyRecord survey_instance(const InstanceParams& params, std::uint64_t n_max, const SurveyOptions& options = {});

/// One record per 1 <= N <= max_size, 0 <= t <= N.
std::vector<SurveyRecord> survey_range(std::uint64_t max_size, std::uint64_t n_max, const SurveyOptions& options = {});

/// Largest tolerated |sim_max_prob - exact_max_prob|.
inline constexpr double kSimulationTolerance = 1e-10;

struct ValidationSummary {
    /// Keyed by verdict_name().
    std::map<std::string, std::size_t> verdict_counts;
    /// Records whose agreement flag is false.
    std::vector<SurveyRecord> disagreements;
    /// Records whose simulated maximum strays from the exact maximum.
    std::vector<SurveyRecord> simulation_mismatches;

    std::size_t count(std::string_view verdict) const;
    bool passed() const { return disagreements.empty() && simulation_mismatches.empty(); }
};

ValidationSummary cross_validate(const std::vector<SurveyRecord>& records);

enum class ReportFormat { Csv, Json };

/// "csv" or "json"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view name);

inline constexpr std::string_view kCsvHeader = "N,t,cos2theta,verdict,exact_hit_n,sim_max_prob,sim_argmax_n,agreement";

std::string emit_report(const std::vector<SurveyRecord>& records, ReportFormat format);
std::string emit_report(const std::vector<SurveyRecord>& records, std::string_view format);

/// Shortest round-trip decimal, always with a fractional part or exponent ("1.0", "0.25").
std::string format_double(double value);

}  // namespace grover
