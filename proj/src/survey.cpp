#include "grover/survey.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "grover/simulator.hpp"

namespace grover {

namespace {

// Probabilities this close to the running maximum count as ties; the earliest step wins.
constexpr double kArgmaxTolerance = 1e-12;

}  // namespace

bool verdict_agrees(const ExactnessVerdict& verdict, const std::optional<std::uint64_t>& exact_hit) {
    return certain_iterations(verdict) == exact_hit;
}

SurveyRecord survey_instance(const InstanceParams& params, std::uint64_t n_max, const SurveyOptions& options) {
    SurveyRecord record{
        .size = params.database_size(),
        .targets = params.target_count(),
        .cos_two_theta = cos_two_theta(params),
        .verdict = classify_exactness(params),
        .exact_hit = exact_hit_search(params, n_max),
        .sim_max_prob = std::nullopt,
        .sim_argmax_n = std::nullopt,
        .agreement = false,
        .exact_max_prob = 0.0,
    };
    record.agreement = verdict_agrees(record.verdict, record.exact_hit);

    Rational best(0);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        best = std::max(best, success_probability_exact(params, n));
    }
    record.exact_max_prob = best.to_double();

    if (params.database_size() <= options.sim_cap) {
        std::vector<std::size_t> targets(params.target_count());
        for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = i;
        const sim::SearchSpec spec(params.database_size(), std::move(targets));
        const auto result = sim::run(spec, n_max, true);
        double max_p = 0.0;
        for (const auto& step : *result.trace) max_p = std::max(max_p, step.success_probability);
        for (const auto& step : *result.trace) {
            if (step.success_probability >= max_p - kArgmaxTolerance) {
                record.sim_max_prob = step.success_probability;
                record.sim_argmax_n = step.step;
                break;
            }
        }
    }
    return record;
}

std::vector<SurveyRecord> survey_range(std::uint64_t max_size, std::uint64_t n_max, const SurveyOptions& options) {
    std::vector<InstanceParams> instances;
    for (std::uint64_t n = 1; n <= max_size; ++n) {
        for (std::uint64_t t = 0; t <= n; ++t) instances.emplace_back(n, t);
    }

    std::vector<std::optional<SurveyRecord>> slots(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            slots[i] = survey_instance(instances[i], n_max, options);
        }
    };
    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, instances.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    }

    std::vector<SurveyRecord> records;
    records.reserve(slots.size());
    for (auto& slot : slots) records.push_back(std::move(*slot));
    std::sort(records.begin(), records.end(), [](const SurveyRecord& a, const SurveyRecord& b) {
        return std::pair(a.size, a.targets) < std::pair(b.size, b.targets);
    });
    return records;
}

std::size_t ValidationSummary::count(std::string_view verdict) const {
    const auto it = verdict_counts.find(std::string(verdict));
    return it == verdict_counts.end() ? 0 : it->second;
}

ValidationSummary cross_validate(const std::vector<SurveyRecord>& records) {
    ValidationSummary summary;
    for (const auto& r : records) {
        ++summary.verdict_counts[verdict_name(r.verdict)];
        if (!r.agreement) summary.disagreements.push_back(r);
        if (r.sim_max_prob && std::abs(*r.sim_max_prob - r.exact_max_prob) > kSimulationTolerance) {
            summary.simulation_mismatches.push_back(r);
        }
    }
    return summary;
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "', expected csv or json");
}

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    std::string s(buf, end);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::string emit_report(const std::vector<SurveyRecord>& records, ReportFormat format) {
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& r : records) {
            nlohmann::ordered_json row;
            row["N"] = r.size;
            row["t"] = r.targets;
            row["cos2theta"] = r.cos_two_theta.to_string();
            row["verdict"] = verdict_label(r.verdict);
            row["exact_hit_n"] = r.exact_hit ? nlohmann::ordered_json(*r.exact_hit) : nullptr;
            row["sim_max_prob"] = r.sim_max_prob ? nlohmann::ordered_json(*r.sim_max_prob) : nullptr;
            row["sim_argmax_n"] = r.sim_argmax_n ? nlohmann::ordered_json(*r.sim_argmax_n) : nullptr;
            row["agreement"] = r.agreement;
            doc.push_back(std::move(row));
        }
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << kCsvHeader << "\n";
    for (const auto& r : records) {
        os << r.size << ',' << r.targets << ',' << r.cos_two_theta.to_string() << ',' << verdict_label(r.verdict)
           << ',';
        if (r.exact_hit) os << *r.exact_hit;
        os << ',';
        if (r.sim_max_prob) os << format_double(*r.sim_max_prob);
        os << ',';
        if (r.sim_argmax_n) os << *r.sim_argmax_n;
        os << ',' << (r.agreement ? "true" : "false") << "\n";
    }
    return os.str();
}

std::string emit_report(const std::vector<SurveyRecord>& records, std::string_view format) {
    return emit_report(records, parse_report_format(format));
}

}  // namespace grover
