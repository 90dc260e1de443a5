#include "grover/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grover/core.hpp"
#include "grover/niven.hpp"
#include "grover/polynomial.hpp"
#include "grover/simulator.hpp"
#include "grover/survey.hpp"

namespace grover::cli {

namespace {

using json = nlohmann::ordered_json;

/// Usage-level failure detected after flag parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

// Plain output rounds to 12 significant digits.
std::string format_plain(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    std::string s(buf);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

struct ClassifyArgs {
    std::uint64_t targets = 0;
    std::uint64_t size = 0;
    std::string format = "plain";
};

int classify(const ClassifyArgs& a, std::ostream& out) {
    std::optional<InstanceParams> params;
    try {
        params.emplace(a.size, a.targets);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const ExactnessVerdict verdict = classify_exactness(*params);
    const Rational c = cos_two_theta(*params);
    const auto* exact = std::get_if<Exact>(&verdict);
    const auto* three_quarters = std::get_if<NeverExactThreeQuarters>(&verdict);

    if (a.format == "json") {
        json doc;
        doc["N"] = a.size;
        doc["t"] = a.targets;
        doc["cos2theta"] = c.to_string();
        doc["verdict"] = verdict_name(verdict);
        doc["label"] = verdict_label(verdict);
        if (exact) doc["iterations"] = exact->iterations;
        if (three_quarters) doc["post_measurement_prob"] = three_quarters->post_measurement_prob.to_string();
        out << doc.dump(2) << "\n";
    } else {
        out << "instance: t=" << a.targets << ", N=" << a.size << "\n"
            << "cos(2theta): " << c << "\n"
            << "verdict: " << verdict_name(verdict) << "\n";
        if (exact) out << "iterations: " << exact->iterations << "\n";
        if (three_quarters) out << "post-measurement probability: " << three_quarters->post_measurement_prob << "\n";
    }
    return kSuccess;
}

struct SimulateArgs {
    std::size_t size = 0;
    std::vector<long long> targets;
    std::size_t iterations = 0;
    bool trace = false;
    std::string format = "plain";
};

int simulate(const SimulateArgs& a, std::ostream& out) {
    std::optional<sim::SearchSpec> spec;
    try {
        spec.emplace(sim::SearchSpec::from_one_based(a.size, a.targets));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto result = sim::run(*spec, a.iterations, a.trace);
    const double p = sim::success_probability(result.state, *spec);

    // Trace output lists the states after each iteration, steps 1..n.
    std::vector<sim::TraceRecord> rows;
    if (result.trace) {
        rows.assign(result.trace->begin() + 1, result.trace->end());
    } else {
        rows.push_back(sim::trace_record(a.iterations, result.state, *spec));
    }

    if (a.format == "json") {
        json doc;
        doc["N"] = a.size;
        doc["targets"] = a.targets;
        doc["iterations"] = a.iterations;
        doc["success_probability"] = p;
        if (a.trace) {
            json steps = json::array();
            for (const auto& r : rows) {
                steps.push_back({{"n", r.step},
                                 {"success_probability", r.success_probability},
                                 {"target_amplitude", r.target_amplitude},
                                 {"nontarget_amplitude", r.nontarget_amplitude}});
            }
            doc["trace"] = std::move(steps);
        }
        out << doc.dump(2) << "\n";
    } else if (a.format == "csv") {
        out << "n,success_probability,target_amplitude,nontarget_amplitude\n";
        for (const auto& r : rows) {
            out << r.step << ',' << format_double(r.success_probability) << ',' << format_double(r.target_amplitude)
                << ',' << format_double(r.nontarget_amplitude) << "\n";
        }
    } else {
        out << "success probability: " << format_plain(p) << "\n";
        if (a.trace) {
            for (const auto& r : rows) out << "n=" << r.step << " p=" << format_plain(r.success_probability) << "\n";
        }
    }
    return kSuccess;
}

struct SurveyArgs {
    std::uint64_t max_size = 0;
    std::uint64_t n_max = 8;
    std::string format = "csv";
    std::string out_path;
};

int survey(const SurveyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.max_size < 1) throw UsageError("--max-size must be at least 1");
    if (a.n_max < 1) throw UsageError("--n-max must be at least 1");

    const auto records = survey_range(a.max_size, a.n_max);
    const auto summary = cross_validate(records);
    const std::string report = emit_report(records, parse_report_format(a.format));

    const std::size_t mismatches = summary.disagreements.size() + summary.simulation_mismatches.size();
    std::ostringstream line;
    line << "instances: " << records.size() << ", exact: " << summary.count("Exact")
         << ", disagreements: " << mismatches << "\n";

    if (a.out_path.empty()) {
        out << report;
        err << line.str();
    } else {
        std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("cannot open '" + a.out_path + "' for writing");
        file << report;
        file.close();
        if (!file) throw IoError("failed writing '" + a.out_path + "'");
        out << line.str();
    }
    return summary.passed() ? kSuccess : kDisagreement;
}

struct ChebyshevArgs {
    std::size_t degree = 0;
    std::string eval;
};

int chebyshev(const ChebyshevArgs& a, std::ostream& out) {
    std::optional<Rational> x;
    if (!a.eval.empty()) x = parse_rational_flag("--eval", a.eval);
    const IntPolynomial f = chebyshev_like(a.degree);
    std::ostringstream os;
    os << "f_" << a.degree << "(x) = " << f.to_string() << "\n" << "coefficients: [";
    const auto coeffs = f.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        os << (k ? ", " : "") << coeffs[k].get_str();
    }
    os << "]\n";
    if (x) os << "value: " << poly_eval(f, *x) << "\n";
    out << os.str();
    return kSuccess;
}

int niven(const std::string& cos_text, std::ostream& out) {
    const Rational c = parse_rational_flag("--cos", cos_text);
    NivenVerdict verdict;
    try {
        verdict = decide_rational_angle(c);
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("--cos: ") + e.what());
    }
    if (const auto* r = std::get_if<RationalAngle>(&verdict)) {
        out << "rational angle: r = " << r->ratio << " (angle = " << r->ratio << " · π)\n";
    } else {
        out << "irrational angle\n";
    }
    return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exactness analysis and simulation of Grover search", "grover-exact"};
    app.require_subcommand(1);

    std::function<int()> action;

    ClassifyArgs ca;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a (t, N) instance for exactness");
    classify_cmd->add_option("--targets", ca.targets, "Number of targets t")->required();
    classify_cmd->add_option("--size", ca.size, "Database size N")->required();
    classify_cmd->add_option("--format", ca.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    classify_cmd->callback([&] { action = [&] { return classify(ca, out); }; });

    SimulateArgs sa;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run Grover iterations on a dense statevector");
    simulate_cmd->add_option("--size", sa.size, "Database size N")->required();
    simulate_cmd->add_option("--targets", sa.targets, "Comma-separated 1-based target indices")->delimiter(',');
    simulate_cmd->add_option("--iterations", sa.iterations, "Number of Grover iterations")->required();
    simulate_cmd->add_flag("--trace", sa.trace, "Report every iteration");
    simulate_cmd->add_option("--format", sa.format, "plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    simulate_cmd->callback([&] { action = [&] { return simulate(sa, out); }; });

    SurveyArgs va;
    auto* survey_cmd = app.add_subcommand("survey", "Classify and cross-check every instance up to a size");
    survey_cmd->add_option("--max-size", va.max_size, "Largest database size")->required();
    survey_cmd->add_option("--n-max", va.n_max, "Largest iteration count searched (default 8)");
    survey_cmd->add_option("--format", va.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    survey_cmd->add_option("--out", va.out_path, "Write the report here instead of stdout");
    survey_cmd->callback([&] { action = [&] { return survey(va, out, err); }; });

    ChebyshevArgs cha;
    auto* cheb_cmd = app.add_subcommand("chebyshev", "Print f_n with f_n(2cos x) = 2cos(nx)");
    cheb_cmd->add_option("--degree", cha.degree, "Index n")->required();
    cheb_cmd->add_option("--eval", cha.eval, "Evaluate at p/q");
    cheb_cmd->callback([&] { action = [&] { return chebyshev(cha, out); }; });

    std::string cos_text;
    auto* niven_cmd = app.add_subcommand("niven", "Decide whether a rational cosine has a rational angle");
    niven_cmd->add_option("--cos", cos_text, "Cosine value p/q in [-1, 1]")->required();
    niven_cmd->callback([&] { action = [&] { return niven(cos_text, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        std::ostringstream discarded;
        app.exit(e, discarded, err);
        return kUsageError;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
}

}  // namespace grover::cli
