// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grover/core.hpp"
#include "grover/niven.hpp"
#include "grover/polynomial.hpp"
#include "grover/simulator.hpp"
#include "grover/survey.hpp"

using namespace grover;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail << what;
        }
    }
};

sim::SearchSpec first_targets(std::size_t n_entries, std::size_t t) {
    std::vector<std::size_t> targets(t);
    std::iota(targets.begin(), targets.end(), 0);
    return sim::SearchSpec(n_entries, std::move(targets));
}

void one_out_of_four(Check& c) {
    const auto spec = first_targets(4, 1);
    const double p = sim::success_probability(sim::run(spec, 1, false).state, spec);
    c.require(std::abs(p - 1.0) <= 1e-12, "simulated p_1 = " + std::to_string(p));
    c.require(success_probability_exact({4, 1}, 1) == Rational(1), "exact p_1 != 1");
    c.require(classify_exactness({4, 1}) == ExactnessVerdict{Exact{1}}, "verdict is not Exact(1)");
}

void main_theorem_survey(Check& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto records = survey_range(128, 8);
    const auto summary = cross_validate(records);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(summary.disagreements.empty(), std::to_string(summary.disagreements.size()) + " disagreements");
    c.require(summary.simulation_mismatches.empty(),
              std::to_string(summary.simulation_mismatches.size()) + " simulation mismatches");
    std::size_t exact = 0;
    for (const auto& r : records) {
        const bool quarter = Rational(r.targets, r.size) == Rational(1, 4);
        const bool is_exact = std::holds_alternative<Exact>(r.verdict);
        const bool is_all = std::holds_alternative<TrivialAllTargets>(r.verdict);
        exact += is_exact ? 1 : 0;
        c.require(quarter == is_exact, "Exact mismatch at t=" + std::to_string(r.targets) + " N=" + std::to_string(r.size));
        c.require((r.targets == r.size) == is_all,
                  "TrivialAllTargets mismatch at t=" + std::to_string(r.targets) + " N=" + std::to_string(r.size));
    }
    c.require(exact == 32, "Exact count " + std::to_string(exact));
    c.require(seconds < 60.0, "took " + std::to_string(seconds) + " s");
    c.detail << (c.ok ? "" : "; ") << "(" << records.size() << " instances, " << seconds << " s)";
}

void case_three_constancy(Check& c) {
    for (std::uint64_t n_entries = 2; n_entries <= 64; n_entries += 2) {
        const InstanceParams p(n_entries, n_entries / 2);
        for (std::uint64_t n = 0; n <= 100; ++n) {
            c.require(success_probability_exact(p, n) == Rational(1, 2),
                      "p_" + std::to_string(n) + " != 1/2 at N=" + std::to_string(n_entries));
        }
    }
}

void case_four_pattern(Check& c) {
    for (std::uint64_t n = 0; n <= 100; ++n) {
        const Rational expected = (2 * n + 1) % 3 == 0 ? Rational(0) : Rational(3, 4);
        c.require(success_probability_exact({4, 3}, n) == expected, "wrong p_" + std::to_string(n));
    }
}

void post_measurement(Check& c) {
    c.require(post_measurement_strategy({4, 3}) == Rational(1), "(3,4) strategy != 1");
    const Rational scaled = post_measurement_strategy({8, 6});
    c.require(scaled == Rational(6, 7), "(6,8) strategy = " + scaled.to_string());
    c.require(scaled < Rational(1), "(6,8) strategy not below 1");
}

void chebyshev_identity(Check& c) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double phi = angle(rng);
        const Rational x = Rational::from_double(2.0 * std::cos(phi));
        for (std::size_t n = 0; n <= 64; ++n) {
            const double value = poly_eval(chebyshev_like(n), x).to_double();
            worst = std::max(worst, std::abs(value - 2.0 * std::cos(static_cast<double>(n) * phi)));
        }
    }
    c.require(worst <= 1e-9, "max error " + std::to_string(worst));
    c.detail << (c.ok ? "" : "; ") << "(max error " << worst << ")";
}

void niven_containment(Check& c) {
    const IntPolynomial two = IntPolynomial::constant(2);
    for (std::size_t q = 1; q <= 50; ++q) {
        const IntPolynomial f = chebyshev_like(q);
        for (const auto& g : {f - two, f + two}) {
            for (const auto& r : integer_roots(g)) {
                if (r >= -2 && r <= 2) {
                    c.require(r == -2 || r == -1 || r == 0 || r == 1 || r == 2, "stray root");
                }
            }
        }
    }
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<long> den_dist(1, 1000);
    int tested = 0;
    while (tested < 500) {
        const long den = den_dist(rng);
        std::uniform_int_distribution<long> num_dist(-den + 1, den - 1);
        const Rational value(num_dist(rng), den);
        if (value.is_zero() || value == Rational(1, 2) || value == Rational(-1, 2)) continue;
        c.require(std::holds_alternative<IrrationalAngle>(decide_rational_angle(value)),
                  value.to_string() + " reported as a rational angle");
        ++tested;
    }
}

void float_exact_agreement(Check& c) {
    double worst_sim = 0.0, worst_closed = 0.0;
    for (std::uint64_t n_entries = 1; n_entries <= 64; ++n_entries) {
        for (std::uint64_t t = 0; t <= n_entries; ++t) {
            const InstanceParams p(n_entries, t);
            const auto spec = first_targets(n_entries, t);
            const auto trace = *sim::run(spec, 50, true).trace;
            for (std::uint64_t n = 0; n <= 50; ++n) {
                const double exact = success_probability_exact(p, n).to_double();
                worst_sim = std::max(worst_sim, std::abs(trace[n].success_probability - exact));
                worst_closed = std::max(worst_closed, std::abs(success_probability_float(p, n) - exact));
            }
        }
    }
    c.require(worst_sim <= 1e-10, "simulator deviation " + std::to_string(worst_sim));
    c.require(worst_closed <= 1e-10, "closed-form deviation " + std::to_string(worst_closed));
    c.detail << (c.ok ? "" : "; ") << "(max deviation sim " << worst_sim << ", closed form " << worst_closed << ")";
}

void optimal_iteration_sanity(Check& c) {
    for (std::uint64_t n_entries : {16u, 64u, 256u, 1024u}) {
        const InstanceParams p(n_entries, 1);
        const double root = std::sqrt(static_cast<double>(n_entries));
        const auto hi = static_cast<std::uint64_t>(std::ceil(std::numbers::pi * root / 4.0)) + 2;
        std::uint64_t argmax = 0;
        double best = -1.0;
        for (std::uint64_t n = 0; n <= hi; ++n) {
            const double s = std::sin(static_cast<double>(2 * n + 1) * std::asin(1.0 / root));
            if (s * s > best + 1e-12) {
                best = s * s;
                argmax = n;
            }
        }
        const auto got = optimal_iterations(p);
        c.require(got.iterations == argmax, "N=" + std::to_string(n_entries) + ": got " +
                                                 std::to_string(got.iterations) + ", brute force " +
                                                 std::to_string(argmax));
        const double estimate = std::numbers::pi * root / 4.0 - 0.5;
        c.require(std::abs(static_cast<double>(got.iterations) - estimate) <= 1.0,
                  "N=" + std::to_string(n_entries) + ": far from pi sqrt(N)/4 - 1/2");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"1 one-out-of-four exactness", one_out_of_four},
        {"2 main theorem survey N<=128", main_theorem_survey},
        {"3 t/N = 1/2 constant probability", case_three_constancy},
        {"4 t/N = 3/4 alternating pattern", case_four_pattern},
        {"5 post-measurement strategy", post_measurement},
        {"6 chebyshev cosine identity", chebyshev_identity},
        {"7 niven containment", niven_containment},
        {"8 float/exact agreement", float_exact_agreement},
        {"9 optimal iteration count", optimal_iteration_sanity},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Check check;
        try {
            run(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail << "exception: " << e.what();
        }
        std::cout << (check.ok ? "PASS " : "FAIL ") << name;
        const std::string detail = check.detail.str();
        if (!detail.empty()) std::cout << " " << detail;
        std::cout << "\n";
        failures += check.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
