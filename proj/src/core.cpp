#include "grover/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "grover/polynomial.hpp"

namespace grover {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kTieTolerance = 1e-12;

}  // namespace

InstanceParams::InstanceParams(std::uint64_t database_size, std::uint64_t target_count)
    : size_(database_size), targets_(target_count) {
    if (size_ == 0) {
        throw std::invalid_argument("database size must be at least 1");
    }
    if (targets_ > size_) {
        throw std::invalid_argument("target count " + std::to_string(targets_) + " exceeds database size " +
                                    std::to_string(size_));
    }
}

std::string verdict_name(const ExactnessVerdict& v) {
    return std::visit(overloaded{
                          [](const TrivialNoTargets&) -> std::string { return "TrivialNoTargets"; },
                          [](const TrivialAllTargets&) -> std::string { return "TrivialAllTargets"; },
                          [](const Exact&) -> std::string { return "Exact"; },
                          [](const NeverExactConstantHalf&) -> std::string { return "NeverExactConstantHalf"; },
                          [](const NeverExactThreeQuarters&) -> std::string { return "NeverExactThreeQuarters"; },
                          [](const NeverExactIrrationalAngle&) -> std::string {
                              return "NeverExactIrrationalAngle";
                          },
                      },
                      v);
}

std::string verdict_label(const ExactnessVerdict& v) {
    return std::visit(overloaded{
                          [](const Exact& e) { return "Exact(" + std::to_string(e.iterations) + ")"; },
                          [](const NeverExactThreeQuarters& q) {
                              return "NeverExactThreeQuarters(" + q.post_measurement_prob.to_string() + ")";
                          },
                          [](const NeverExactIrrationalAngle& a) {
                              return "NeverExactIrrationalAngle(" + a.cos_two_theta.to_string() + ")";
                          },
                          [&v](const auto&) { return verdict_name(v); },
                      },
                      v);
}

std::optional<std::uint64_t> certain_iterations(const ExactnessVerdict& v) {
    if (const auto* e = std::get_if<Exact>(&v)) return e->iterations;
    if (std::holds_alternative<TrivialAllTargets>(v)) return 0;
    return std::nullopt;
}

double theta(const InstanceParams& params) {
    const double ratio =
        static_cast<double>(params.target_count()) / static_cast<double>(params.database_size());
    return std::asin(std::sqrt(ratio));
}

Rational cos_two_theta(const InstanceParams& params) {
    return Rational(1) - Rational(2) * params.target_ratio();
}

double success_probability_float(const InstanceParams& params, std::uint64_t n) {
    const double s = std::sin(static_cast<double>(2 * n + 1) * theta(params));
    return s * s;
}

Rational success_probability_exact(const InstanceParams& params, std::uint64_t n) {
    // sin^2(m theta) = (1 - cos(2 m theta)) / 2 = (2 - f_m(2 cos 2theta)) / 4, m = 2n+1.
    const Rational x = Rational(2) * cos_two_theta(params);
    const IntPolynomial& f = ChebyshevFamily::shared()[2 * n + 1];
    return (Rational(2) - poly_eval(f, x)) / Rational(4);
}

OptimalIterations optimal_iterations(const InstanceParams& params) {
    if (params.target_count() == 0) {
        throw std::invalid_argument("optimal_iterations: no targets, the state never rotates");
    }
    const double target = std::numbers::pi / (4.0 * theta(params)) - 0.5;
    const auto lo = static_cast<std::uint64_t>(std::max(0.0, std::floor(target)));
    const auto hi = static_cast<std::uint64_t>(std::max(0.0, std::ceil(target)));
    const double p_lo = success_probability_float(params, lo);
    if (hi == lo) return {lo, p_lo};
    const double p_hi = success_probability_float(params, hi);
    if (p_hi > p_lo + kTieTolerance) return {hi, p_hi};
    return {lo, p_lo};
}

ExactnessVerdict classify_exactness(const InstanceParams& params) {
    const Rational c = cos_two_theta(params);
    if (c == Rational(1)) return TrivialNoTargets{};
    if (c == Rational(-1)) return TrivialAllTargets{};
    if (c.is_zero()) return NeverExactConstantHalf{};
    if (c == Rational(-1, 2)) return NeverExactThreeQuarters{post_measurement_strategy(params)};
    if (c == Rational(1, 2)) return Exact{1};
    return NeverExactIrrationalAngle{c};
}

std::optional<std::uint64_t> exact_hit_search(const InstanceParams& params, std::uint64_t n_max) {
    const Rational one(1);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (success_probability_exact(params, n) == one) return n;
    }
    return std::nullopt;
}

Rational post_measurement_strategy(const InstanceParams& params) {
    if (params.target_ratio() != Rational(3, 4)) {
        throw std::invalid_argument("post-measurement strategy needs t/N = 3/4, got " +
                                    params.target_ratio().to_string());
    }
    return Rational(params.target_count(), params.database_size() - 1);
}

}  // namespace grover
