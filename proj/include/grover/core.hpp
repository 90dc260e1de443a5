#pragma once

/**
 * @file core.hpp
 * @brief Closed-form model of Grover iteration on t targets among N entries.
 *
 * With sin^2(theta) = t/N, n iterations succeed with probability
 * sin^2((2n+1) theta). The exact route rewrites this through the Chebyshev-like
 * family as p_n = (2 - f_{2n+1}(2 - 4t/N)) / 4, which is rational whenever t/N is.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "grover/rational.hpp"

namespace grover {

/// A database of N >= 1 entries of which 0 <= t <= N are targets.
class InstanceParams {
public:
    /// Throws std::invalid_argument unless N >= 1 and t <= N.
    InstanceParams(std::uint64_t database_size, std::uint64_t target_count);

    std::uint64_t database_size() const { return size_; }
    std::uint64_t target_count() const { return targets_; }

    /// t/N in lowest terms.
    Rational target_ratio() const { return Rational(targets_, size_); }

    friend bool operator==(const InstanceParams&, const InstanceParams&) = default;

private:
    std::uint64_t size_;
    std::uint64_t targets_;
};

// Verdict alternatives, one per value of cos(2 theta) that admits a rational angle,
// plus the irrational-angle remainder.

struct TrivialNoTargets {
    friend bool operator==(const TrivialNoTargets&, const TrivialNoTargets&) = default;
};
struct TrivialAllTargets {
    friend bool operator==(const TrivialAllTargets&, const TrivialAllTargets&) = default;
};
/// Smallest n with p_n = 1.
struct Exact {
    std::uint64_t iterations;
    friend bool operator==(const Exact&, const Exact&) = default;
};
/// t/N = 1/2: p_n = 1/2 for every n.
struct NeverExactConstantHalf {
    friend bool operator==(const NeverExactConstantHalf&, const NeverExactConstantHalf&) = default;
};
/// t/N = 3/4: p_n alternates between 0 and 3/4. Carries the overall success
/// probability of measuring after one iteration and guessing among the rest.
struct NeverExactThreeQuarters {
    Rational post_measurement_prob;
    friend bool operator==(const NeverExactThreeQuarters&, const NeverExactThreeQuarters&) = default;
};
struct NeverExactIrrationalAngle {
    Rational cos_two_theta;
    friend bool operator==(const NeverExactIrrationalAngle&, const NeverExactIrrationalAngle&) = default;
};

using ExactnessVerdict = std::variant<TrivialNoTargets, TrivialAllTargets, Exact, NeverExactConstantHalf,
                                      NeverExactThreeQuarters, NeverExactIrrationalAngle>;

/// Alternative name without payload, e.g. "Exact".
std::string verdict_name(const ExactnessVerdict& v);

/// Name with payload, e.g. "Exact(1)", "NeverExactIrrationalAngle(3/5)".
std::string verdict_label(const ExactnessVerdict& v);

/// Iteration count at which the verdict promises certainty: n for Exact, 0 for
/// TrivialAllTargets, nothing otherwise.
std::optional<std::uint64_t> certain_iterations(const ExactnessVerdict& v);

/// arcsin(sqrt(t/N)), in [0, pi/2].
double theta(const InstanceParams& params);

/// 1 - 2t/N.
Rational cos_two_theta(const InstanceParams& params);

/// sin^2((2n+1) theta).
double success_probability_float(const InstanceParams& params, std::uint64_t n);

/// Exact p_n.
Rational success_probability_exact(const InstanceParams& params, std::uint64_t n);

struct OptimalIterations {
    std::uint64_t iterations;
    double probability;
};

/// Picks floor or ceil of pi/(4 theta) - 1/2 (clamped at 0), whichever gives the
/// larger success probability; ties within 1e-12 go to the smaller count.
/// Throws std::invalid_argument when t = 0.
OptimalIterations optimal_iterations(const InstanceParams& params);

/// Case analysis on cos(2 theta), in exact arithmetic only.
ExactnessVerdict classify_exactness(const InstanceParams& params);

/// Smallest n <= n_max with p_n = 1 exactly, found by evaluating p_n.
std::optional<std::uint64_t> exact_hit_search(const InstanceParams& params, std::uint64_t n_max);

/// For t/N = 3/4: one iteration leaves the state in the non-target subspace, so
/// measuring reveals a non-target; guessing uniformly among the other N - 1
/// entries then succeeds with probability t/(N-1).
/// Throws std::invalid_argument unless t/N = 3/4.
Rational post_measurement_strategy(const InstanceParams& params);

}  // namespace grover
