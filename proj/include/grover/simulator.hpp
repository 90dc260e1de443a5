#pragma once

/**
 * @file simulator.hpp
 * @brief Dense real statevector simulation of Grover search over N entries.
 *
 * Amplitudes stay real: the uniform start state, the selective sign flip and
 * the inversion about the mean are all real operators. Indices are 0-based
 * internally; SearchSpec::from_one_based is the entry point for user-facing
 * 1-based indices.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace grover::sim {

/// Largest database the dense simulator accepts.
inline constexpr std::size_t kMaxDenseSize = std::size_t{1} << 24;

/// Tolerance on |sum of squared amplitudes - 1| for caller-supplied states.
inline constexpr double kNormTolerance = 1e-12;

class SearchSpec {
public:
    /// `targets` are 0-based, distinct and below `size`.
    /// Throws std::invalid_argument otherwise, or when size is 0 or above kMaxDenseSize.
    SearchSpec(std::size_t size, std::vector<std::size_t> targets);

    /// Same, but `targets` are 1-based as presented to users.
    static SearchSpec from_one_based(std::size_t size, std::span<const long long> targets);

    std::size_t size() const { return size_; }
    /// Sorted, 0-based.
    std::span<const std::size_t> targets() const { return targets_; }
    std::size_t target_count() const { return targets_.size(); }
    bool is_target(std::size_t index) const { return mask_[index]; }

private:
    std::size_t size_;
    std::vector<std::size_t> targets_;
    std::vector<bool> mask_;
};

class StateVector {
public:
    /// Throws std::invalid_argument when empty or not unit norm within kNormTolerance.
    explicit StateVector(std::vector<double> amplitudes);

    std::span<const double> amplitudes() const { return amps_; }
    std::size_t size() const { return amps_.size(); }
    double operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;

private:
    friend StateVector uniform_state(std::size_t n);
    friend StateVector apply_oracle(const StateVector&, const SearchSpec&);
    friend StateVector apply_diffusion(const StateVector&);

    struct Unchecked {};
    StateVector(std::vector<double> amplitudes, Unchecked) : amps_(std::move(amplitudes)) {}

    std::vector<double> amps_;
};

struct TraceRecord {
    std::size_t step;
    double success_probability;
    /// Signed amplitude along the normalized target direction, sin((2n+1) theta).
    double target_amplitude;
    /// Signed amplitude along the normalized non-target direction, cos((2n+1) theta).
    double nontarget_amplitude;
};

using IterationTrace = std::vector<TraceRecord>;

/// Every amplitude 1/sqrt(n). Throws std::invalid_argument for n = 0 or n > kMaxDenseSize.
StateVector uniform_state(std::size_t n);

/// Negates target amplitudes. Throws std::invalid_argument on dimension mismatch.
StateVector apply_oracle(const StateVector& state, const SearchSpec& spec);

/// v -> 2 mean - v for every amplitude, O(N).
StateVector apply_diffusion(const StateVector& state);

/// apply_diffusion(apply_oracle(state, spec)).
StateVector grover_step(const StateVector& state, const SearchSpec& spec);

/// Sum of squared target amplitudes. Throws std::invalid_argument on dimension mismatch.
double success_probability(const StateVector& state, const SearchSpec& spec);

TraceRecord trace_record(std::size_t step, const StateVector& state, const SearchSpec& spec);

struct RunResult {
    StateVector state;
    /// n + 1 records when requested; record 0 is the initial state.
    std::optional<IterationTrace> trace;
};

/// Applies `iterations` Grover steps to the uniform state. Throws std::logic_error
/// if the norm ever drifts by more than 1e-9, which would indicate an operator bug.
RunResult run(const SearchSpec& spec, std::size_t iterations, bool with_trace);

}  // namespace grover::sim
