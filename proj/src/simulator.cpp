#include "grover/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grover::sim {

namespace {

constexpr double kDriftLimit = 1e-9;

void check_size(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("database size must be at least 1");
    }
    if (n > kMaxDenseSize) {
        throw std::invalid_argument("database size " + std::to_string(n) + " exceeds the dense limit of " +
                                    std::to_string(kMaxDenseSize));
    }
}

void check_dimensions(const StateVector& state, const SearchSpec& spec) {
    if (state.size() != spec.size()) {
        throw std::invalid_argument("state has " + std::to_string(state.size()) + " amplitudes but the search has " +
                                    std::to_string(spec.size()) + " entries");
    }
}

}  // namespace

SearchSpec::SearchSpec(std::size_t size, std::vector<std::size_t> targets)
    : size_(size), targets_(std::move(targets)) {
    check_size(size_);
    mask_.assign(size_, false);
    for (const std::size_t t : targets_) {
        if (t >= size_) {
            throw std::invalid_argument("target index " + std::to_string(t + 1) + " outside 1.." +
                                        std::to_string(size_));
        }
        if (mask_[t]) {
            throw std::invalid_argument("duplicate target index " + std::to_string(t + 1));
        }
        mask_[t] = true;
    }
    std::sort(targets_.begin(), targets_.end());
}

SearchSpec SearchSpec::from_one_based(std::size_t size, std::span<const long long> targets) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(targets.size());
    for (const long long t : targets) {
        if (t < 1 || static_cast<unsigned long long>(t) > size) {
            throw std::invalid_argument("target index " + std::to_string(t) + " outside 1.." + std::to_string(size));
        }
        zero_based.push_back(static_cast<std::size_t>(t - 1));
    }
    return SearchSpec(size, std::move(zero_based));
}

StateVector::StateVector(std::vector<double> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw std::invalid_argument("state vector must be nonempty");
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

double StateVector::norm_squared() const {
    return std::transform_reduce(amps_.begin(), amps_.end(), 0.0L, std::plus<>(),
                                 [](double a) { return static_cast<long double>(a) * a; });
}

StateVector uniform_state(std::size_t n) {
    check_size(n);
    return StateVector(std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n))), StateVector::Unchecked{});
}

StateVector apply_oracle(const StateVector& state, const SearchSpec& spec) {
    check_dimensions(state, spec);
    std::vector<double> out(state.amps_);
    for (const std::size_t t : spec.targets()) out[t] = -out[t];
    return StateVector(std::move(out), StateVector::Unchecked{});
}

StateVector apply_diffusion(const StateVector& state) {
    const auto& in = state.amps_;
    const long double sum = std::accumulate(in.begin(), in.end(), 0.0L);
    const double twice_mean = static_cast<double>(2.0L * sum / static_cast<long double>(in.size()));
    std::vector<double> out(in.size());
    std::transform(in.begin(), in.end(), out.begin(), [twice_mean](double v) { return twice_mean - v; });
    return StateVector(std::move(out), StateVector::Unchecked{});
}

StateVector grover_step(const StateVector& state, const SearchSpec& spec) {
    return apply_diffusion(apply_oracle(state, spec));
}

double success_probability(const StateVector& state, const SearchSpec& spec) {
    check_dimensions(state, spec);
    long double p = 0.0L;
    for (const std::size_t t : spec.targets()) p += static_cast<long double>(state[t]) * state[t];
    return static_cast<double>(p);
}

TraceRecord trace_record(std::size_t step, const StateVector& state, const SearchSpec& spec) {
    check_dimensions(state, spec);
    long double target_sum = 0.0L;
    long double other_sum = 0.0L;
    for (std::size_t i = 0; i < state.size(); ++i) {
        (spec.is_target(i) ? target_sum : other_sum) += state[i];
    }
    const std::size_t t = spec.target_count();
    const std::size_t rest = spec.size() - t;
    const double target_amp = t == 0 ? 0.0 : static_cast<double>(target_sum / std::sqrt(static_cast<long double>(t)));
    const double other_amp =
        rest == 0 ? 0.0 : static_cast<double>(other_sum / std::sqrt(static_cast<long double>(rest)));
    return {step, success_probability(state, spec), target_amp, other_amp};
}

RunResult run(const SearchSpec& spec, std::size_t iterations, bool with_trace) {
    StateVector state = uniform_state(spec.size());
    std::optional<IterationTrace> trace;
    if (with_trace) {
        trace.emplace();
        trace->reserve(iterations + 1);
        trace->push_back(trace_record(0, state, spec));
    }
    for (std::size_t n = 1; n <= iterations; ++n) {
        state = grover_step(state, spec);
        if (std::abs(state.norm_squared() - 1.0) > kDriftLimit) {
            throw std::logic_error("norm drift after step " + std::to_string(n));
        }
        if (trace) trace->push_back(trace_record(n, state, spec));
    }
    return {std::move(state), std::move(trace)};
}

}  // namespace grover::sim
