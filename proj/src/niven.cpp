#include "grover/niven.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace grover {

NivenVerdict decide_rational_angle(const Rational& c) {
    if (c.abs() > Rational(1)) {
        throw std::domain_error("cosine " + c.to_string() + " outside [-1, 1]");
    }
    // 2c must be an integer root of f_q(x) -/+ 2, hence one of -2..2.
    if (!(c * Rational(2)).is_integer()) {
        return IrrationalAngle{};
    }
    static const std::array<std::pair<Rational, Rational>, 5> principal{{
        {Rational(1), Rational(0)},
        {Rational(1, 2), Rational(1, 3)},
        {Rational(0), Rational(1, 2)},
        {Rational(-1, 2), Rational(2, 3)},
        {Rational(-1), Rational(1)},
    }};
    for (const auto& [cosine, ratio] : principal) {
        if (cosine == c) return RationalAngle{ratio};
    }
    return IrrationalAngle{};
}

}  // namespace grover
