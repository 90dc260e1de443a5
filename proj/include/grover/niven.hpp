#pragma once

#include <variant>

#include "grover/rational.hpp"

namespace grover {

/// cos(ratio * pi) equals the tested value, with ratio in [0, 1] in lowest terms.
struct RationalAngle {
    Rational ratio;
    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
};

/// No rational r has cos(r pi) equal to the tested value.
struct IrrationalAngle {
    friend bool operator==(const IrrationalAngle&, const IrrationalAngle&) = default;
};

using NivenVerdict = std::variant<RationalAngle, IrrationalAngle>;

/// Decides whether the rational cosine `c` is cos(r pi) for some rational r.
/// Only 1, 1/2, 0, -1/2 and -1 qualify (r = 0, 1/3, 1/2, 2/3, 1).
/// Throws std::domain_error when |c| > 1.
NivenVerdict decide_rational_angle(const Rational& c);

}  // namespace grover
