#pragma once

/**
 * @file rational.hpp
 * @brief Exact fractions over arbitrary-precision integers.
 *
 * Every Rational is kept in canonical form: the denominator is positive,
 * numerator and denominator are coprime, and zero is 0/1. Construction
 * from an unreduced pair normalizes instead of rejecting, so structural
 * equality is value equality.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace grover {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : num_(0), den_(1) {}

    template <std::integral T>
    Rational(T value) : num_(to_big(value)), den_(1) {}  // NOLINT: implicit by design of a number type

    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}

    /// Throws std::domain_error when `denominator` is zero.
    Rational(BigInt numerator, BigInt denominator);

    /// Parses "p/q" or "k", with an optional leading minus.
    /// Throws std::invalid_argument on malformed text or q = 0.
    static Rational parse(std::string_view text);

    /// Exact value of a finite double (every finite double is dyadic).
    static Rational from_double(double value);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    double to_double() const;

    /// Always "p/q", including q = 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational abs() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws std::domain_error when b is zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    struct Canonical {};
    Rational(BigInt numerator, BigInt denominator, Canonical)
        : num_(std::move(numerator)), den_(std::move(denominator)) {}

    static_assert(sizeof(long) == 8, "BigInt conversions assume LP64");

    template <std::integral T>
    static BigInt to_big(T value) {
        if constexpr (std::is_signed_v<T>) {
            return BigInt(static_cast<long>(value));
        } else {
            return BigInt(static_cast<unsigned long>(value));
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace grover
