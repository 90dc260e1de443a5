#pragma once

#include <cstddef>
#include <deque>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "grover/rational.hpp"

namespace grover {

/// Dense integer polynomial, coefficient k of x^k at index k.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    static IntPolynomial constant(BigInt value);
    /// The polynomial x.
    static IntPolynomial identity();

    std::span<const BigInt> coefficients() const { return coeffs_; }

    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Zero for k beyond the degree.
    BigInt coefficient(std::size_t k) const;

    /// Multiply by x.
    IntPolynomial shifted() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// e.g. "x^3 - 3x"
    std::string to_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Exact p(x).
Rational poly_eval(const IntPolynomial& p, const Rational& x);

/// Exact p(k) for an integer argument.
BigInt poly_eval(const IntPolynomial& p, const BigInt& k);

/// Polynomials with f_n(2cos(phi)) = 2cos(n phi):
/// f_0 = 2, f_1 = x, f_n = x f_{n-1} - f_{n-2}.
///
/// Entries are built on demand and memoized; lookups are thread-safe and
/// returned references stay valid for the lifetime of the family.
class ChebyshevFamily {
public:
    const IntPolynomial& operator[](std::size_t n);

    /// Process-wide instance shared by the exact success-probability code.
    static ChebyshevFamily& shared();

private:
    std::mutex mutex_;
    std::deque<IntPolynomial> members_;
};

/// f_n as defined above. Monic of degree n for n >= 1.
IntPolynomial chebyshev_like(std::size_t n);

/// All integer roots of a monic polynomial of degree >= 1, ascending,
/// without repetition. For monic integer polynomials these are all of the
/// rational roots. Throws std::invalid_argument for non-monic or constant input.
std::vector<BigInt> integer_roots(const IntPolynomial& p);

}  // namespace grover
