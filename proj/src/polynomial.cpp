#include "grover/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grover {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt value) {
    return IntPolynomial(std::vector<BigInt>{std::move(value)});
}

IntPolynomial IntPolynomial::identity() {
    return IntPolynomial(std::vector<BigInt>{0, 1});
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

IntPolynomial IntPolynomial::shifted() const {
    if (is_zero()) return {};
    std::vector<BigInt> out;
    out.reserve(coeffs_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> out(coeffs_);
    for (auto& c : out) c = -c;
    return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<BigInt> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = a.coefficient(k) + b.coefficient(k);
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Rational poly_eval(const IntPolynomial& p, const Rational& x) {
    // Homogeneous Horner: with x = a/b and degree d,
    // b^d p(x) = sum_k c_k a^k b^(d-k), accumulated in integers.
    const auto coeffs = p.coefficients();
    if (coeffs.empty()) return Rational(0);
    const BigInt& a = x.numerator();
    const BigInt& b = x.denominator();
    BigInt acc = coeffs.back();
    BigInt b_pow = 1;
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        b_pow *= b;
        acc = acc * a + coeffs[i] * b_pow;
    }
    return Rational(std::move(acc), std::move(b_pow));
}

BigInt poly_eval(const IntPolynomial& p, const BigInt& k) {
    const auto coeffs = p.coefficients();
    BigInt acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * k + coeffs[i];
    }
    return acc;
}

const IntPolynomial& ChebyshevFamily::operator[](std::size_t n) {
    std::lock_guard lock(mutex_);
    if (members_.empty()) {
        members_.push_back(IntPolynomial::constant(2));
        members_.push_back(IntPolynomial::identity());
    }
    while (members_.size() <= n) {
        const std::size_t m = members_.size();
        members_.push_back(members_[m - 1].shifted() - members_[m - 2]);
    }
    return members_[n];
}

ChebyshevFamily& ChebyshevFamily::shared() {
    static ChebyshevFamily family;
    return family;
}

IntPolynomial chebyshev_like(std::size_t n) {
    return ChebyshevFamily::shared()[n];
}

namespace {

// Positive divisors of m > 0, by trial division up to sqrt(m).
std::vector<BigInt> positive_divisors(const BigInt& m) {
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= m; ++d) {
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            small.push_back(d);
            BigInt other = m / d;
            if (other != d) large.push_back(std::move(other));
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<BigInt> integer_roots(const IntPolynomial& p) {
    if (p.degree() < 1) {
        throw std::invalid_argument("integer_roots: constant polynomial " + p.to_string());
    }
    if (!p.is_monic()) {
        throw std::invalid_argument("integer_roots: polynomial is not monic: " + p.to_string());
    }

    std::vector<BigInt> roots;
    const auto coeffs = p.coefficients();
    std::size_t zeros = 0;
    while (sgn(coeffs[zeros]) == 0) ++zeros;
    if (zeros > 0) roots.emplace_back(0);

    const IntPolynomial deflated(std::vector<BigInt>(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end()));
    if (deflated.degree() >= 1) {
        for (const BigInt& d : positive_divisors(abs(deflated.coefficient(0)))) {
            if (sgn(poly_eval(deflated, d)) == 0) roots.push_back(d);
            const BigInt neg = -d;
            if (sgn(poly_eval(deflated, neg)) == 0) roots.push_back(neg);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace grover
