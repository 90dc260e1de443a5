#include "grover/rational.hpp"

#include <cmath>
#include <ostream>
#include <regex>
#include <stdexcept>

namespace grover {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (sgn(den_) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::parse(std::string_view text) {
    static const std::regex pattern(R"(^(-?[0-9]+)(?:/([0-9]+))?$)");
    const std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) {
        throw std::invalid_argument("malformed rational '" + s + "', expected p/q");
    }
    BigInt num(m[1].str());
    BigInt den(m[2].matched ? m[2].str() : std::string("1"));
    if (sgn(den) == 0) {
        throw std::invalid_argument("malformed rational '" + s + "': zero denominator");
    }
    return Rational(std::move(num), std::move(den));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("cannot convert a non-finite double to a rational");
    }
    mpq_class q(value);
    return Rational(q.get_num(), q.get_den(), Canonical{});
}

double Rational::to_double() const {
    mpq_class q;
    mpz_set(mpq_numref(q.get_mpq_t()), num_.get_mpz_t());
    mpz_set(mpq_denref(q.get_mpq_t()), den_.get_mpz_t());
    return q.get_d();
}

std::string Rational::to_string() const {
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const {
    return Rational(-num_, den_, Canonical{});
}

Rational Rational::abs() const {
    return Rational(::abs(num_), den_, Canonical{});
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) {
        return Rational(a.num_ + b.num_, a.den_);
    }
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    const int c = cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace grover
