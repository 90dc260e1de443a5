#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "grover/polynomial.hpp"

using grover::BigInt;
using grover::chebyshev_like;
using grover::IntPolynomial;
using grover::integer_roots;
using grover::poly_eval;
using grover::Rational;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs) {
    std::vector<BigInt> v;
    for (long c : coeffs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

// Closed form: f_n(x) = sum_k (-1)^k n/(n-k) C(n-k, k) x^(n-2k), n >= 1.
IntPolynomial closed_form(unsigned long n) {
    std::vector<BigInt> c(n + 1);
    for (unsigned long k = 0; 2 * k <= n; ++k) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), n - k, k);
        BigInt term = binom * n / (n - k);
        c[n - 2 * k] = (k % 2 == 0) ? term : BigInt(-term);
    }
    return IntPolynomial(std::move(c));
}

// Brute-force integer roots over [-bound, bound].
std::vector<BigInt> scan_roots(const IntPolynomial& p, long bound) {
    std::vector<BigInt> roots;
    for (long k = -bound; k <= bound; ++k) {
        if (sgn(poly_eval(p, BigInt(k))) == 0) roots.push_back(k);
    }
    return roots;
}

}  // namespace

TEST_CASE("trimming and degree") {
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
    CHECK(poly({0, 0}).is_zero());
    CHECK(IntPolynomial().degree() == -1);
    CHECK(poly({-2, 0, 1}).to_string() == "x^2 - 2");
    CHECK(poly({0, -3, 0, 1}).to_string() == "x^3 - 3x");
    CHECK(poly({2}).to_string() == "2");
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(poly({0, -3, 0, 1}), Rational(1)) == Rational(-2));
    CHECK(poly_eval(IntPolynomial(), Rational(7, 3)) == Rational(0));
    CHECK(poly_eval(poly({-2, 0, 1}), Rational(3, 2)) == Rational(1, 4));
    CHECK(poly_eval(poly({5}), Rational(-9, 4)) == Rational(5));
    CHECK(poly_eval(poly({0, -3, 0, 1}), BigInt(2)) == 2);
}

TEST_CASE("poly_eval agrees with naive power sums") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> c(8);
        for (auto& v : c) v = coeff(rng);
        const IntPolynomial p(c);
        const Rational x(BigInt(num(rng)), BigInt(den(rng)));
        Rational expected(0);
        Rational power(1);
        for (const auto& ck : c) {
            expected += Rational(ck) * power;
            power *= x;
        }
        CHECK(poly_eval(p, x) == expected);
    }
}

TEST_CASE("chebyshev_like base cases") {
    CHECK(chebyshev_like(0) == poly({2}));
    CHECK(chebyshev_like(1) == poly({0, 1}));
    CHECK(chebyshev_like(2) == poly({-2, 0, 1}));
    CHECK(chebyshev_like(3) == poly({0, -3, 0, 1}));
    CHECK_FALSE(chebyshev_like(0).is_monic());
}

TEST_CASE("chebyshev_like matches the closed-form coefficient sum") {
    for (unsigned long n = 1; n <= 80; ++n) {
        CHECK_MESSAGE(chebyshev_like(n) == closed_form(n), "n = " << n);
    }
}

TEST_CASE("property: monic, degree n, parity of n") {
    for (std::size_t n = 1; n <= 64; ++n) {
        const IntPolynomial f = chebyshev_like(n);
        CHECK(f.is_monic());
        CHECK(f.degree() == static_cast<std::ptrdiff_t>(n));
        const auto c = f.coefficients();
        for (std::size_t k = 0; k < c.size(); ++k) {
            if ((k % 2) != (n % 2)) CHECK(sgn(c[k]) == 0);
        }
    }
}

TEST_CASE("property: cosine identity at double arguments") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    for (int i = 0; i < 200; ++i) {
        const double phi = angle(rng);
        const Rational x = Rational::from_double(2.0 * std::cos(phi));
        for (std::size_t n = 0; n <= 64; ++n) {
            const double value = poly_eval(chebyshev_like(n), x).to_double();
            CHECK(std::abs(value - 2.0 * std::cos(static_cast<double>(n) * phi)) <= 1e-9);
        }
    }
}

TEST_CASE("family lookups are safe from several threads") {
    grover::ChebyshevFamily family;
    std::vector<std::jthread> pool;
    std::vector<IntPolynomial> got(4);
    for (int k = 0; k < 4; ++k) {
        pool.emplace_back([&, k] { got[static_cast<std::size_t>(k)] = family[static_cast<std::size_t>(40 + 5 * k)]; });
    }
    pool.clear();
    for (int k = 0; k < 4; ++k) CHECK(got[static_cast<std::size_t>(k)] == closed_form(static_cast<unsigned long>(40 + 5 * k)));
}

TEST_CASE("integer_roots") {
    CHECK(integer_roots(poly({2, -3, 0, 1})) == std::vector<BigInt>{-2, 1});
    CHECK(integer_roots(poly({-2, 0, 1})).empty());
    CHECK(integer_roots(poly({0, 1})) == std::vector<BigInt>{0});
    CHECK(integer_roots(poly({0, 0, -1, 0, 1})) == std::vector<BigInt>{-1, 0, 1});
    CHECK(integer_roots(poly({6, 1})) == std::vector<BigInt>{-6});
}

TEST_CASE("integer_roots rejects non-monic or constant input") {
    CHECK_THROWS_AS(integer_roots(poly({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(integer_roots(poly({3})), std::invalid_argument);
    CHECK_THROWS_AS(integer_roots(IntPolynomial()), std::invalid_argument);
    CHECK_THROWS_AS(integer_roots(chebyshev_like(0)), std::invalid_argument);
}

TEST_CASE("property: integer_roots agrees with a bounded scan") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> root(-12, 12);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int trial = 0; trial < 150; ++trial) {
        // Random linear factors times a random monic quadratic (which may add roots of its own).
        // Every real root has |r| <= 13: linear roots by construction, quadratic ones by 1 + max|coeff|.
        IntPolynomial p = poly({coeff(rng), coeff(rng), 1});
        const int k = count(rng);
        for (int i = 0; i < k; ++i) p = p * poly({-root(rng), 1});
        CHECK_MESSAGE(integer_roots(p) == scan_roots(p, 13), p.to_string());
    }
}

TEST_CASE("property: roots of f_q -/+ 2 inside [-2, 2] are integers -2..2") {
    const std::vector<BigInt> allowed{-2, -1, 0, 1, 2};
    for (std::size_t q = 1; q <= 50; ++q) {
        const IntPolynomial f = chebyshev_like(q);
        const IntPolynomial two = poly({2});
        std::vector<BigInt> found;
        for (const auto& shifted : {f - two, f + two}) {
            for (const auto& r : integer_roots(shifted)) {
                if (r >= -2 && r <= 2) found.push_back(r);
            }
        }
        for (const auto& r : found) {
            CHECK(std::find(allowed.begin(), allowed.end(), r) != allowed.end());
        }
        // 2 = 2cos(0) is always a root of f_q - 2.
        CHECK(std::find(found.begin(), found.end(), BigInt(2)) != found.end());
    }
}
