// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "kcol/exact_numbers.hpp"
#include "support.hpp"

using namespace kcol;

namespace {

AlgebraicTime quad(long p, long q, long d, long r) {
    return AlgebraicTime::quadratic(BigInt(p), BigInt(q), BigInt(d), BigInt(r));
}

Rational rat(long n, long d = 1) {
    Rational r{BigInt(n), BigInt(d)};
    r.canonicalize();
    return r;
}

}  // namespace

TEST_SUITE("exact_numbers") {

TEST_CASE("rationals serialize canonically") {
    CHECK(to_string(rat(-6, 8)) == "-3/4");
    CHECK(to_string(rat(7)) == "7/1");
}

TEST_CASE("parse_rational accepts canonical and reducible forms, rejects garbage") {
    CHECK(parse_rational("-3/4") == rat(-3, 4));
    CHECK(parse_rational("10/4") == rat(5, 2));
    CHECK(parse_rational("12") == rat(12));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("split_square_factor") {
    auto s = split_square_factor(BigInt(72));  // 2^3 3^2
    CHECK(s.root == 6);
    CHECK(s.radicand == 2);
    CHECK(s.certified);

    s = split_square_factor(BigInt(1));
    CHECK(s.root == 1);
    CHECK(s.radicand == 1);

    // Square of a prime above the trial bound is caught by the perfect-square test.
    const BigInt big_prime(1000003);
    s = split_square_factor(big_prime * big_prime * 5, 100);
    CHECK(s.root == big_prime);
    CHECK(s.radicand == 5);
    CHECK(s.certified);

    // Product of three large primes cannot be certified with a tiny bound.
    s = split_square_factor(BigInt(1000003) * 1000033 * 1000037, 100);
    CHECK_FALSE(s.certified);
    CHECK(s.root == 1);

    CHECK_THROWS(split_square_factor(BigInt(0)));
}

TEST_CASE("QuadraticNumber sign and arithmetic") {
    const QuadraticNumber sqrt2(rat(0), rat(1), BigInt(2));
    CHECK((sqrt2 * sqrt2) == QuadraticNumber(rat(2)));
    CHECK(QuadraticNumber(rat(-1), rat(1), BigInt(2)).sign() == 1);    // -1 + 1.414
    CHECK(QuadraticNumber(rat(3, 2), rat(-1), BigInt(2)).sign() == 1);  // 1.5 - 1.414
    CHECK(QuadraticNumber(rat(-3, 2), rat(1), BigInt(2)).sign() == -1);
    CHECK(QuadraticNumber(rat(0), rat(-2), BigInt(3)).sign() == -1);
    CHECK((sqrt2 - sqrt2).is_zero());
    const QuadraticNumber sqrt3(rat(0), rat(1), BigInt(3));
    CHECK_THROWS_AS(sqrt2 + sqrt3, std::domain_error);
    // d = 1 folds into the rational part.
    CHECK(QuadraticNumber(rat(1), rat(2), BigInt(1)) == QuadraticNumber(rat(3)));
}

TEST_CASE("solve_quadratic examples") {
    SUBCASE("difference of squares") {
        const auto r = solve_quadratic(rat(1), rat(0), rat(-4));
        REQUIRE(r.roots.size() == 2);
        CHECK(r.roots[0] == AlgebraicTime(rat(-2)));
        CHECK(r.roots[1] == AlgebraicTime(rat(2)));
        CHECK_FALSE(r.double_root);
        CHECK_FALSE(r.identically_zero);
    }
    SUBCASE("linear") {
        const auto r = solve_quadratic(rat(0), rat(1), rat(-1));
        REQUIRE(r.roots.size() == 1);
        CHECK(r.roots[0] == AlgebraicTime(rat(1)));
        CHECK_FALSE(r.double_root);
    }
    SUBCASE("irrational pair") {
        const auto r = solve_quadratic(rat(1), rat(-2), rat(-1));
        REQUIRE(r.roots.size() == 2);
        CHECK(r.roots[0] == quad(1, -1, 2, 1));
        CHECK(r.roots[1] == quad(1, 1, 2, 1));
        CHECK(r.roots[0].kind() == AlgebraicTime::Kind::Quadratic);
        CHECK(r.roots[0].d() == 2);
        CHECK(r.roots[0].r() == 1);
        CHECK(r.roots[0].p() == 1);
    }
    SUBCASE("identically zero") {
        const auto r = solve_quadratic(rat(0), rat(0), rat(0));
        CHECK(r.identically_zero);
        CHECK(r.roots.empty());
    }
    SUBCASE("perfect square") {
        const auto r = solve_quadratic(rat(1), rat(-2), rat(1));
        REQUIRE(r.roots.size() == 1);
        CHECK(r.double_root);
        CHECK(r.roots[0] == AlgebraicTime(rat(1)));
    }
    SUBCASE("no real roots and nonzero constant") {
        CHECK(solve_quadratic(rat(1), rat(0), rat(1)).roots.empty());
        const auto r = solve_quadratic(rat(0), rat(0), rat(5));
        CHECK(r.roots.empty());
        CHECK_FALSE(r.identically_zero);
    }
    SUBCASE("negative leading coefficient keeps ascending order") {
        const auto r = solve_quadratic(rat(-3), rat(6), rat(3));  // -3(t^2 - 2t - 1)
        REQUIRE(r.roots.size() == 2);
        CHECK(compare_times(r.roots[0], r.roots[1]) < 0);
        CHECK(r.roots[0] == quad(1, -1, 2, 1));
    }
    SUBCASE("uncertified radicands can be refused") {
        // Discriminant 4 * p1 p2 p3 with three primes above the bound.
        const BigInt n = BigInt(1000003) * 1000033 * 1000037;
        SolveOptions strict{100, true};
        CHECK_THROWS_AS(solve_quadratic(rat(1), rat(0), Rational(-n), strict), UncertifiedRadicand);
        SolveOptions lax{100, false};
        const auto r = solve_quadratic(rat(1), rat(0), Rational(-n), lax);
        REQUIRE(r.roots.size() == 2);
        CHECK_FALSE(r.roots[0].certified());
    }
}

TEST_CASE("compare_times examples") {
    // 1 + sqrt2 < 5/2 since sqrt2 < 3/2 iff 2 < 9/4.
    CHECK(compare_times(quad(1, 1, 2, 1), AlgebraicTime(rat(5, 2))) < 0);
    CHECK(compare_times(AlgebraicTime(rat(5, 2)), quad(1, 1, 2, 1)) > 0);
    CHECK(compare_times(quad(2, 2, 2, 2), quad(1, 1, 2, 1)) == 0);
    CHECK(quad(2, 2, 2, 2) == quad(1, 1, 2, 1));
    CHECK(compare_times(quad(1, 1, 2, 1), quad(1, 1, 3, 1)) < 0);
    // sqrt8 canonicalizes to 2 sqrt2.
    CHECK(quad(0, 1, 8, 1) == quad(0, 2, 2, 1));
    CHECK(quad(3, 1, 9, 1) == AlgebraicTime(rat(6)));
}

TEST_CASE("compare_times separates values closer than 64 bits") {
    // sqrt2 against its 100-bit truncation from below.
    BigInt scaled = BigInt(2);
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 200);
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 100);
    const AlgebraicTime below(Rational(s, den));
    const AlgebraicTime root2 = quad(0, 1, 2, 1);
    CHECK(compare_times(below, root2) < 0);
    CHECK(compare_times(root2, below) > 0);
}

TEST_CASE("same_time handles non-identical radicands") {
    // Hand-built forms that are equal as reals even without a shared radicand.
    const AlgebraicTime a = AlgebraicTime::quadratic(BigInt(1), BigInt(1), BigInt(1000003) * 7, BigInt(1), 10);
    const AlgebraicTime b = AlgebraicTime::quadratic(BigInt(1), BigInt(1), BigInt(1000003) * 7, BigInt(1));
    CHECK(same_time(a, b));
    CHECK(compare_times(a, b) == 0);
}

TEST_CASE("evaluate_at_time examples") {
    const std::vector<Rational> poly{rat(-4), rat(0), rat(1)};  // t^2 - 4
    const auto at = evaluate_at_time(poly, quad(1, 1, 2, 1));
    // (1 + sqrt2)^2 - 4 = -1 + 2 sqrt2
    CHECK(at.value == QuadraticNumber(rat(-1), rat(2), BigInt(2)));
    CHECK(at.sign == 1);
    CHECK(std::abs(at.value.to_double() - (std::pow(1 + std::sqrt(2.0), 2) - 4)) < 1e-12);

    CHECK(evaluate_at_time(poly, AlgebraicTime(rat(2))).sign == 0);
    const std::vector<Rational> constant{rat(5)};
    CHECK(evaluate_at_time(constant, quad(3, -7, 5, 2)).sign == 1);
}

TEST_CASE("property: roots re-substitute to zero") {
    testing::RationalSource src(7, 30, 6);
    for (int i = 0; i < 2000; ++i) {
        const Rational c2 = i % 5 == 0 ? Rational(0) : src.next();
        const Rational c1 = src.next(), c0 = src.next();
        const auto report = solve_quadratic(c2, c1, c0);
        const std::vector<Rational> poly{c0, c1, c2};
        for (const auto& t : report.roots) {
            CHECK(evaluate_at_time(poly, t).value.is_zero());
        }
        for (std::size_t j = 1; j < report.roots.size(); ++j) {
            CHECK(compare_times(report.roots[j - 1], report.roots[j]) < 0);
        }
    }
}

TEST_CASE("property: expanded (t-a)(t-b) returns exactly {a, b}") {
    testing::RationalSource src(11, 50, 9);
    for (int i = 0; i < 1000; ++i) {
        Rational a = src.next(), b = src.next();
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const auto report = solve_quadratic(Rational(1), Rational(-(a + b)), Rational(a * b));
        REQUIRE(report.roots.size() == 2);
        CHECK(report.roots[0] == AlgebraicTime(a));
        CHECK(report.roots[1] == AlgebraicTime(b));
    }
}

TEST_CASE("property: compare_times is a total order consistent with floats") {
    testing::RationalSource src(3, 12, 4);
    std::vector<AlgebraicTime> samples;
    for (int i = 0; i < 60; ++i) {
        if (i % 3 == 0) {
            samples.emplace_back(src.next());
        } else {
            samples.push_back(
                AlgebraicTime::quadratic(BigInt(src.integer(-9, 9)), BigInt(src.integer(1, 4) * (i % 2 ? 1 : -1)),
                                         BigInt(src.integer(2, 12)), BigInt(src.integer(1, 5))));
        }
    }
    for (const auto& x : samples) {
        CHECK(compare_times(x, x) == 0);
        // Canonicalization is idempotent.
        if (!x.is_rational()) CHECK(AlgebraicTime::quadratic(x.p(), x.q(), x.d(), x.r()) == x);
        for (const auto& y : samples) {
            const auto xy = compare_times(x, y);
            const auto yx = compare_times(y, x);
            CHECK((xy < 0) == (yx > 0));
            CHECK((xy == 0) == (yx == 0));
            if (std::abs(x.approx() - y.approx()) > 1e-9) CHECK((xy < 0) == (x.approx() < y.approx()));
            for (const auto& z : samples) {
                if (xy < 0 && compare_times(y, z) < 0) CHECK(compare_times(x, z) < 0);
            }
        }
    }
}

}  // TEST_SUITE
