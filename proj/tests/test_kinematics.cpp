// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "kcol/kinematics.hpp"
#include "support.hpp"

using namespace kcol;
using kcol::testing::frac;
using kcol::testing::kp;
using kcol::testing::reference_det;

namespace {

QuadraticNumber q(long v) { return QuadraticNumber(Rational(v)); }

}  // namespace

TEST_SUITE("kinematics") {

TEST_CASE("position_at examples") {
    CHECK(position_at(kp("a", 0, 0, 1, 0), Rational(2)) == ExactPoint{q(2), q(0)});
    CHECK(position_at(kp("a", 1, 1, 0, 0), Rational(-37)) == ExactPoint{q(1), q(1)});
    const AlgebraicTime root2 = AlgebraicTime::quadratic(BigInt(0), BigInt(1), BigInt(2), BigInt(1));
    const QuadraticNumber s(Rational(0), Rational(1), BigInt(2));
    CHECK(position_at(kp("a", 0, 0, 1, 1), root2) == ExactPoint{s, s});
}

TEST_CASE("collinearity_polynomial examples") {
    const auto a = kp("a", 0, 0, 0, 0);
    CHECK(collinearity_polynomial(a, kp("b", 0, 1, 1, 0), kp("c", 4, 0, 0, 1)) ==
          CollinearityPolynomial{Rational(1), Rational(0), Rational(-4)});
    CHECK(collinearity_polynomial(a, kp("b", 1, 0, 0, 0), kp("c", 2, 0, 0, 0)).is_zero());
    CHECK(collinearity_polynomial(a, kp("b", 1, 0, 0, 0), kp("c", 2, 1, 0, -1)) ==
          CollinearityPolynomial{Rational(0), Rational(-1), Rational(1)});
}

TEST_CASE("classify_triple examples") {
    const auto a = kp("a", 0, 0, 0, 0);
    auto c = classify_triple(a, kp("b", 0, 1, 1, 0), kp("c", 4, 0, 0, 1));
    CHECK(c.kind == TripleClassification::Kind::CollinearAt);
    REQUIRE(c.times.size() == 2);
    CHECK(c.times[0] == AlgebraicTime(Rational(-2)));
    CHECK(c.times[1] == AlgebraicTime(Rational(2)));
    CHECK_FALSE(c.tangential);

    c = classify_triple(a, kp("b", 1, 0, 0, 0), kp("c", 0, 1, 0, 0));
    CHECK(c.kind == TripleClassification::Kind::NeverCollinear);
    CHECK(c.times.empty());

    c = classify_triple(kp("a", 0, 0, 1, 1), kp("b", 1, 1, 1, 1), kp("c", 2, 2, 1, 1));
    CHECK(c.kind == TripleClassification::Kind::AlwaysCollinear);
}

TEST_CASE("classify_triple simple crossings and triple collisions") {
    const auto a = kp("a", 0, 0, 0, 0), b = kp("b", 1, 0, 0, 0);
    const KineticPoint c{"c", {Rational(0), Rational(1)}, {Rational(1), Rational(-2)}};
    // c(t) = (t, 1 - 2t); det = 1 - 2t, a simple crossing at 1/2.
    auto cls = classify_triple(a, b, c);
    REQUIRE(cls.times.size() == 1);
    CHECK(cls.times[0] == AlgebraicTime(frac(1, 2)));
    CHECK_FALSE(cls.tangential);

    // Three points meeting at the origin at t = 1.
    cls = classify_triple(kp("a", -1, 0, 1, 0), kp("b", 0, -1, 0, 1), kp("c", 1, 1, -1, -1));
    CHECK(cls.coincident_all);
    CHECK(cls.kind == TripleClassification::Kind::CollinearAt);
}

TEST_CASE("classify_triple detects double roots") {
    // Search a small integer grid for perfect-square determinants.
    testing::RationalSource src(99, 3, 1);
    bool seen = false;
    for (int i = 0; i < 20000 && !seen; ++i) {
        const auto a = src.point("a"), b = src.point("b"), c = src.point("c");
        const auto poly = collinearity_polynomial(a, b, c);
        if (poly.c2 == 0 || poly.c1 * poly.c1 != 4 * poly.c2 * poly.c0) continue;
        const auto cls = classify_triple(a, b, c);
        REQUIRE(cls.times.size() == 1);
        CHECK(cls.tangential);
        CHECK(poly.at(cls.times[0].value()) == 0);
        seen = true;
    }
    CHECK(seen);
}

TEST_CASE("collision_time examples") {
    CHECK(collision_time(kp("a", 0, 0, 1, 0), kp("b", 2, 0, 0, 0)) == Rational(2));
    CHECK_FALSE(collision_time(kp("a", 0, 0, 1, 1), kp("b", 1, 0, 1, 1)).has_value());
    CHECK_FALSE(collision_time(kp("a", 0, 0, 1, 0), kp("b", 0, 1, 1, 0)).has_value());
    // Crossing paths at different times.
    CHECK_FALSE(collision_time(kp("a", 0, 0, 1, 0), kp("b", 1, -2, 0, 1)).has_value());
}

TEST_CASE("Scene rejects duplicate ids and motions") {
    CHECK_THROWS_AS(Scene({kp("a", 0, 0, 0, 0), kp("a", 1, 0, 0, 0)}), SceneError);
    CHECK_THROWS_AS(Scene({kp("a", 0, 0, 1, 0), kp("b", 0, 0, 1, 0)}), SceneError);
    const Scene s({kp("a", 0, 0, 1, 0), kp("b", 0, 0, 1, 1)});
    CHECK(s.index_of("b") == 1);
    CHECK_THROWS_AS(s.index_of("zz"), SceneError);
}

TEST_CASE("property: polynomial matches the determinant at five times") {
    testing::RationalSource src(2024, 25, 7);
    const Rational samples[] = {Rational(-3), frac(-1, 2), Rational(0), frac(5, 3), Rational(11)};
    for (int i = 0; i < 1000; ++i) {
        const auto a = src.point("a"), b = src.point("b"), c = src.point("c");
        const auto poly = collinearity_polynomial(a, b, c);
        for (const auto& t : samples) CHECK(poly.at(t) == reference_det(a, b, c, t));
    }
}

TEST_CASE("property: swapping two points negates, rotating preserves") {
    testing::RationalSource src(5, 10, 3);
    for (int i = 0; i < 500; ++i) {
        const auto a = src.point("a"), b = src.point("b"), c = src.point("c");
        const auto p = collinearity_polynomial(a, b, c);
        const auto swapped = collinearity_polynomial(b, a, c);
        CHECK(swapped.c2 == -p.c2);
        CHECK(swapped.c1 == -p.c1);
        CHECK(swapped.c0 == -p.c0);
        CHECK(collinearity_polynomial(b, c, a) == p);
    }
}

TEST_CASE("property: a collision is a root for every third point") {
    testing::RationalSource src(17, 8, 3);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        const auto a = src.point("a");
        const Rational tc = src.next();
        // b meets a at tc.
        const Vec2 vb = src.vec();
        const Vec2 pb{a.pos.x + tc * (a.vel.x - vb.x), a.pos.y + tc * (a.vel.y - vb.y)};
        const KineticPoint b{"b", pb, vb};
        if (a.same_motion(b)) continue;
        REQUIRE(collision_time(a, b) == tc);
        CHECK(position_at(a, tc) == position_at(b, tc));
        const auto c = src.point("c");
        if (c.same_motion(a) || c.same_motion(b)) continue;
        const auto cls = classify_triple(a, b, c);
        if (cls.kind == TripleClassification::Kind::AlwaysCollinear) continue;
        REQUIRE(cls.kind == TripleClassification::Kind::CollinearAt);
        bool found = false;
        for (const auto& t : cls.times) found = found || t == AlgebraicTime(tc);
        CHECK(found);
        ++checked;
    }
    CHECK(checked > 300);
}

}  // TEST_SUITE
