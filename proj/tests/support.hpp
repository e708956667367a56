// SPDX-License-Identifier: Apache-2.0
//
// Test-only generators and independent reference computations.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "kcol/exact_numbers.hpp"
#include "kcol/kinematics.hpp"

namespace kcol::testing {

class RationalSource {
  public:
    explicit RationalSource(std::uint64_t seed, long bound = 20, long max_den = 5)
        : rng_(seed), num_(-bound, bound), den_(1, max_den) {}

    Rational next() {
        Rational r{BigInt(num_(rng_)), BigInt(den_(rng_))};
        r.canonicalize();
        return r;
    }
    Vec2 vec() {
        Rational x = next();
        return {x, next()};
    }
    KineticPoint point(const std::string& id) {
        Vec2 p = vec();
        return {id, p, vec()};
    }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> num_;
    std::uniform_int_distribution<long> den_;
};

// det[[ax, ay, 1], [bx, by, 1], [cx, cy, 1]] by cofactor expansion at a
// rational time, written out independently of the library.
inline Rational reference_det(const KineticPoint& a, const KineticPoint& b, const KineticPoint& c, const Rational& t) {
    const Rational ax = a.pos.x + t * a.vel.x, ay = a.pos.y + t * a.vel.y;
    const Rational bx = b.pos.x + t * b.vel.x, by = b.pos.y + t * b.vel.y;
    const Rational cx = c.pos.x + t * c.vel.x, cy = c.pos.y + t * c.vel.y;
    return ax * (by - cy) - bx * (ay - cy) + cx * (ay - by);
}

inline Rational frac(long n, long d) {
    Rational r{BigInt(n), BigInt(d)};
    r.canonicalize();
    return r;
}

inline KineticPoint kp(const std::string& id, long px, long py, long vx, long vy) {
    return {id, {Rational(px), Rational(py)}, {Rational(vx), Rational(vy)}};
}

// Small random scene with deliberate collisions and always-collinear points
// mixed in. Duplicate motions are redrawn.
inline Scene degenerate_scene(RationalSource& src, std::size_t n) {
    std::vector<KineticPoint> pts;
    while (pts.size() < n) {
        KineticPoint p = src.point("p" + std::to_string(pts.size()));
        const long mode = pts.size() >= 2 ? src.integer(0, 3) : 0;
        if (mode == 1) {
            // Meets an earlier point at a small integer time.
            const auto& a = pts[src.integer(0, pts.size() - 1)];
            const Rational tc(src.integer(-2, 2));
            p.pos = {a.pos.x + tc * (a.vel.x - p.vel.x), a.pos.y + tc * (a.vel.y - p.vel.y)};
        } else if (mode == 2) {
            // Affine combination of two earlier points: always collinear with them.
            const auto& a = pts[0];
            const auto& b = pts[1];
            const Rational lambda = src.next();
            p.pos = {a.pos.x + lambda * (b.pos.x - a.pos.x), a.pos.y + lambda * (b.pos.y - a.pos.y)};
            p.vel = {a.vel.x + lambda * (b.vel.x - a.vel.x), a.vel.y + lambda * (b.vel.y - a.vel.y)};
        }
        bool duplicate = false;
        for (const auto& q : pts) duplicate = duplicate || q.same_motion(p);
        if (!duplicate) pts.push_back(std::move(p));
    }
    return Scene(std::move(pts));
}

}  // namespace kcol::testing
