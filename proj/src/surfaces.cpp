// SPDX-License-Identifier: Apache-2.0
#include "kcol/surfaces.hpp"

#include <stdexcept>

namespace kcol {

Rational SurfacePolynomial::evaluate(const Rational& x, const Rational& y, const Rational& t) const {
    return x * (alpha0 + alpha1 * t) + y * (beta0 + beta1 * t) + gamma0 + (gamma1 + gamma2 * t) * t;
}

QuadraticNumber SurfacePolynomial::evaluate(const QuadraticNumber& x, const QuadraticNumber& y,
                                            const QuadraticNumber& t) const {
    const QuadraticNumber a0(alpha0), a1(alpha1), b0(beta0), b1(beta1);
    const QuadraticNumber g0(gamma0), g1(gamma1), g2(gamma2);
    return x * (a0 + a1 * t) + y * (b0 + b1 * t) + g0 + (g1 + g2 * t) * t;
}

SurfacePolynomial surface_of_pair(const KineticPoint& a, const KineticPoint& b) {
    if (a.same_motion(b)) {
        throw std::invalid_argument("surface_of_pair: '" + a.id + "' and '" + b.id + "' have the same trajectory");
    }
    // Row expansion along (x, y, 1):
    //   x (y_a - y_b) - y (x_a - x_b) + (x_a y_b - x_b y_a)
    SurfacePolynomial s;
    s.alpha0 = a.pos.y - b.pos.y;
    s.alpha1 = a.vel.y - b.vel.y;
    s.beta0 = b.pos.x - a.pos.x;
    s.beta1 = b.vel.x - a.vel.x;
    s.gamma0 = a.pos.x * b.pos.y - b.pos.x * a.pos.y;
    s.gamma1 = a.pos.x * b.vel.y + a.vel.x * b.pos.y - b.pos.x * a.vel.y - b.vel.x * a.pos.y;
    s.gamma2 = a.vel.x * b.vel.y - b.vel.x * a.vel.y;
    return s;
}

SurfaceClass classify_surface(const KineticPoint& a, const KineticPoint& b) {
    using Kind = SurfaceClass::Kind;
    const SurfacePolynomial s = surface_of_pair(a, b);
    SurfaceClass out;

    if (a.vel == b.vel) {
        out.kind = Kind::NonHorizontalPlane;
        out.plane = Plane{s.alpha0, s.beta0, s.gamma1, s.gamma0};
        return out;
    }
    if (auto tc = collision_time(a, b)) {
        // F = (t - t_c) (alpha1 x + beta1 y + gamma2 t + l0)
        const Rational& t = *tc;
        Plane cofactor{s.alpha1, s.beta1, s.gamma2, s.gamma1 + t * s.gamma2};
        if (s.alpha0 + t * s.alpha1 != 0 || s.beta0 + t * s.beta1 != 0 || s.gamma0 + t * cofactor.c0 != 0) {
            throw std::logic_error("classify_surface: colliding pair does not factor");
        }
        out.kind = Kind::HorizontalPlusNonHorizontalPlane;
        out.plane = cofactor;
        out.collision_time = t;
        return out;
    }
    out.kind = Kind::HyperbolicParaboloid;
    return out;
}

bool surface_contains(const SurfacePolynomial& s, const QuadraticNumber& x, const QuadraticNumber& y,
                      const AlgebraicTime& t) {
    return s.evaluate(x, y, t.as_number()).is_zero();
}

bool surface_contains(const SurfacePolynomial& s, const ExactPoint& p, const AlgebraicTime& t) {
    return surface_contains(s, p.x, p.y, t);
}

const char* to_string(SurfaceClass::Kind kind) {
    switch (kind) {
        case SurfaceClass::Kind::NonHorizontalPlane: return "nonhorizontal_plane";
        case SurfaceClass::Kind::HorizontalPlusNonHorizontalPlane: return "horizontal_plus_nonhorizontal_plane";
        case SurfaceClass::Kind::HyperbolicParaboloid: return "hyperbolic_paraboloid";
    }
    return "unknown";
}

}  // namespace kcol
