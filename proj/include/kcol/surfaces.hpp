// SPDX-License-Identifier: Apache-2.0
//
// The surface of point-time pairs (P, t) such that P is collinear with a(t)
// and b(t), stored as the quadric
//   F(x, y, t) = x (alpha0 + alpha1 t) + y (beta0 + beta1 t) + gamma0 + gamma1 t + gamma2 t^2
// obtained from det[[x, y, 1], [x_a(t), y_a(t), 1], [x_b(t), y_b(t), 1]].
#pragma once

#include <optional>

#include "kcol/exact_numbers.hpp"
#include "kcol/kinematics.hpp"

namespace kcol {

struct SurfacePolynomial {
    Rational alpha0, alpha1;
    Rational beta0, beta1;
    Rational gamma0, gamma1, gamma2;

    Rational evaluate(const Rational& x, const Rational& y, const Rational& t) const;
    QuadraticNumber evaluate(const QuadraticNumber& x, const QuadraticNumber& y, const QuadraticNumber& t) const;

    /// No x*t, y*t or t^2 term.
    bool is_linear() const { return alpha1 == 0 && beta1 == 0 && gamma2 == 0; }

    friend bool operator==(const SurfacePolynomial&, const SurfacePolynomial&) = default;
};

/// cx*x + cy*y + ct*t + c0 = 0
struct Plane {
    Rational cx, cy, ct, c0;

    bool is_horizontal() const { return cx == 0 && cy == 0; }
    friend bool operator==(const Plane&, const Plane&) = default;
};

struct SurfaceClass {
    enum class Kind { NonHorizontalPlane, HorizontalPlusNonHorizontalPlane, HyperbolicParaboloid };

    Kind kind = Kind::HyperbolicParaboloid;
    /// The nonhorizontal plane for the two planar cases. In the colliding case
    /// this is the linear cofactor F / (t - t_c).
    std::optional<Plane> plane;
    /// Height of the horizontal sheet t = t_c in the colliding case.
    std::optional<Rational> collision_time;
};

/// Throws std::invalid_argument when a and b share both position and velocity.
SurfacePolynomial surface_of_pair(const KineticPoint& a, const KineticPoint& b);

/// Same precondition as surface_of_pair.
SurfaceClass classify_surface(const KineticPoint& a, const KineticPoint& b);

bool surface_contains(const SurfacePolynomial& s, const QuadraticNumber& x, const QuadraticNumber& y,
                      const AlgebraicTime& t);
bool surface_contains(const SurfacePolynomial& s, const ExactPoint& p, const AlgebraicTime& t);

const char* to_string(SurfaceClass::Kind kind);

}  // namespace kcol
