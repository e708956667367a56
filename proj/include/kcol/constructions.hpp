// SPDX-License-Identifier: Apache-2.0
//
// Scene generators for the extremal constructions: the 2 C(n,3) tight family
// (unit speed and elliptic speeds), the collinearity-free hyperboloid ruling
// and its stretched variant, the two lower-bound regimes, and random scenes.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcol/exact_numbers.hpp"
#include "kcol/kinematics.hpp"

namespace kcol {

enum class Construction { Tight, TightEllipse, NoCollinearity, NoCollinearityDistinct, LowerBound, Random };

const char* to_string(Construction c);
/// Throws std::invalid_argument for unknown names.
Construction parse_construction(const std::string& name);

struct ConstructionParams {
    Construction name = Construction::Tight;
    int n = 3;
    int k = 3;                 // lower_bound only
    int precision_bits = 40;   // tight family only
    std::uint64_t seed = 0;    // random only
    int coord_bound = 100;     // random only
};

/// Dispatches on params.name. Throws std::invalid_argument on invalid params.
Scene generate(const ConstructionParams& params);

/// Direction 3pi/2 + pi/(4i), unit speed, starting on the circle of radius 1
/// about (-1, 1) at the intersection nearer the origin, heading through the
/// origin. Coordinates rounded to multiples of 2^-precision_bits. n >= 3.
Scene gen_tight(int n, int precision_bits = 40);

/// gen_tight with the speed of point i set to 1 / (1 - cos(theta_i) / 2).
Scene gen_tight_ellipse(int n, int precision_bits = 40);

/// Exact unit-speed points tangent to the unit circle, via the rational
/// parametrization s_i = 1 + 1/i; every trajectory lies on x^2 + y^2 = 1 + t^2.
Scene gen_no_collinearity(int n);

/// gen_no_collinearity stretched by (x, y) -> (2x, y): pairwise distinct
/// speeds and directions, trajectories on x^2/4 + y^2 = 1 + t^2.
Scene gen_no_collinearity_distinct(int n);

/// n >= k^2: families A_1..A_{floor(k/2)} on x = 0 and B_1..B_{ceil(k/2)} on
/// x = 1, m = floor(n/k) points each, point j of family i at height j moving
/// up with speed i - 1. k <= n < k^2: floor(n/k) clusters that each collide
/// at t = 0 at sites on a parabola. Requires n >= k >= 3.
Scene gen_lower_bound(int n, int k);

/// Deterministic in seed. Numerators in [-coord_bound, coord_bound],
/// denominators in 1..4.
Scene gen_random(int n, std::uint64_t seed, int coord_bound = 100);

struct CertificateReport {
    bool pass = true;
    std::vector<std::array<std::string, 3>> failing_triples;
};

/// For every triple taken in angle order, checks that the collinearity
/// determinant is nonzero at t = 0, has the opposite sign at t = T and t = -T,
/// and has a nonzero leading coefficient, which forces two distinct real
/// collinearity times. Throws std::invalid_argument for scenes that were not
/// produced by gen_tight or gen_tight_ellipse.
CertificateReport verify_tight_certificate(const Scene& scene, const Rational& horizon = Rational(1 << 20));

}  // namespace kcol
