// SPDX-License-Identifier: Apache-2.0
//
// Kinetic points moving with constant velocity, scenes, and the exact
// collinearity and collision predicates over them.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcol/exact_numbers.hpp"

namespace kcol {

struct Vec2 {
    Rational x;
    Rational y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// A point with position `pos` at t = 0 moving with constant velocity `vel`.
/// Its trajectory (pos + t*vel, t) is a nonhorizontal line in (x, y, t)-space.
struct KineticPoint {
    std::string id;
    Vec2 pos;
    Vec2 vel;

    bool same_motion(const KineticPoint& other) const { return pos == other.pos && vel == other.vel; }

    friend bool operator==(const KineticPoint&, const KineticPoint&) = default;
};

/// A planar point whose coordinates live in Q or a single field Q(sqrt d).
struct ExactPoint {
    QuadraticNumber x;
    QuadraticNumber y;

    friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

/// Orientation determinant of three exact points; zero iff collinear.
QuadraticNumber orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

class SceneError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An ordered set of kinetic points with distinct ids and distinct motions.
class Scene {
  public:
    Scene() = default;
    /// Throws SceneError naming the offending entries on duplicate ids or
    /// duplicate (pos, vel) pairs.
    explicit Scene(std::vector<KineticPoint> points, nlohmann::json meta = nlohmann::json::object());

    const std::vector<KineticPoint>& points() const { return points_; }
    const KineticPoint& operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    const nlohmann::json& meta() const { return meta_; }
    nlohmann::json& meta() { return meta_; }

    /// Index of the point with the given id. Throws SceneError when absent.
    std::size_t index_of(const std::string& id) const;

    friend bool operator==(const Scene&, const Scene&) = default;

  private:
    std::vector<KineticPoint> points_;
    nlohmann::json meta_ = nlohmann::json::object();
};

ExactPoint position_at(const KineticPoint& p, const AlgebraicTime& t);
ExactPoint position_at(const KineticPoint& p, const Rational& t);

/// det[[x_a(t), y_a(t), 1], [x_b(t), y_b(t), 1], [x_c(t), y_c(t), 1]] expanded
/// in t. The degree never exceeds two.
struct CollinearityPolynomial {
    Rational c2;
    Rational c1;
    Rational c0;

    bool is_zero() const { return c2 == 0 && c1 == 0 && c0 == 0; }
    std::array<Rational, 3> ascending() const { return {c0, c1, c2}; }
    Rational at(const Rational& t) const { return (c2 * t + c1) * t + c0; }

    friend bool operator==(const CollinearityPolynomial&, const CollinearityPolynomial&) = default;
};

CollinearityPolynomial collinearity_polynomial(const KineticPoint& a, const KineticPoint& b,
                                               const KineticPoint& c);

struct TripleClassification {
    enum class Kind { AlwaysCollinear, CollinearAt, NeverCollinear };

    Kind kind = Kind::NeverCollinear;
    std::vector<AlgebraicTime> times;  // strictly ascending, CollinearAt only
    bool tangential = false;           // the single time is a double root
    bool coincident_all = false;       // all three meet at one of the times
};

TripleClassification classify_triple(const KineticPoint& a, const KineticPoint& b, const KineticPoint& c,
                                     const SolveOptions& options = {});

/// Time at which a and b occupy the same position, if any. Requires that a and
/// b do not share both position and velocity.
std::optional<Rational> collision_time(const KineticPoint& a, const KineticPoint& b);

const char* to_string(TripleClassification::Kind kind);

}  // namespace kcol
