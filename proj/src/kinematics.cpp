// SPDX-License-Identifier: Apache-2.0
#include "kcol/kinematics.hpp"

#include <map>

namespace kcol {

QuadraticNumber orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Scene::Scene(std::vector<KineticPoint> points, nlohmann::json meta)
    : points_(std::move(points)), meta_(std::move(meta)) {
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        auto [it, inserted] = seen.emplace(points_[i].id, i);
        if (!inserted) {
            throw SceneError("duplicate point id '" + points_[i].id + "' at entries " + std::to_string(it->second) +
                             " and " + std::to_string(i));
        }
    }
    // Quadratic scan; scenes are desk-sized.
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (std::size_t j = i + 1; j < points_.size(); ++j) {
            if (points_[i].same_motion(points_[j])) {
                throw SceneError("points '" + points_[i].id + "' and '" + points_[j].id +
                                 "' have identical position and velocity");
            }
        }
    }
    if (meta_.is_null()) meta_ = nlohmann::json::object();
}

std::size_t Scene::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].id == id) return i;
    }
    throw SceneError("no point with id '" + id + "'");
}

ExactPoint position_at(const KineticPoint& p, const AlgebraicTime& t) {
    const QuadraticNumber tt = t.as_number();
    return {QuadraticNumber(p.pos.x) + tt * QuadraticNumber(p.vel.x),
            QuadraticNumber(p.pos.y) + tt * QuadraticNumber(p.vel.y)};
}

ExactPoint position_at(const KineticPoint& p, const Rational& t) {
    return {QuadraticNumber(Rational(p.pos.x + t * p.vel.x)), QuadraticNumber(Rational(p.pos.y + t * p.vel.y))};
}

CollinearityPolynomial collinearity_polynomial(const KineticPoint& a, const KineticPoint& b,
                                               const KineticPoint& c) {
    // With u(t) = b - a and w(t) = c - a, det = cross(u(t), w(t)).
    const Vec2 du = b.pos - a.pos;
    const Vec2 dv = b.vel - a.vel;
    const Vec2 eu = c.pos - a.pos;
    const Vec2 ev = c.vel - a.vel;
    return {cross(dv, ev), cross(du, ev) + cross(dv, eu), cross(du, eu)};
}

TripleClassification classify_triple(const KineticPoint& a, const KineticPoint& b, const KineticPoint& c,
                                     const SolveOptions& options) {
    using Kind = TripleClassification::Kind;
    const CollinearityPolynomial poly = collinearity_polynomial(a, b, c);
    RootReport roots = solve_quadratic(poly.c2, poly.c1, poly.c0, options);

    TripleClassification out;
    if (roots.identically_zero) {
        out.kind = Kind::AlwaysCollinear;
        return out;
    }
    if (roots.roots.empty()) {
        out.kind = Kind::NeverCollinear;
        return out;
    }
    out.kind = Kind::CollinearAt;
    out.tangential = roots.double_root;
    out.times = std::move(roots.roots);

    // A triple collision can only happen at a rational time.
    if (auto tab = collision_time(a, b)) {
        const ExactPoint pc = position_at(c, *tab);
        if (pc == position_at(a, *tab)) out.coincident_all = true;
    }
    return out;
}

std::optional<Rational> collision_time(const KineticPoint& a, const KineticPoint& b) {
    // (vel_a - vel_b) t = pos_b - pos_a
    const Vec2 dv = a.vel - b.vel;
    const Vec2 dp = b.pos - a.pos;
    if (dv.x == 0 && dv.y == 0) return std::nullopt;
    Rational t = dv.x != 0 ? Rational(dp.x / dv.x) : Rational(dp.y / dv.y);
    if (dv.x * t != dp.x || dv.y * t != dp.y) return std::nullopt;
    return t;
}

const char* to_string(TripleClassification::Kind kind) {
    switch (kind) {
        case TripleClassification::Kind::AlwaysCollinear: return "always_collinear";
        case TripleClassification::Kind::CollinearAt: return "collinear_at";
        case TripleClassification::Kind::NeverCollinear: return "never_collinear";
    }
    return "unknown";
}

}  // namespace kcol
