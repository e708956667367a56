// SPDX-License-Identifier: Apache-2.0
//
// Subset-enumeration oracle for the event list. Everything here is computed
// from scratch with the exact number layer only: positions, orientation
// determinants, the triple polynomial (by interpolation) and the filters.
#include <algorithm>
#include <bit>
#include <cstdint>

#include "kcol/events.hpp"

namespace kcol {

namespace {

struct Coords {
    QuadraticNumber x;
    QuadraticNumber y;
};

Coords locate(const KineticPoint& p, const QuadraticNumber& t) {
    return {QuadraticNumber(p.pos.x) + t * QuadraticNumber(p.vel.x), QuadraticNumber(p.pos.y) + t * QuadraticNumber(p.vel.y)};
}

bool coincide(const Coords& a, const Coords& b) { return (a.x - b.x).is_zero() && (a.y - b.y).is_zero(); }

bool collinear(const Coords& a, const Coords& b, const Coords& c) {
    return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).is_zero();
}

Rational static_det(const KineticPoint& a, const KineticPoint& b, const KineticPoint& c, const Rational& t) {
    const Rational ax = a.pos.x + t * a.vel.x, ay = a.pos.y + t * a.vel.y;
    const Rational bx = b.pos.x + t * b.vel.x, by = b.pos.y + t * b.vel.y;
    const Rational cx = c.pos.x + t * c.vel.x, cy = c.pos.y + t * c.vel.y;
    // Cofactor expansion of [[ax, ay, 1], [bx, by, 1], [cx, cy, 1]].
    return ax * (by - cy) - ay * (bx - cx) + (bx * cy - cx * by);
}

// A degree-2 polynomial is fixed by its values at -1, 0, 1.
std::array<Rational, 3> interpolate(const KineticPoint& a, const KineticPoint& b, const KineticPoint& c) {
    const Rational dm = static_det(a, b, c, Rational(-1));
    const Rational d0 = static_det(a, b, c, Rational(0));
    const Rational d1 = static_det(a, b, c, Rational(1));
    Rational c2 = (d1 + dm) / 2 - d0;
    Rational c1 = (d1 - dm) / 2;
    return {c2, c1, d0};
}

// Zero at three distinct times means zero everywhere.
bool always_collinear(const KineticPoint& a, const KineticPoint& b, const KineticPoint& c) {
    return static_det(a, b, c, Rational(0)) == 0 && static_det(a, b, c, Rational(1)) == 0 &&
           static_det(a, b, c, Rational(2)) == 0;
}

}  // namespace

std::vector<CollinearityEvent> brute_force_events(const Scene& scene, const BruteForceOptions& options) {
    const std::size_t n = scene.size();
    if (n > options.cap) {
        throw OracleCapExceeded("brute_force_events: " + std::to_string(n) + " points exceed the oracle cap of " +
                                std::to_string(options.cap));
    }
    if (n > 24) throw OracleCapExceeded("brute_force_events: subset enumeration limited to 24 points");
    const auto& pts = scene.points();

    // Candidate times.
    std::vector<AlgebraicTime> times;
    if (options.time_candidates) {
        times = *options.time_candidates;
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    const auto c = interpolate(pts[i], pts[j], pts[k]);
                    RootReport roots = solve_quadratic(c[0], c[1], c[2]);
                    for (auto& r : roots.roots) times.push_back(std::move(r));
                }
            }
        }
    }
    std::vector<AlgebraicTime> distinct;
    for (const auto& t : times) {
        if (std::none_of(distinct.begin(), distinct.end(), [&](const AlgebraicTime& s) { return same_time(s, t); })) {
            distinct.push_back(t);
        }
    }

    std::vector<CollinearityEvent> events;
    const std::uint32_t full = std::uint32_t{1} << n;
    for (const auto& t : distinct) {
        const QuadraticNumber tt = t.as_number();
        std::vector<Coords> at;
        for (const auto& p : pts) at.push_back(locate(p, tt));

        std::vector<char> same(n * n), zero(n * n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                same[i * n + j] = coincide(at[i], at[j]) ? 1 : 0;
                for (std::size_t w = 0; w < n; ++w) zero[(i * n + j) * n + w] = collinear(at[i], at[j], at[w]) ? 1 : 0;
            }
        }

        // valid[mask]: at least three points, on one line, not all coincident.
        std::vector<char> valid(full, 0);
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            if (std::popcount(mask) < 3) continue;
            const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
            std::size_t j = n;
            for (std::size_t b = i + 1; b < n; ++b) {
                if ((mask >> b & 1U) != 0 && same[i * n + b] == 0) {
                    j = b;
                    break;
                }
            }
            if (j == n) continue;
            bool ok = true;
            for (std::size_t w = 0; w < n && ok; ++w) {
                if ((mask >> w & 1U) != 0) ok = zero[(i * n + j) * n + w] != 0;
            }
            valid[mask] = ok ? 1 : 0;
        }

        for (std::uint32_t mask = 0; mask < full; ++mask) {
            if (valid[mask] == 0) continue;
            bool maximal = true;
            for (std::size_t w = 0; w < n && maximal; ++w) {
                if ((mask >> w & 1U) == 0 && valid[mask | (std::uint32_t{1} << w)] != 0) maximal = false;
            }
            if (!maximal) continue;

            std::vector<std::size_t> members;
            for (std::size_t w = 0; w < n; ++w) {
                if ((mask >> w & 1U) != 0) members.push_back(w);
            }

            bool all_always = true;
            bool tangential = false;
            for (std::size_t x = 0; x < members.size(); ++x) {
                for (std::size_t y = x + 1; y < members.size(); ++y) {
                    for (std::size_t z = y + 1; z < members.size(); ++z) {
                        const auto& a = pts[members[x]];
                        const auto& b = pts[members[y]];
                        const auto& c = pts[members[z]];
                        if (always_collinear(a, b, c)) continue;
                        all_always = false;
                        if (!tangential) {
                            const auto coeffs = interpolate(a, b, c);
                            RootReport roots = solve_quadratic(coeffs[0], coeffs[1], coeffs[2]);
                            tangential = roots.double_root && same_time(roots.roots.front(), t);
                        }
                    }
                }
            }
            if (all_always) continue;

            CollinearityEvent ev;
            ev.time = t;
            ev.members = members;
            ev.tangential = tangential;
            bool anchored = false;
            for (std::size_t x = 0; x < members.size(); ++x) {
                for (std::size_t y = x + 1; y < members.size(); ++y) {
                    if (same[members[x] * n + members[y]] != 0) {
                        ev.contains_subcollision = true;
                    } else if (!anchored) {
                        ev.anchors = {members[x], members[y]};
                        anchored = true;
                    }
                }
            }
            events.push_back(std::move(ev));
        }
    }

    std::sort(events.begin(), events.end(), [](const CollinearityEvent& a, const CollinearityEvent& b) {
        const auto c = compare_times(a.time, b.time);
        return c != 0 ? c < 0 : a.members < b.members;
    });
    return events;
}

}  // namespace kcol
