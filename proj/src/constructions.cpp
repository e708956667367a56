// SPDX-License-Identifier: Apache-2.0
#include "kcol/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace kcol {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

Rational dyadic(long double value, int bits) {
    const long long scaled = std::llround(std::ldexp(value, bits));
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    Rational out(BigInt(static_cast<long>(scaled)), den);
    out.canonicalize();
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

// Shared by both tight variants; speed(theta) selects the variant.
template <typename SpeedFn>
Scene tight_family(int n, int precision_bits, const char* name, SpeedFn speed) {
    require(n >= 3, std::string(name) + " requires n >= 3");
    require(precision_bits >= 8 && precision_bits <= 60, std::string(name) + " requires 8 <= precision_bits <= 60");

    std::vector<KineticPoint> points;
    nlohmann::json order = nlohmann::json::array();
    for (int i = 1; i <= n; ++i) {
        const long double theta = 3 * kPi / 2 + kPi / (4.0L * i);
        const long double c = std::cos(theta);
        const long double s = std::sin(theta);
        // Smaller root of s^2 - 2 s (cos - sin) + 1 = 0: distance to the origin.
        const long double h = c - s;
        const long double dist = h - std::sqrt(h * h - 1);
        const long double v = speed(theta);
        points.push_back({"p" + std::to_string(i),
                          {dyadic(-dist * c, precision_bits), dyadic(-dist * s, precision_bits)},
                          {dyadic(v * c, precision_bits), dyadic(v * s, precision_bits)}});
    }
    // theta_i decreases with i.
    for (int i = n; i >= 1; --i) order.push_back("p" + std::to_string(i));
    nlohmann::json meta{{"construction", name}, {"n", n}, {"precision_bits", precision_bits}, {"angle_order", order}};
    return Scene(std::move(points), std::move(meta));
}

}  // namespace

const char* to_string(Construction c) {
    switch (c) {
        case Construction::Tight: return "tight";
        case Construction::TightEllipse: return "tight_ellipse";
        case Construction::NoCollinearity: return "no_collinearity";
        case Construction::NoCollinearityDistinct: return "no_collinearity_distinct";
        case Construction::LowerBound: return "lower_bound";
        case Construction::Random: return "random";
    }
    return "unknown";
}

Construction parse_construction(const std::string& name) {
    for (auto c : {Construction::Tight, Construction::TightEllipse, Construction::NoCollinearity,
                   Construction::NoCollinearityDistinct, Construction::LowerBound, Construction::Random}) {
        if (name == to_string(c)) return c;
    }
    throw std::invalid_argument("unknown construction '" + name + "'");
}

Scene generate(const ConstructionParams& params) {
    switch (params.name) {
        case Construction::Tight: return gen_tight(params.n, params.precision_bits);
        case Construction::TightEllipse: return gen_tight_ellipse(params.n, params.precision_bits);
        case Construction::NoCollinearity: return gen_no_collinearity(params.n);
        case Construction::NoCollinearityDistinct: return gen_no_collinearity_distinct(params.n);
        case Construction::LowerBound: return gen_lower_bound(params.n, params.k);
        case Construction::Random: return gen_random(params.n, params.seed, params.coord_bound);
    }
    throw std::invalid_argument("unknown construction");
}

Scene gen_tight(int n, int precision_bits) {
    return tight_family(n, precision_bits, "tight", [](long double) { return 1.0L; });
}

Scene gen_tight_ellipse(int n, int precision_bits) {
    return tight_family(n, precision_bits, "tight_ellipse",
                        [](long double theta) { return 1.0L / (1.0L - std::cos(theta) / 2); });
}

Scene gen_no_collinearity(int n) {
    require(n >= 1, "no_collinearity requires n >= 1");
    std::vector<KineticPoint> points;
    for (int i = 1; i <= n; ++i) {
        // (cos phi, sin phi) = ((1 - s^2), 2s) / (1 + s^2) with s = tan(phi / 2).
        Rational s(BigInt(i + 1), BigInt(i));
        s.canonicalize();
        const Rational den = 1 + s * s;
        const Rational cos_phi = (1 - s * s) / den;
        const Rational sin_phi = 2 * s / den;
        points.push_back({"p" + std::to_string(i), {cos_phi, sin_phi}, {sin_phi, Rational(-cos_phi)}});
    }
    nlohmann::json meta{{"construction", "no_collinearity"}, {"n", n}, {"tangent_half_angles", "s_i = 1 + 1/i"}};
    return Scene(std::move(points), std::move(meta));
}

Scene gen_no_collinearity_distinct(int n) {
    require(n >= 1, "no_collinearity_distinct requires n >= 1");
    std::vector<KineticPoint> points = gen_no_collinearity(n).points();
    for (auto& p : points) {
        p.pos.x *= 2;
        p.vel.x *= 2;
    }
    nlohmann::json meta{{"construction", "no_collinearity_distinct"}, {"n", n}, {"tangent_half_angles", "s_i = 1 + 1/i"},
                        {"stretch", "(x, y) -> (2x, y)"}};
    return Scene(std::move(points), std::move(meta));
}

Scene gen_lower_bound(int n, int k) {
    require(k >= 3, "lower_bound requires k >= 3");
    require(n >= k, "lower_bound requires n >= k");
    std::vector<KineticPoint> points;
    nlohmann::json meta{{"construction", "lower_bound"}, {"n", n}, {"k", k}};

    if (n >= k * k) {
        const int m = n / k;
        auto family = [&](const char* prefix, int x, int count) {
            for (int i = 1; i <= count; ++i) {
                for (int j = 1; j <= m; ++j) {
                    points.push_back({std::string(prefix) + std::to_string(i) + "_" + std::to_string(j),
                                      {Rational(x), Rational(j)},
                                      {Rational(0), Rational(i - 1)}});
                }
            }
        };
        family("a", 0, k / 2);
        family("b", 1, (k + 1) / 2);
        meta["regime"] = "two_lines";
        meta["family_size"] = m;
        meta["discarded_points"] = n - m * k;
        return Scene(std::move(points), std::move(meta));
    }

    // Clusters of at least k points, each a single collision at t = 0.
    const int clusters = n / k;
    nlohmann::json sizes = nlohmann::json::array();
    for (int c = 1; c <= clusters; ++c) {
        const int size = n / clusters + (c <= n % clusters ? 1 : 0);
        sizes.push_back(size);
        for (int j = 1; j <= size; ++j) {
            points.push_back({"c" + std::to_string(c) + "_" + std::to_string(j),
                              {Rational(c), Rational(c * c)},
                              {Rational(j), Rational(-j * j)}});
        }
    }
    meta["regime"] = "clusters";
    meta["cluster_sizes"] = sizes;
    meta["discarded_points"] = 0;
    return Scene(std::move(points), std::move(meta));
}

Scene gen_random(int n, std::uint64_t seed, int coord_bound) {
    require(n >= 1, "random requires n >= 1");
    require(coord_bound >= 1, "random requires coord_bound >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-coord_bound, coord_bound);
    std::uniform_int_distribution<long> den(1, 4);
    auto draw = [&] {
        const long a = num(rng);
        const long b = den(rng);
        Rational out{BigInt(a), BigInt(b)};
        out.canonicalize();
        return out;
    };

    std::vector<KineticPoint> points;
    while (points.size() < static_cast<std::size_t>(n)) {
        KineticPoint p{"p" + std::to_string(points.size()), {draw(), draw()}, {draw(), draw()}};
        const bool duplicate =
            std::any_of(points.begin(), points.end(), [&](const KineticPoint& q) { return q.same_motion(p); });
        if (!duplicate) points.push_back(std::move(p));
    }
    nlohmann::json meta{{"construction", "random"}, {"n", n}, {"seed", seed}, {"coord_bound", coord_bound}};
    return Scene(std::move(points), std::move(meta));
}

CertificateReport verify_tight_certificate(const Scene& scene, const Rational& horizon) {
    const auto& meta = scene.meta();
    const std::string name = meta.value("construction", std::string{});
    if (name != "tight" && name != "tight_ellipse") {
        throw std::invalid_argument("verify_tight_certificate: wrong construction meta '" + name + "'");
    }
    if (!meta.contains("angle_order") || !meta["angle_order"].is_array()) {
        throw std::invalid_argument("verify_tight_certificate: scene meta lacks angle_order");
    }
    std::vector<std::size_t> order;
    for (const auto& id : meta["angle_order"]) order.push_back(scene.index_of(id.get<std::string>()));

    CertificateReport report;
    for (std::size_t x = 0; x < order.size(); ++x) {
        for (std::size_t y = x + 1; y < order.size(); ++y) {
            for (std::size_t z = y + 1; z < order.size(); ++z) {
                const auto& a = scene[order[x]];
                const auto& b = scene[order[y]];
                const auto& c = scene[order[z]];
                const CollinearityPolynomial poly = collinearity_polynomial(a, b, c);
                const int at_zero = sgn(poly.c0);
                const int ahead = sgn(poly.at(horizon));
                const int behind = sgn(poly.at(-horizon));
                const bool ok = poly.c2 != 0 && at_zero != 0 && ahead == behind && ahead == -at_zero;
                if (!ok) report.failing_triples.push_back({a.id, b.id, c.id});
            }
        }
    }
    report.pass = report.failing_triples.empty();
    return report;
}

}  // namespace kcol
