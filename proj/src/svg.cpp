// SPDX-License-Identifier: Apache-2.0
#include "kcol/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace kcol {

namespace {

struct Point2d {
    double x, y;
};

Point2d position_approx(const KineticPoint& p, double t) {
    return {p.pos.x.get_d() + t * p.vel.x.get_d(), p.pos.y.get_d() + t * p.vel.y.get_d()};
}

// Fixed-format numbers keep the output byte-stable.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

class Mapper {
  public:
    Mapper(const Viewport& v, int size) : v_(v), size_(size) {
        scale_ = size / std::max(v.max_x - v.min_x, v.max_y - v.min_y);
    }
    double x(double wx) const { return (wx - v_.min_x) * scale_; }
    double y(double wy) const { return size_ - (wy - v_.min_y) * scale_; }
    double scale() const { return scale_; }

  private:
    Viewport v_;
    int size_;
    double scale_;
};

}  // namespace

Viewport fit_viewport(const Scene& scene, const std::vector<double>& times) {
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_x;
    for (double t : times) {
        for (const auto& p : scene.points()) {
            const Point2d q = position_approx(p, t);
            lo_x = std::min(lo_x, q.x);
            lo_y = std::min(lo_y, q.y);
            hi_x = std::max(hi_x, q.x);
            hi_y = std::max(hi_y, q.y);
        }
    }
    if (!(lo_x <= hi_x)) return {};
    const double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
    const double half = std::max({hi_x - lo_x, hi_y - lo_y, 1e-6}) * 0.6;
    return {cx - half, cy - half, cx + half, cy + half};
}

std::string render_snapshot(const Scene& scene, double time, const std::string& time_label,
                            const std::vector<CollinearityEvent>& events, const Viewport& view,
                            const std::string& watermark, const SnapshotStyle& style) {
    const Mapper m(view, style.size_px);
    const std::string size = std::to_string(style.size_px);
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
           "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
    svg += "  <defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">"
           "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"#888\"/></marker></defs>\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Event lines, clipped generously to the viewport diagonal.
    const double reach = 2 * std::max(view.max_x - view.min_x, view.max_y - view.min_y);
    for (const auto& ev : events) {
        const Point2d a = position_approx(scene[ev.anchors[0]], time);
        const Point2d b = position_approx(scene[ev.anchors[1]], time);
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if (len == 0) continue;
        const double ux = (b.x - a.x) / len, uy = (b.y - a.y) / len;
        svg += "  <line class=\"event\" x1=\"" + num(m.x(a.x - reach * ux)) + "\" y1=\"" + num(m.y(a.y - reach * uy)) +
               "\" x2=\"" + num(m.x(a.x + reach * ux)) + "\" y2=\"" + num(m.y(a.y + reach * uy)) +
               "\" stroke=\"#d33\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& p : scene.points()) {
        const Point2d q = position_approx(p, time);
        const double vx = p.vel.x.get_d() * style.arrow_time, vy = p.vel.y.get_d() * style.arrow_time;
        if (vx != 0 || vy != 0) {
            svg += "  <line class=\"velocity\" x1=\"" + num(m.x(q.x)) + "\" y1=\"" + num(m.y(q.y)) + "\" x2=\"" +
                   num(m.x(q.x + vx)) + "\" y2=\"" + num(m.y(q.y + vy)) +
                   "\" stroke=\"#888\" stroke-width=\"1\" marker-end=\"url(#arrow)\"/>\n";
        }
        svg += "  <circle class=\"point\" cx=\"" + num(m.x(q.x)) + "\" cy=\"" + num(m.y(q.y)) +
               "\" r=\"4\" fill=\"#1f4e9c\"/>\n";
        svg += "  <text x=\"" + num(m.x(q.x) + 6) + "\" y=\"" + num(m.y(q.y) - 6) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(p.id) + "</text>\n";
    }

    svg += "  <text x=\"8\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\">t = " + escape(time_label) + "</text>\n";
    if (!watermark.empty()) {
        svg += "  <text class=\"watermark\" x=\"8\" y=\"" + std::to_string(style.size_px - 10) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#c60\">" + escape(watermark) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace kcol
