#include "taxigeom/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace taxi {

namespace {

constexpr double kScale = 48.0;  // pixels per world unit

const char* const kPalette[] = {"#1f6fb2", "#c2452d", "#2c8a4b", "#8051a1",
                                "#b07f22", "#3aa6a6", "#a13670", "#5a6b2f"};

struct Frame {
    double x1_min, x1_max, x2_min, x2_max;
    double width() const { return (x1_max - x1_min) * kScale; }
    double height() const { return (x2_max - x2_min) * kScale; }
    double px(double x1) const { return (x1 - x1_min) * kScale; }
    double py(double x2) const { return (x2_max - x2) * kScale; }  // y flip
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Writer {
    std::ostringstream os;
    Frame frame;

    void open() {
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(frame.width())
           << "\" height=\"" << fmt(frame.height()) << "\" viewBox=\"0 0 " << fmt(frame.width())
           << " " << fmt(frame.height()) << "\">\n";
        os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }
    void close() { os << "</svg>\n"; }

    void line(double ax, double ay, double bx, double by, const std::string& style) {
        os << "<line x1=\"" << fmt(frame.px(ax)) << "\" y1=\"" << fmt(frame.py(ay)) << "\" x2=\""
           << fmt(frame.px(bx)) << "\" y2=\"" << fmt(frame.py(by)) << "\" " << style << "/>\n";
    }
    void dot(double x, double y, const std::string& fill) {
        os << "<circle cx=\"" << fmt(frame.px(x)) << "\" cy=\"" << fmt(frame.py(y))
           << "\" r=\"3.5\" fill=\"" << fill << "\"/>\n";
    }
    void poly(const std::vector<std::pair<double, double>>& pts, bool closed,
              const std::string& style) {
        os << (closed ? "<polygon points=\"" : "<polyline points=\"");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) os << " ";
            os << fmt(frame.px(pts[i].first)) << "," << fmt(frame.py(pts[i].second));
        }
        os << "\" " << style << "/>\n";
    }
    void rect(double x1, double x2, double y1, double y2, const std::string& style) {
        os << "<rect x=\"" << fmt(frame.px(x1)) << "\" y=\"" << fmt(frame.py(y2)) << "\" width=\""
           << fmt((x2 - x1) * kScale) << "\" height=\"" << fmt((y2 - y1) * kScale) << "\" "
           << style << "/>\n";
    }
};

double dbl(const Scalar& s) { return s.to_double(); }
std::pair<double, double> dbl(const Point& p) { return {dbl(p.x1), dbl(p.x2)}; }

// Largest t >= 0 with origin + t*dir inside the frame; negative if the ray
// leaves immediately.
double ray_exit(const Frame& f, double ox, double oy, int dx, int dy) {
    double t = 1e18;
    if (dx > 0) t = std::min(t, (f.x1_max - ox) / dx);
    if (dx < 0) t = std::min(t, (f.x1_min - ox) / dx);
    if (dy > 0) t = std::min(t, (f.x2_max - oy) / dy);
    if (dy < 0) t = std::min(t, (f.x2_min - oy) / dy);
    return t;
}

std::string stroke(const std::string& color, double width) {
    return "fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) + "\"";
}

void draw_axis_line(Writer& w, const AxisLine& line, const std::string& style) {
    const Frame& f = w.frame;
    double c = dbl(line.offset);
    switch (line.kind) {
        case AxisLine::Kind::Vertical:
            if (c >= f.x1_min && c <= f.x1_max) w.line(c, f.x2_min, c, f.x2_max, style);
            return;
        case AxisLine::Kind::Horizontal:
            if (c >= f.x2_min && c <= f.x2_max) w.line(f.x1_min, c, f.x1_max, c, style);
            return;
        case AxisLine::Kind::SlopePlusOne: {
            // x2 = x1 + c, clipped by both coordinate ranges
            double lo = std::max(f.x1_min, f.x2_min - c);
            double hi = std::min(f.x1_max, f.x2_max - c);
            if (lo < hi) w.line(lo, lo + c, hi, hi + c, style);
            return;
        }
        case AxisLine::Kind::SlopeMinusOne: {
            double lo = std::max(f.x1_min, c - f.x2_max);
            double hi = std::min(f.x1_max, c - f.x2_min);
            if (lo < hi) w.line(lo, c - lo, hi, c - hi, style);
            return;
        }
    }
}

void draw_refs(Writer& w, const Point& p, const Point& q) {
    std::string dashed = stroke("#999999", 1.0) + " stroke-dasharray=\"6,4\"";
    std::string dotted = stroke("#bbbbbb", 1.0) + " stroke-dasharray=\"2,3\"";
    for (const Point& f : {p, q}) {
        draw_axis_line(w, AxisLine::vertical_through(f), dashed);
        draw_axis_line(w, AxisLine::horizontal_through(f), dashed);
        draw_axis_line(w, AxisLine::guide_plus_through(f), dotted);
        draw_axis_line(w, AxisLine::guide_minus_through(f), dotted);
    }
    w.dot(dbl(p.x1), dbl(p.x2), "#111111");
    w.dot(dbl(q.x1), dbl(q.x2), "#111111");
}

void draw_bolt(Writer& w, const LightningBolt& lb, const std::string& color) {
    auto [ax, ay] = dbl(lb.a);
    auto [bx, by] = dbl(lb.b);
    double ta = ray_exit(w.frame, ax, ay, lb.start_dir.first, lb.start_dir.second);
    double tb = ray_exit(w.frame, bx, by, lb.end_dir.first, lb.end_dir.second);
    std::vector<std::pair<double, double>> pts;
    pts.emplace_back(ax + lb.start_dir.first * std::max(ta, 0.0),
                     ay + lb.start_dir.second * std::max(ta, 0.0));
    pts.emplace_back(ax, ay);
    if (!(ax == bx && ay == by)) {
        pts.emplace_back(bx, by);
    }
    pts.emplace_back(bx + lb.end_dir.first * std::max(tb, 0.0),
                     by + lb.end_dir.second * std::max(tb, 0.0));
    w.poly(pts, false, stroke(color, 2.0));
}

void draw_barbell(Writer& w, const Barbell& bb, const std::string& color) {
    const Frame& f = w.frame;
    auto quadrant_rect = [&](const Point& corner, QuadrantSigns s) {
        auto [cx, cy] = dbl(corner);
        double x1 = s.s1 > 0 ? cx : f.x1_min;
        double x2 = s.s1 > 0 ? f.x1_max : cx;
        double y1 = s.s2 > 0 ? cy : f.x2_min;
        double y2 = s.s2 > 0 ? f.x2_max : cy;
        x1 = std::max(x1, f.x1_min);
        x2 = std::min(x2, f.x1_max);
        y1 = std::max(y1, f.x2_min);
        y2 = std::min(y2, f.x2_max);
        if (x1 < x2 && y1 < y2) {
            w.rect(x1, x2, y1, y2, "fill=\"" + color + "\" fill-opacity=\"0.15\" stroke=\"none\"");
        }
    };
    quadrant_rect(bb.a, bb.quadrant_a);
    quadrant_rect(bb.b, bb.quadrant_b);
    draw_axis_line(w, bb.gl, stroke(color, 2.0));
}

void draw_shape(Writer& w, const ApollonianShape& shape, const std::string& color) {
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) {
                w.dot(dbl(v.x1), dbl(v.x2), color);
            } else if constexpr (std::is_same_v<T, SimplePolygon>) {
                std::vector<std::pair<double, double>> pts;
                for (const Point& pt : v.vertices()) {
                    pts.push_back(dbl(pt));
                }
                w.poly(pts, true, stroke(color, 2.0));
            } else if constexpr (std::is_same_v<T, LightningBolt>) {
                draw_bolt(w, v, color);
            } else {
                draw_barbell(w, v, color);
            }
        },
        shape);
}

Frame make_frame(const Viewport& vp) {
    return Frame{dbl(vp.x1_min), dbl(vp.x1_max), dbl(vp.x2_min), dbl(vp.x2_max)};
}

}  // namespace

std::string render_family_svg(const SceneSpec& scene) {
    Writer w;
    w.frame = make_frame(scene.viewport);
    w.open();
    if (scene.show_refs) {
        draw_refs(w, scene.p, scene.q);
    }
    for (std::size_t i = 0; i < scene.k_values.size(); ++i) {
        const std::string color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
        draw_shape(w, apollonian_set(scene.p, scene.q, scene.k_values[i]), color);
    }
    if (!scene.show_refs) {
        w.dot(dbl(scene.p.x1), dbl(scene.p.x2), "#111111");
        w.dot(dbl(scene.q.x1), dbl(scene.q.x2), "#111111");
    }
    w.close();
    return w.os.str();
}

std::string render_affine_svg(const AffineParams& params, const Viewport& viewport,
                              bool show_refs) {
    Writer w;
    w.frame = make_frame(viewport);
    w.open();
    if (show_refs) {
        draw_refs(w, params.p, params.q);
    }
    const Frame& f = w.frame;
    for (auto& [region, piece] : affine_set(params)) {
        const std::string color = kPalette[(region - 1) % (sizeof kPalette / sizeof *kPalette)];
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, SegmentPiece>) {
                    w.line(dbl(v.a.x1), dbl(v.a.x2), dbl(v.b.x1), dbl(v.b.x2), stroke(color, 2.0));
                } else if constexpr (std::is_same_v<T, RayPiece>) {
                    auto [ox, oy] = dbl(v.origin);
                    double t = ray_exit(f, ox, oy, v.dir.first, v.dir.second);
                    if (t > 0) {
                        w.line(ox, oy, ox + v.dir.first * t, oy + v.dir.second * t,
                               stroke(color, 2.0));
                    }
                } else if constexpr (std::is_same_v<T, LineTrace>) {
                    auto [ox, oy] = dbl(v.origin);
                    for (auto d : {v.dir_a, v.dir_b}) {
                        double t = ray_exit(f, ox, oy, d.first, d.second);
                        if (t > 0) {
                            w.line(ox, oy, ox + d.first * t, oy + d.second * t, stroke(color, 2.0));
                        }
                    }
                } else if constexpr (std::is_same_v<T, FullRegionPiece>) {
                    RegionBounds rb = region_bounds(params.p, params.q, region);
                    double x1 = rb.x1.lo ? std::max(dbl(*rb.x1.lo), f.x1_min) : f.x1_min;
                    double x2 = rb.x1.hi ? std::min(dbl(*rb.x1.hi), f.x1_max) : f.x1_max;
                    double y1 = rb.x2.lo ? std::max(dbl(*rb.x2.lo), f.x2_min) : f.x2_min;
                    double y2 = rb.x2.hi ? std::min(dbl(*rb.x2.hi), f.x2_max) : f.x2_max;
                    if (x1 < x2 && y1 < y2) {
                        w.rect(x1, x2, y1, y2,
                               "fill=\"" + color + "\" fill-opacity=\"0.25\" stroke=\"none\"");
                    }
                }
            },
            piece);
    }
    w.close();
    return w.os.str();
}

}  // namespace taxi
