#include "taxigeom/oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace taxi {

std::vector<Point> GridSpec::points() const {
    if (!(x1_min < x1_max) || !(x2_min < x2_max) || step.sign() <= 0) {
        throw std::domain_error("GridSpec: requires min < max and step > 0");
    }
    std::vector<Point> out;
    for (Scalar x2 = x2_max; x2 >= x2_min; x2 -= step) {
        for (Scalar x1 = x1_min; x1 <= x1_max; x1 += step) {
            out.emplace_back(x1, x2);
        }
    }
    return out;
}

GridSpec default_grid(const Point& p, const Point& q) {
    auto [gp, gm] = guide_complements(p, q);
    Scalar lo1 = min(min(p.x1, q.x1), min(gp.x1, gm.x1));
    Scalar hi1 = max(max(p.x1, q.x1), max(gp.x1, gm.x1));
    Scalar lo2 = min(min(p.x2, q.x2), min(gp.x2, gm.x2));
    Scalar hi2 = max(max(p.x2, q.x2), max(gp.x2, gm.x2));
    Scalar d = taxi_distance(p, q);
    Scalar margin = d + d;
    return GridSpec{lo1 - margin, hi1 + margin, lo2 - margin, hi2 + margin, d / Scalar(20)};
}

std::string MismatchReport::summary() const {
    std::ostringstream os;
    os << total << " points checked, " << mismatches.size() << " mismatches";
    return os.str();
}

MismatchReport verify_filled(const Point& p, const Point& q, const ExtRatio& k,
                             const GridSpec& grid) {
    FilledSet f = filled(p, q, k);
    MismatchReport report;
    for (const Point& x : grid.points()) {
        bool expected = in_filled(x, p, q, k);
        bool got = filled_contains(f, x);
        ++report.total;
        if (expected != got) {
            report.mismatches.push_back({x, expected, got});
        }
    }
    return report;
}

namespace {

void check_ratio(MismatchReport& report, const Point& x, const Point& p, const Point& q,
                 const ExtRatio& k) {
    ++report.total;
    if (!(distance_ratio(x, p, q) == k)) {
        report.mismatches.push_back({x, true, false});
    }
}

void check_segment(MismatchReport& report, const Point& a, const Point& b, const Point& p,
                   const Point& q, const ExtRatio& k, int samples) {
    check_ratio(report, a, p, q, k);
    if (a == b) {
        return;
    }
    for (int j = 1; j <= samples; ++j) {
        Scalar t(j, samples + 1);
        check_ratio(report, Point(a.x1 + t * (b.x1 - a.x1), a.x2 + t * (b.x2 - a.x2)), p, q, k);
    }
}

void check_ray(MismatchReport& report, const Point& origin, std::pair<int, int> dir,
               const Point& p, const Point& q, const ExtRatio& k) {
    for (long len : {1L, 2L, 4L}) {
        Point x(origin.x1 + Scalar(dir.first * len), origin.x2 + Scalar(dir.second * len));
        check_ratio(report, x, p, q, k);
    }
}

}  // namespace

MismatchReport verify_curve(const ApollonianShape& shape, const Point& p, const Point& q,
                            const ExtRatio& k, int samples_per_edge) {
    MismatchReport report;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) {
                ++report.total;
                const Point& expected_pt = k.is_zero() ? p : q;
                if (!(v == expected_pt)) {
                    report.mismatches.push_back({v, true, false});
                }
            } else if constexpr (std::is_same_v<T, SimplePolygon>) {
                const auto& vs = v.vertices();
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    check_segment(report, vs[i], vs[(i + 1) % vs.size()], p, q, k,
                                  samples_per_edge);
                }
            } else if constexpr (std::is_same_v<T, LightningBolt>) {
                check_segment(report, v.a, v.b, p, q, k, samples_per_edge);
                check_ratio(report, v.b, p, q, k);
                check_ray(report, v.a, v.start_dir, p, q, k);
                check_ray(report, v.b, v.end_dir, p, q, k);
            } else {  // Barbell: a region, checked pointwise on the grid
                for (const Point& x : default_grid(p, q).points()) {
                    ++report.total;
                    bool expected = distance_ratio(x, p, q) == k;
                    bool got = barbell_contains(v, x);
                    if (expected != got) {
                        report.mismatches.push_back({x, expected, got});
                    }
                }
            }
        },
        shape);
    return report;
}

std::vector<std::pair<Point, ExtRatio>> classify_grid(const Point& p, const Point& q,
                                                      const GridSpec& grid) {
    if (p == q) {
        throw std::domain_error("classify_grid: coincident foci");
    }
    std::vector<std::pair<Point, ExtRatio>> out;
    for (const Point& x : grid.points()) {
        out.emplace_back(x, distance_ratio(x, p, q));
    }
    return out;
}

}  // namespace taxi
