#include "taxigeom/polygon.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace taxi {

namespace {

// Removes cyclically repeated and collinear-middle vertices until stable.
void simplify_cycle(std::vector<Point>& vs) {
    bool changed = true;
    while (changed && vs.size() > 2) {
        changed = false;

        std::vector<Point> dedup;
        dedup.reserve(vs.size());
        for (const Point& v : vs) {
            if (!dedup.empty() && dedup.back() == v) {
                changed = true;
                continue;
            }
            dedup.push_back(v);
        }
        if (dedup.size() > 1 && dedup.front() == dedup.back()) {
            dedup.pop_back();
            changed = true;
        }
        vs = std::move(dedup);
        if (vs.size() <= 2) {
            break;
        }

        const std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = vs[(i + n - 1) % n];
            const Point& next = vs[(i + 1) % n];
            if (orientation(prev, vs[i], next) == 0) {
                vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
}

Scalar signed_area_times2(const std::vector<Point>& vs) {
    Scalar acc(0);
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % n];
        acc += a.x1 * b.x2 - b.x1 * a.x2;
    }
    return acc;
}

}  // namespace

SimplePolygon SimplePolygon::from_cycle(std::vector<Point> vertices) {
    simplify_cycle(vertices);
    if (vertices.size() < 3) {
        throw std::domain_error("SimplePolygon: degenerate cycle");
    }
    Scalar area2 = signed_area_times2(vertices);
    if (area2.is_zero()) {
        throw std::domain_error("SimplePolygon: zero-area cycle");
    }
    if (area2.sign() < 0) {
        std::reverse(vertices.begin(), vertices.end());
    }
    auto lo = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), lo, vertices.end());

    SimplePolygon poly;
    poly.vs_ = std::move(vertices);
    return poly;
}

Scalar SimplePolygon::area_times2() const { return signed_area_times2(vs_); }

std::string SimplePolygon::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs_.size(); ++i) {
        if (i) os << "  ";
        os << vs_[i];
    }
    return os.str();
}

bool convex_contains(const SimplePolygon& poly, const Point& x) {
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(vs[i], vs[(i + 1) % n], x) < 0) {
            return false;
        }
    }
    return true;
}

bool convex_contains_strict(const SimplePolygon& poly, const Point& x) {
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(vs[i], vs[(i + 1) % n], x) <= 0) {
            return false;
        }
    }
    return true;
}

bool on_segment(const Point& a, const Point& b, const Point& x) {
    if (orientation(a, b, x) != 0) {
        return false;
    }
    return min(a.x1, b.x1) <= x.x1 && x.x1 <= max(a.x1, b.x1) &&
           min(a.x2, b.x2) <= x.x2 && x.x2 <= max(a.x2, b.x2);
}

bool on_ray(const Point& origin, std::pair<int, int> dir, const Point& x) {
    Point d = x - origin;
    if (dir.first == 0 && !d.x1.is_zero()) return false;
    if (dir.second == 0 && !d.x2.is_zero()) return false;
    Scalar t1 = d.x1 * Scalar(dir.first);
    Scalar t2 = d.x2 * Scalar(dir.second);
    if (dir.first != 0 && t1.sign() < 0) return false;
    if (dir.second != 0 && t2.sign() < 0) return false;
    // A diagonal step advances both coordinates in lockstep.
    if (dir.first != 0 && dir.second != 0 && !(t1 == t2)) return false;
    return true;
}

std::optional<Point> line_intersection(const Point& a1, const Point& a2,
                                       const Point& b1, const Point& b2) {
    Point da = a2 - a1;
    Point db = b2 - b1;
    Scalar det = da.x1 * db.x2 - da.x2 * db.x1;
    if (det.is_zero()) {
        return std::nullopt;
    }
    // a1 + t*da with t = (b1 - a1) x db / det
    Scalar t = ((b1.x1 - a1.x1) * db.x2 - (b1.x2 - a1.x2) * db.x1) / det;
    return Point(a1.x1 + t * da.x1, a1.x2 + t * da.x2);
}

namespace {

struct Fragment {
    Point u, v;
};

// Splits each edge of `poly` at every candidate point lying strictly inside it.
std::vector<Fragment> split_edges(const SimplePolygon& poly, const std::vector<Point>& candidates) {
    std::vector<Fragment> frags;
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % n];
        std::vector<Point> cuts;
        for (const Point& c : candidates) {
            if (!(c == a) && !(c == b) && on_segment(a, b, c)) {
                cuts.push_back(c);
            }
        }
        // Sort along the edge; taxi length from a is monotone on a segment.
        std::sort(cuts.begin(), cuts.end(), [&](const Point& l, const Point& r) {
            Scalar dl = abs(l.x1 - a.x1) + abs(l.x2 - a.x2);
            Scalar dr = abs(r.x1 - a.x1) + abs(r.x2 - a.x2);
            return dl < dr;
        });
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        Point prev = a;
        for (const Point& c : cuts) {
            frags.push_back({prev, c});
            prev = c;
        }
        frags.push_back({prev, b});
    }
    return frags;
}

Point midpoint_of(const Point& a, const Point& b) {
    Scalar half(1, 2);
    return Point((a.x1 + b.x1) * half, (a.x2 + b.x2) * half);
}

bool all_vertices_inside(const SimplePolygon& inner, const SimplePolygon& outer) {
    for (const Point& v : inner.vertices()) {
        if (!convex_contains(outer, v)) {
            return false;
        }
    }
    return true;
}

}  // namespace

SimplePolygon convex_union_boundary(const SimplePolygon& a, const SimplePolygon& b) {
    if (all_vertices_inside(b, a)) {
        return a;
    }
    if (all_vertices_inside(a, b)) {
        return b;
    }

    // Candidate subdivision points: all vertices plus proper edge crossings.
    std::vector<Point> candidates;
    for (const Point& v : a.vertices()) candidates.push_back(v);
    for (const Point& v : b.vertices()) candidates.push_back(v);
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    for (std::size_t i = 0; i < va.size(); ++i) {
        const Point& a1 = va[i];
        const Point& a2 = va[(i + 1) % va.size()];
        for (std::size_t j = 0; j < vb.size(); ++j) {
            const Point& b1 = vb[j];
            const Point& b2 = vb[(j + 1) % vb.size()];
            if (auto x = line_intersection(a1, a2, b1, b2)) {
                if (on_segment(a1, a2, *x) && on_segment(b1, b2, *x)) {
                    candidates.push_back(*x);
                }
            }
        }
    }

    // Keep fragments that are not strictly interior to the other polygon;
    // fragments shared by both boundaries are kept once.
    std::vector<Fragment> kept;
    auto same_fragment = [](const Fragment& f, const Fragment& g) {
        return (f.u == g.u && f.v == g.v) || (f.u == g.v && f.v == g.u);
    };
    for (const Fragment& f : split_edges(a, candidates)) {
        if (!convex_contains_strict(b, midpoint_of(f.u, f.v))) {
            kept.push_back(f);
        }
    }
    for (const Fragment& f : split_edges(b, candidates)) {
        if (convex_contains_strict(a, midpoint_of(f.u, f.v))) {
            continue;
        }
        bool dup = false;
        for (const Fragment& g : kept) {
            if (same_fragment(f, g)) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            kept.push_back(f);
        }
    }

    // Stitch the fragments into the boundary cycle. Interiors overlap, so the
    // union boundary is a single simple cycle and every vertex has degree 2.
    std::map<Point, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        incident[kept[i].u].push_back(i);
        incident[kept[i].v].push_back(i);
    }
    for (const auto& [pt, ids] : incident) {
        if (ids.size() != 2) {
            throw std::logic_error("convex_union_boundary: fragment graph is not a cycle at " +
                                   pt.str());
        }
    }

    const Point start = incident.begin()->first;
    std::vector<Point> cycle;
    Point cur = start;
    std::size_t cur_frag = incident.at(start)[0];
    std::size_t used = 0;
    do {
        cycle.push_back(cur);
        const Fragment& f = kept[cur_frag];
        Point next = (f.u == cur) ? f.v : f.u;
        const auto& ids = incident.at(next);
        cur_frag = (ids[0] == cur_frag) ? ids[1] : ids[0];
        cur = next;
        ++used;
        if (used > kept.size()) {
            throw std::logic_error("convex_union_boundary: walk does not close");
        }
    } while (!(cur == start));
    if (used != kept.size()) {
        throw std::logic_error("convex_union_boundary: disconnected boundary");
    }

    return SimplePolygon::from_cycle(std::move(cycle));
}

}  // namespace taxi
