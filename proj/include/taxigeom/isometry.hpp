#pragma once

#include <string>

#include "taxigeom/point.hpp"
#include "taxigeom/reference.hpp"

namespace taxi {

/// Signed coordinate permutation of the plane: one of the 8 linear maps
/// (x1,x2) -> (s1*u, s2*v) with (u,v) either (x1,x2) or (x2,x1).
/// These form the dihedral group of order 8.
struct LinearPart {
    bool swap = false;
    int s1 = 1;
    int s2 = 1;

    bool operator==(const LinearPart& rhs) const = default;

    Point apply(const Point& x) const {
        const Scalar& u = swap ? x.x2 : x.x1;
        const Scalar& v = swap ? x.x1 : x.x2;
        return Point(Scalar(s1) * u, Scalar(s2) * v);
    }

    std::pair<int, int> apply_step(std::pair<int, int> d) const {
        int u = swap ? d.second : d.first;
        int v = swap ? d.first : d.second;
        return {s1 * u, s2 * v};
    }

    LinearPart inverse() const {
        if (!swap) return {false, s1, s2};
        return {true, s2, s1};
    }
};

/// Taxicab-plane isometry in normal form: a signed coordinate permutation
/// followed by a translation. Preserves taxicab distance exactly.
class Isometry {
public:
    Isometry() = default;
    Isometry(LinearPart linear, Point translation)
        : lin_(linear), t_(std::move(translation)) {}

    static Isometry identity() { return {}; }
    static Isometry translation(const Point& v) { return {LinearPart{}, v}; }

    // Reflections across lines through the origin.
    static Isometry reflect_vertical_axis() { return {{false, -1, 1}, Point()}; }
    static Isometry reflect_horizontal_axis() { return {{false, 1, -1}, Point()}; }
    static Isometry reflect_guide_plus() { return {{true, 1, 1}, Point()}; }
    static Isometry reflect_guide_minus() { return {{true, -1, -1}, Point()}; }

    static Isometry rotate_quarter() { return {{true, -1, 1}, Point()}; }
    static Isometry rotate_half() { return {{false, -1, -1}, Point()}; }
    static Isometry rotate_three_quarters() { return {{true, 1, -1}, Point()}; }

    /// Reflection across an arbitrary coordinate or guide line.
    static Isometry reflect_across(const AxisLine& line);

    /// The map x -> 2m - x.
    static Isometry rotation_pi_about(const Point& m);

    Point apply(const Point& x) const { return lin_.apply(x) + t_; }

    /// compose(f, g) applies g first: (f o g)(x) = f(g(x)).
    static Isometry compose(const Isometry& f, const Isometry& g);

    Isometry inverse() const;

    const LinearPart& linear() const { return lin_; }
    const Point& translation_part() const { return t_; }

    bool operator==(const Isometry& rhs) const = default;

    AxisLine apply_line(const AxisLine& line) const;

    std::string str() const;

private:
    LinearPart lin_;
    Point t_;
};

struct StandardPosition {
    Isometry iso;
    Point p_image;  // always the origin
    Point q_image;  // first quadrant, 0 <= x2 <= x1
};

/// An isometry taking p to the origin and q into {0 <= x2 <= x1}: a
/// translation by -p followed by at most reflections across the horizontal
/// axis, the vertical axis, and the positive-slope guide line, in that order,
/// each applied only when needed. Throws std::domain_error if p = q.
StandardPosition normalize_standard(const Point& p, const Point& q);

}  // namespace taxi
