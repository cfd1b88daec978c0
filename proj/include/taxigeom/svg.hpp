#pragma once

#include <string>
#include <vector>

#include "taxigeom/affine.hpp"
#include "taxigeom/apollonian.hpp"

namespace taxi {

struct Viewport {
    Scalar x1_min, x1_max, x2_min, x2_max;
};

/// A family of Apollonian sets to draw in one figure.
struct SceneSpec {
    Point p, q;
    std::vector<ExtRatio> k_values;
    Viewport viewport;
    bool show_refs = false;
};

/// Deterministic SVG (fixed 6-decimal coordinates, fixed element order) with
/// the mathematical y-axis orientation. Unbounded shapes are clipped to the
/// viewport, rays extended to its edge.
std::string render_family_svg(const SceneSpec& scene);

/// Figure of all nine region pieces of an affine set.
std::string render_affine_svg(const AffineParams& params, const Viewport& viewport,
                              bool show_refs);

}  // namespace taxi
