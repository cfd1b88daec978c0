#pragma once

#include <json.hpp>

#include "taxigeom/apollonian.hpp"

namespace taxi {

/// Rationals serialize as [numerator, denominator] pairs; components that do
/// not fit a 64-bit integer are emitted as decimal strings, so the encoding
/// is bit-exact at any magnitude. Points are pairs of rationals.
nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const ExtRatio& k);  // "inf" or a rational pair

Scalar scalar_from_json(const nlohmann::json& j);
Point point_from_json(const nlohmann::json& j);
ExtRatio ratio_from_json(const nlohmann::json& j);

/// Full geometry document for an Apollonian set: kind, foci, ratio, vertices,
/// rays and, for curve shapes with k outside {0,1,inf}, the constituent
/// filled quads.
nlohmann::json shape_document(const ApollonianShape& shape, const Point& p, const Point& q,
                              const ExtRatio& k);

/// Document for a filled set (kind "filled" or "point").
nlohmann::json filled_document(const FilledSet& f);

struct ParsedShape {
    Point p, q;
    ExtRatio k;
    ApollonianShape shape;
};

/// Inverse of shape_document; throws std::invalid_argument on malformed input.
ParsedShape shape_from_document(const nlohmann::json& doc);

}  // namespace taxi
