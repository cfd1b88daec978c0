#include "taxigeom/json_io.hpp"

#include <stdexcept>

namespace taxi {

using nlohmann::json;

namespace {

json integer_component(const std::string& digits, bool fits, long value) {
    if (fits) {
        return value;
    }
    return digits;
}

std::string component_str(const json& j) {
    if (j.is_number_integer()) {
        return std::to_string(j.get<long long>());
    }
    if (j.is_string()) {
        return j.get<std::string>();
    }
    throw std::invalid_argument("json: rational component must be integer or string");
}

}  // namespace

json to_json(const Scalar& s) {
    return json::array({integer_component(s.numerator_str(), s.numerator_fits_long(),
                                          s.numerator_long()),
                        integer_component(s.denominator_str(), s.denominator_fits_long(),
                                          s.denominator_long())});
}

json to_json(const Point& p) { return json::array({to_json(p.x1), to_json(p.x2)}); }

json to_json(const ExtRatio& k) {
    if (k.is_infinite()) {
        return "inf";
    }
    return to_json(k.finite());
}

Scalar scalar_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("json: rational must be a [num, den] pair");
    }
    return Scalar::parse(component_str(j[0]) + "/" + component_str(j[1]));
}

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("json: point must be a [x1, x2] pair");
    }
    return Point(scalar_from_json(j[0]), scalar_from_json(j[1]));
}

ExtRatio ratio_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") {
        return ExtRatio::infinity();
    }
    return ExtRatio(scalar_from_json(j));
}

namespace {

json polygon_json(const SimplePolygon& poly) {
    json vs = json::array();
    for (const Point& v : poly.vertices()) {
        vs.push_back(to_json(v));
    }
    return vs;
}

json step_json(std::pair<int, int> d) { return json::array({d.first, d.second}); }

std::pair<int, int> step_from_json(const json& j) {
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

}  // namespace

json shape_document(const ApollonianShape& shape, const Point& p, const Point& q,
                    const ExtRatio& k) {
    json doc;
    doc["kind"] = shape_kind(shape);
    doc["p"] = to_json(p);
    doc["q"] = to_json(q);
    doc["k"] = to_json(k);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) {
                doc["vertices"] = json::array({to_json(v)});
            } else if constexpr (std::is_same_v<T, SimplePolygon>) {
                doc["vertices"] = polygon_json(v);
                FilledSet f = filled(p, q, k);
                json quads = json::array();
                for (const SimplePolygon& quad : f.quads()) {
                    quads.push_back(polygon_json(quad));
                }
                doc["quads"] = quads;
            } else if constexpr (std::is_same_v<T, LightningBolt>) {
                doc["vertices"] = json::array({to_json(v.a), to_json(v.b)});
                doc["rays"] = json::array({json{{"origin", to_json(v.a)}, {"dir", step_json(v.start_dir)}},
                                           json{{"origin", to_json(v.b)}, {"dir", step_json(v.end_dir)}}});
                doc["slope"] = v.slope;
            } else {  // Barbell
                doc["vertices"] = json::array({to_json(v.a), to_json(v.b)});
                doc["barbell"] = json{
                    {"gl", {{"kind", static_cast<int>(v.gl.kind)}, {"offset", to_json(v.gl.offset)}}},
                    {"quadrant_a", json::array({v.quadrant_a.s1, v.quadrant_a.s2})},
                    {"quadrant_b", json::array({v.quadrant_b.s1, v.quadrant_b.s2})}};
            }
        },
        shape);
    return doc;
}

json filled_document(const FilledSet& f) {
    json doc;
    doc["kind"] = f.is_point() ? "point" : "filled";
    doc["p"] = to_json(f.p);
    doc["q"] = to_json(f.q);
    doc["k"] = to_json(f.k);
    if (f.is_point()) {
        doc["vertices"] = json::array({to_json(f.point())});
    } else {
        json quads = json::array();
        for (const SimplePolygon& quad : f.quads()) {
            quads.push_back(polygon_json(quad));
        }
        doc["quads"] = quads;
    }
    return doc;
}

ParsedShape shape_from_document(const json& doc) {
    try {
        ParsedShape out{point_from_json(doc.at("p")), point_from_json(doc.at("q")),
                        ratio_from_json(doc.at("k")), Point()};
        const std::string kind = doc.at("kind").get<std::string>();
        const json& vs = doc.at("vertices");
        if (kind == "point") {
            out.shape = point_from_json(vs.at(0));
        } else if (kind == "polygon") {
            std::vector<Point> cycle;
            for (const json& v : vs) {
                cycle.push_back(point_from_json(v));
            }
            out.shape = SimplePolygon::from_cycle(std::move(cycle));
        } else if (kind == "bolt") {
            const json& rays = doc.at("rays");
            LightningBolt lb{step_from_json(rays.at(0).at("dir")), point_from_json(vs.at(0)),
                             point_from_json(vs.at(1)), step_from_json(rays.at(1).at("dir")),
                             doc.at("slope").get<int>()};
            out.shape = canonical_bolt(lb);
        } else if (kind == "barbell") {
            out.shape = barbell(point_from_json(vs.at(0)), point_from_json(vs.at(1)));
        } else {
            throw std::invalid_argument("json: unknown shape kind '" + kind + "'");
        }
        return out;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("json: malformed shape document: ") + e.what());
    }
}

}  // namespace taxi
