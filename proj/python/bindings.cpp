// Python bindings for the exact taxicab geometry kernel. Values cross the
// boundary as strings ("3/2", "x1,x2", "inf") or JSON documents, so exactness
// survives the trip; the python package wraps them in Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "taxigeom/affine.hpp"
#include "taxigeom/apollonian.hpp"
#include "taxigeom/json_io.hpp"
#include "taxigeom/oracle.hpp"
#include "taxigeom/svg.hpp"

namespace py = pybind11;
using namespace taxi;

namespace {

Point pt(const std::string& s) { return Point::parse(s); }

nlohmann::json piece_json(int region, const RegionPiece& piece) {
    nlohmann::json j;
    j["region"] = region;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EmptyPiece>) {
                j["kind"] = "empty";
            } else if constexpr (std::is_same_v<T, SegmentPiece>) {
                j["kind"] = "segment";
                j["a"] = to_json(v.a);
                j["b"] = to_json(v.b);
            } else if constexpr (std::is_same_v<T, RayPiece>) {
                j["kind"] = "ray";
                j["origin"] = to_json(v.origin);
                j["dir"] = {v.dir.first, v.dir.second};
            } else if constexpr (std::is_same_v<T, LineTrace>) {
                j["kind"] = "line";
                j["origin"] = to_json(v.origin);
                j["dirs"] = {{v.dir_a.first, v.dir_a.second}, {v.dir_b.first, v.dir_b.second}};
            } else {
                j["kind"] = "full_region";
            }
        },
        piece);
    return j;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact taxicab-plane geometry: Apollonian sets, affine distance sets, "
              "isometries and a brute-force verification oracle";

    m.def("distance", [](const std::string& a, const std::string& b) {
        return taxi_distance(pt(a), pt(b)).str();
    });

    m.def("midpoint", [](const std::string& p, const std::string& q) {
        return midpoint(pt(p), pt(q)).str();
    });

    m.def("ratio", [](const std::string& x, const std::string& p, const std::string& q) {
        return distance_ratio(pt(x), pt(p), pt(q)).str();
    });

    m.def("circle", [](const std::string& center, const std::string& r) {
        SimplePolygon square = taxi_circle(pt(center), Scalar::parse(r));
        std::vector<std::string> out;
        for (const Point& v : square.vertices()) {
            out.push_back(v.str());
        }
        return out;
    });

    m.def("regions", [](const std::string& x, const std::string& p, const std::string& q) {
        return classify_region(pt(x), pt(p), pt(q));
    });

    m.def("coordinate_complements", [](const std::string& p, const std::string& q) {
        auto [c1, c2] = coordinate_complements(pt(p), pt(q));
        return std::make_pair(c1.str(), c2.str());
    });

    m.def("guide_complements", [](const std::string& p, const std::string& q) {
        auto [gp, gm] = guide_complements(pt(p), pt(q));
        return std::make_pair(gp.str(), gm.str());
    });

    m.def("standard_position", [](const std::string& p, const std::string& q) {
        StandardPosition sp = normalize_standard(pt(p), pt(q));
        return std::make_pair(sp.p_image.str(), sp.q_image.str());
    });

    m.def("construct", [](const std::string& p, const std::string& q, const std::string& k) {
        Point pp = pt(p), qq = pt(q);
        ExtRatio kk = ExtRatio::parse(k);
        return shape_document(apollonian_set(pp, qq, kk), pp, qq, kk).dump();
    });

    m.def("construct_filled", [](const std::string& p, const std::string& q,
                                 const std::string& k) {
        return filled_document(filled(pt(p), pt(q), ExtRatio::parse(k))).dump();
    });

    m.def("affine", [](const std::string& p, const std::string& q, const std::string& alpha,
                       const std::string& beta, const std::string& gamma) {
        AffineParams params{pt(p), pt(q), Scalar::parse(alpha), Scalar::parse(beta),
                            Scalar::parse(gamma)};
        nlohmann::json rows = nlohmann::json::array();
        for (auto& [region, piece] : affine_set(params)) {
            rows.push_back(piece_json(region, piece));
        }
        return rows.dump();
    });

    m.def(
        "verify",
        [](const std::string& p, const std::string& q, const std::string& k, int samples) {
            Point pp = pt(p), qq = pt(q);
            ExtRatio kk = ExtRatio::parse(k);
            long mismatches = 0;
            if (!(kk == ExtRatio(Scalar(1)))) {
                mismatches += static_cast<long>(
                    verify_filled(pp, qq, kk, default_grid(pp, qq)).mismatches.size());
            }
            mismatches += static_cast<long>(
                verify_curve(apollonian_set(pp, qq, kk), pp, qq, kk, samples).mismatches.size());
            return mismatches;
        },
        py::arg("p"), py::arg("q"), py::arg("k"), py::arg("samples") = 3);

    m.def(
        "family_svg",
        [](const std::string& p, const std::string& q, const std::vector<std::string>& ks,
           bool refs) {
            Point pp = pt(p), qq = pt(q);
            GridSpec g = default_grid(pp, qq);
            SceneSpec scene{pp, qq, {}, Viewport{g.x1_min, g.x1_max, g.x2_min, g.x2_max}, refs};
            for (const std::string& k : ks) {
                scene.k_values.push_back(ExtRatio::parse(k));
            }
            return render_family_svg(scene);
        },
        py::arg("p"), py::arg("q"), py::arg("ks"), py::arg("refs") = false);
}
