// Command line front end: construct Apollonian sets, resolve affine sets per
// region, classify points by distance ratio, render SVG figures and run the
// brute-force verification oracle.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 domain error (coincident foci, filled set at k = 1, ...).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "taxigeom/affine.hpp"
#include "taxigeom/apollonian.hpp"
#include "taxigeom/json_io.hpp"
#include "taxigeom/oracle.hpp"
#include "taxigeom/svg.hpp"

namespace {

using namespace taxi;

struct GridFlag {
    std::string text;
    bool given() const { return !text.empty(); }
    GridSpec parse() const {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            auto comma = text.find(',', pos);
            parts.push_back(text.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (parts.size() != 5) {
            throw std::invalid_argument("--grid expects x1min,x1max,x2min,x2max,step");
        }
        return GridSpec{Scalar::parse(parts[0]), Scalar::parse(parts[1]), Scalar::parse(parts[2]),
                        Scalar::parse(parts[3]), Scalar::parse(parts[4])};
    }
};

GridSpec grid_or_default(const GridFlag& flag, const Point& p, const Point& q) {
    return flag.given() ? flag.parse() : default_grid(p, q);
}

Viewport viewport_of(const GridSpec& g) {
    return Viewport{g.x1_min, g.x1_max, g.x2_min, g.x2_max};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    }
    out << content;
}

void print_shape(const ApollonianShape& shape) {
    std::cout << "kind: " << shape_kind(shape) << "\n";
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) {
                std::cout << "vertex: " << v << "\n";
            } else if constexpr (std::is_same_v<T, SimplePolygon>) {
                std::cout << "vertices: " << v.str() << "\n";
            } else if constexpr (std::is_same_v<T, LightningBolt>) {
                std::cout << "vertices: " << v.a << "  " << v.b << "\n";
                std::cout << "ray from " << v.a << " dir " << v.start_dir.first << ","
                          << v.start_dir.second << "\n";
                std::cout << "ray from " << v.b << " dir " << v.end_dir.first << ","
                          << v.end_dir.second << "\n";
                std::cout << "segment slope: " << v.slope << "\n";
            } else {
                std::cout << "ends: " << v.a << "  " << v.b << "\n";
                std::cout << "guide line: " << v.gl.str() << "\n";
                std::cout << "quadrant at " << v.a.str() << ": " << v.quadrant_a.s1 << ","
                          << v.quadrant_a.s2 << "\n";
                std::cout << "quadrant at " << v.b.str() << ": " << v.quadrant_b.s1 << ","
                          << v.quadrant_b.s2 << "\n";
            }
        },
        shape);
}

void print_report(const std::string& label, const MismatchReport& report) {
    std::cout << label << ": " << report.summary() << "\n";
    int shown = 0;
    for (const Mismatch& m : report.mismatches) {
        if (++shown > 10) {
            std::cout << "  ...\n";
            break;
        }
        std::cout << "  mismatch at " << m.at << ": ratio-definition " << (m.expected ? "in" : "out")
                  << ", geometry " << (m.got ? "in" : "out") << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Exact taxicab-plane geometry: Apollonian sets, affine distance sets, "
                 "verification and figures"};
    app.require_subcommand(1);

    std::string p_text, q_text, k_text, x_text;
    std::vector<std::string> k_list;
    std::string json_path, svg_path;
    std::string alpha_text, beta_text, gamma_text;
    GridFlag grid;
    bool refs = false;
    bool want_filled = false;
    int samples = 3;

    auto add_foci = [&](CLI::App* cmd) {
        cmd->add_option("--p", p_text, "first focus as x1,x2")->required();
        cmd->add_option("--q", q_text, "second focus as x1,x2")->required();
    };

    CLI::App* construct = app.add_subcommand("construct", "construct A(p,q;k) or B(p,q;k)");
    add_foci(construct);
    construct->add_option("--k", k_text, "ratio: rational or inf")->required();
    construct->add_flag("--filled", want_filled, "emit the filled set instead of the curve");
    construct->add_option("--json", json_path, "write machine-readable geometry");
    construct->add_option("--svg", svg_path, "render the shape");
    construct->add_option("--grid", grid.text, "viewport x1min,x1max,x2min,x2max,step");
    construct->add_flag("--refs", refs, "draw reference lines in SVG output");

    CLI::App* family = app.add_subcommand("family", "render a family of Apollonian sets as SVG");
    add_foci(family);
    family->add_option("--k", k_list, "ratio values (repeatable)")->required();
    family->add_option("--svg", svg_path, "output path (stdout if omitted)");
    family->add_option("--grid", grid.text, "viewport x1min,x1max,x2min,x2max,step");
    family->add_flag("--refs", refs, "draw reference lines");

    CLI::App* verify = app.add_subcommand("verify", "compare constructions against the ratio oracle");
    add_foci(verify);
    verify->add_option("--k", k_text, "ratio: rational or inf")->required();
    verify->add_option("--grid", grid.text, "oracle grid x1min,x1max,x2min,x2max,step");
    verify->add_option("--samples", samples, "curve samples per edge (default 3)");
    verify->add_option("--json", json_path, "write the full mismatch reports");

    CLI::App* affine = app.add_subcommand("affine", "resolve an affine set per region");
    add_foci(affine);
    affine->add_option("--alpha", alpha_text, "coefficient of d(x,p)")->required();
    affine->add_option("--beta", beta_text, "coefficient of d(x,q)")->required();
    affine->add_option("--gamma", gamma_text, "right-hand side")->required();
    affine->add_option("--svg", svg_path, "render the assembled set");
    affine->add_option("--grid", grid.text, "viewport x1min,x1max,x2min,x2max,step");
    affine->add_flag("--refs", refs, "draw reference lines");

    CLI::App* classify = app.add_subcommand("classify", "distance ratios of a point or grid");
    add_foci(classify);
    classify->add_option("--x", x_text, "single query point x1,x2");
    classify->add_option("--grid", grid.text, "grid x1min,x1max,x2min,x2max,step");
    classify->add_option("--json", json_path, "write machine-readable ratios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Point p = Point::parse(p_text);
    Point q = Point::parse(q_text);

    if (construct->parsed()) {
        ExtRatio k = ExtRatio::parse(k_text);
        std::cout << "p: " << p << "  q: " << q << "  k: " << k << "\n";
        if (want_filled) {
            FilledSet f = filled(p, q, k);
            if (f.is_point()) {
                std::cout << "kind: point\nvertex: " << f.point() << "\n";
            } else {
                std::cout << "kind: filled\n";
                for (const SimplePolygon& quad : f.quads()) {
                    std::cout << "quad: " << quad.str() << "\n";
                }
            }
            if (!json_path.empty()) {
                write_file(json_path, filled_document(f).dump(2) + "\n");
            }
        } else {
            ApollonianShape shape = apollonian_set(p, q, k);
            print_shape(shape);
            if (!json_path.empty()) {
                write_file(json_path, shape_document(shape, p, q, k).dump(2) + "\n");
            }
        }
        if (!svg_path.empty()) {
            SceneSpec scene{p, q, {ExtRatio::parse(k_text)}, viewport_of(grid_or_default(grid, p, q)),
                            refs};
            write_file(svg_path, render_family_svg(scene));
        }
        return 0;
    }

    if (family->parsed()) {
        SceneSpec scene{p, q, {}, viewport_of(grid_or_default(grid, p, q)), refs};
        for (const std::string& ks : k_list) {
            scene.k_values.push_back(ExtRatio::parse(ks));
        }
        std::string svg = render_family_svg(scene);
        if (svg_path.empty()) {
            std::cout << svg;
        } else {
            write_file(svg_path, svg);
        }
        return 0;
    }

    if (verify->parsed()) {
        ExtRatio k = ExtRatio::parse(k_text);
        bool ok = true;
        nlohmann::json reports = nlohmann::json::array();
        auto record = [&](const char* label, const MismatchReport& r) {
            print_report(label, r);
            nlohmann::json rows = nlohmann::json::array();
            for (const Mismatch& m : r.mismatches) {
                rows.push_back({{"at", to_json(m.at)},
                                {"ratio_definition", m.expected},
                                {"geometry", m.got}});
            }
            reports.push_back(
                {{"check", label}, {"total", r.total}, {"mismatches", rows}});
            ok = ok && r.ok();
        };
        if (!(k == ExtRatio(Scalar(1)))) {
            record("filled set vs ratio oracle", verify_filled(p, q, k, grid_or_default(grid, p, q)));
        }
        record("curve samples vs ratio oracle",
               verify_curve(apollonian_set(p, q, k), p, q, k, samples));
        if (!json_path.empty()) {
            write_file(json_path, reports.dump(2) + "\n");
        }
        return ok ? 0 : 1;
    }

    if (affine->parsed()) {
        AffineParams params{p, q, Scalar::parse(alpha_text), Scalar::parse(beta_text),
                            Scalar::parse(gamma_text)};
        for (auto& [region, piece] : affine_set(params)) {
            std::cout << "R" << region << ": " << piece_str(piece) << "\n";
        }
        if (!svg_path.empty()) {
            write_file(svg_path,
                       render_affine_svg(params, viewport_of(grid_or_default(grid, p, q)), refs));
        }
        return 0;
    }

    // classify
    if (!x_text.empty()) {
        Point x = Point::parse(x_text);
        std::cout << "ratio: " << distance_ratio(x, p, q) << "\n";
        std::cout << "regions:";
        for (int r : classify_region(x, p, q)) {
            std::cout << " " << r;
        }
        std::cout << "\n";
        return 0;
    }
    auto table = classify_grid(p, q, grid_or_default(grid, p, q));
    if (!json_path.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (auto& [pt, ratio] : table) {
            rows.push_back({{"x", to_json(pt)}, {"ratio", to_json(ratio)}});
        }
        write_file(json_path, rows.dump() + "\n");
    } else {
        for (auto& [pt, ratio] : table) {
            std::cout << pt << " " << ratio << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
