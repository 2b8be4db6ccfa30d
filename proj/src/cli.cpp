#include "wormbound/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <omp.h>

#include "wormbound/bounds.hpp"
#include "wormbound/conjecture.hpp"
#include "wormbound/error.hpp"
#include "wormbound/io.hpp"
#include "wormbound/search.hpp"

namespace wormbound::cli {

namespace {

using nlohmann::json;

void apply_thread_cap() {
    const char* env = std::getenv("WORMBOUND_THREADS");
    if (env == nullptr) return;
    const std::string s(env);
    std::size_t used = 0;
    long n = 0;
    try {
        n = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || n < 1) throw InvalidInput("WORMBOUND_THREADS must be a positive integer");
    omp_set_num_threads(static_cast<int>(n));
}

json hull_report(const Config& c) {
    const auto pts = config_points(c);
    const ConvexPolygon hull = convex_hull(pts);
    json vertices = json::array();
    for (const Point& p : hull.vertices()) vertices.push_back({p.x, p.y});
    const Config canon = canonicalize(c);
    return {{"config", to_json(c)},   {"canonical", to_json(canon)}, {"area", mu(c)},
            {"hull", vertices},       {"in_K1", in_K1(canon)},       {"in_K2", in_K2(c)}};
}

DomainBox parse_box_argument(const std::string& text) {
    json j;
    std::ifstream in(text);
    try {
        j = in ? json::parse(in) : json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidPlan(std::string("--box is neither a JSON file nor inline JSON: ") + e.what());
    }
    return box_from_json(j);
}

std::pair<std::size_t, std::size_t> parse_cells(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) {
            const auto n = std::stoul(text);
            return {n, n};
        }
        return {std::stoul(text.substr(0, x)), std::stoul(text.substr(x + 1))};
    } catch (const std::exception&) {
        throw InvalidInput("--cells must look like 30x25 or 30");
    }
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convex-hull lower bounds and configuration search for Moser's worm problem", "wormbound"};
    app.require_subcommand(1);

    std::string config_text;
    auto* hull = app.add_subcommand("hull", "Hull area of one configuration");
    hull->add_option("--config", config_text, "x1,y1,alpha,x2,y2,beta (angles in radians or with deg suffix)")
        ->required();

    double target = 0.227498;
    std::string method_text = "bnb";
    std::optional<double> resolution;
    std::string cert_out;
    auto* verify = app.add_subcommand("verify", "Certify the analytic area lower bound over the K1 angle box");
    verify->add_option("--target", target, "area to certify");
    verify->add_option("--method", method_text, "grid or bnb");
    verify->add_option("--resolution", resolution, "grid cell side / smallest bnb cell side (radians)");
    verify->add_option("--out", cert_out, "also write the certificate JSON here");

    double d1 = 0.0, d2 = 0.0;
    auto* error_bound = app.add_subcommand("error-bound", "Grid-search error bound for steps d1, d2");
    error_bound->add_option("--d1", d1, "coordinate step")->required();
    error_bound->add_option("--d2", d2, "angle step (radians)")->required();

    std::string plan_path, surface_out;
    auto* search = app.add_subcommand("search", "Run a multi-stage grid-search plan");
    search->add_option("--plan", plan_path, "plan JSON file")->required();
    search->add_option("--surface-out", surface_out, "write the final stage's (x2, y2) surface CSV");

    double coarse = 1e-3, final_step = 1e-7;
    int window = ConjectureOptions{}.window;
    auto* conjecture = app.add_subcommand("conjecture", "Two-angle pivot search");
    conjecture->add_option("--coarse", coarse, "initial step (radians)");
    conjecture->add_option("--final", final_step, "final step (radians)");
    conjecture->add_option("--window", window, "zoom window half-width in steps");

    std::string box_text, cells_text, out_path;
    double sd1 = 0.0, sd2 = 0.0;
    auto* surface = app.add_subcommand("surface", "Per-(x2, y2) cell minima as CSV");
    surface->add_option("--box", box_text, "box JSON (file or inline)")->required();
    surface->add_option("--cells", cells_text, "cell counts, e.g. 30x25")->required();
    surface->add_option("--d1", sd1, "coordinate step")->required();
    surface->add_option("--d2", sd2, "angle step (radians)")->required();
    surface->add_option("--out", out_path, "CSV output path")->required();

    std::string csv_in, svg_out;
    auto* heatmap = app.add_subcommand("heatmap", "Render a surface CSV as an SVG heatmap");
    heatmap->add_option("--csv", csv_in, "surface CSV")->required();
    heatmap->add_option("--svg", svg_out, "SVG output path")->required();

    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "wormbound: " << e.what() << '\n';
        return kInvalidArguments;
    }

    try {
        apply_thread_cap();
        json result;
        int code = kOk;
        if (*hull) {
            result = hull_report(parse_config(config_text));
        } else if (*verify) {
            const CertifyMethod method = parse_certify_method(method_text);
            CertifyOptions opt;
            opt.resolution = resolution.value_or(method == CertifyMethod::FullGrid ? 2e-4 : opt.resolution);
            const Certificate cert = certify_theorem(target, method, opt);
            result = to_json(cert);
            if (!cert_out.empty()) {
                std::ofstream f(cert_out);
                if (!f) throw InvalidPlan("cannot write '" + cert_out + "'");
                f << result.dump(2) << '\n';
            }
            if (cert.status == CertifyStatus::Failed) code = kCertificationFailed;
        } else if (*error_bound) {
            result = to_json(grid_error_bound(d1, d2));
        } else if (*search) {
            const SearchPlan plan = load_plan(plan_path);
            SurfaceGrid grid;
            const SearchResult r = run_plan(plan, surface_out.empty() ? nullptr : &grid);
            result = to_json(r);
            result["error_bound"] = to_json(grid_error_bound(plan.stages.back().d1, plan.stages.back().d2));
            if (!surface_out.empty()) write_surface_csv(grid, surface_out);
        } else if (*conjecture) {
            result = to_json(conjecture_search(coarse, final_step, {window}));
        } else if (*surface) {
            const auto [nx, ny] = parse_cells(cells_text);
            const DomainBox box = parse_box_argument(box_text);
            const SurfaceGrid grid = surface_min(box, nx, ny, sd1, sd2);
            write_surface_csv(grid, out_path);
            const auto m = grid.global_min();
            result = {{"cells", {nx, ny}}, {"out", out_path}};
            if (m) {
                result["min_area"] = m->cell.min_area;
                result["argmin"] = to_json(m->cell.argmin);
                result["min_cell"] = {m->i, m->j};
            }
        } else if (*heatmap) {
            render_heatmap_svg(csv_in, svg_out);
            result = {{"svg", svg_out}, {"rows", read_surface_csv(csv_in).size()}};
        }
        out << result.dump() << '\n';
        return code;
    } catch (const InvalidInput& e) {
        err << "wormbound: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const InvalidPlan& e) {
        err << "wormbound: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const std::exception& e) {
        err << "wormbound: internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace wormbound::cli
