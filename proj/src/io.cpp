#include "wormbound/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include "wormbound/error.hpp"

namespace wormbound {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fixed(double v, int digits = 3) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double number_field(const json& j, const char* key, bool allow_deg = false) {
    if (!j.contains(key)) throw InvalidPlan(std::string("missing field '") + key + "'");
    const json& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string() && allow_deg) {
        try {
            return parse_number(v.get<std::string>(), true);
        } catch (const InvalidInput& e) {
            throw InvalidPlan(std::string("field '") + key + "': " + e.what());
        }
    }
    throw InvalidPlan(std::string("field '") + key + "' must be a number");
}

template <typename Int>
Int count_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
        throw InvalidPlan(std::string("field '") + key + "' must be a non-negative integer");
    }
    return j.at(key).get<Int>();
}

constexpr std::array<const char*, 6> kFieldNames = {"x1", "y1", "alpha", "x2", "y2", "beta"};

bool is_angle_field(std::size_t i) { return i == 2 || i == 5; }

}  // namespace

double parse_number(std::string_view text, bool allow_deg) {
    std::string s = trim(text);
    bool deg = false;
    if (allow_deg && s.size() > 3 && s.compare(s.size() - 3, 3, "deg") == 0) {
        deg = true;
        s = trim(std::string_view(s).substr(0, s.size() - 3));
    }
    if (s.empty()) throw InvalidInput("empty number");
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InvalidInput("not a number: '" + std::string(text) + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw InvalidInput("not a finite number: '" + std::string(text) + "'");
    return deg ? deg_to_rad(v) : v;
}

Config parse_config(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.size() != 6) throw InvalidInput("config needs 6 comma-separated values x1,y1,alpha,x2,y2,beta");
    std::array<double, 6> v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = parse_number(parts[i], is_angle_field(i));
    return Config::from_array(v);
}

json to_json(const Config& c) {
    return {{"x1", c.x1}, {"y1", c.y1}, {"alpha", c.alpha}, {"x2", c.x2}, {"y2", c.y2}, {"beta", c.beta}};
}

json to_json(const DomainBox& b) {
    json j = json::object();
    const auto iv = b.as_array();
    for (std::size_t i = 0; i < 6; ++i) j[kFieldNames[i]] = {iv[i].lo, iv[i].hi};
    return j;
}

json to_json(const SearchPlan& plan) {
    json stages = json::array();
    for (const auto& s : plan.stages) {
        json js = {{"d1", s.d1}, {"d2", s.d2}};
        if (s.is_auto()) {
            js["auto"] = true;
        } else {
            js["box"] = to_json(*s.box);
        }
        stages.push_back(js);
    }
    return {{"stages", stages}};
}

json to_json(const SearchResult& r) {
    return {{"best", to_json(r.best)},       {"area", r.area},
            {"evaluations", r.evaluations}, {"pruned", r.pruned},
            {"stage_index", r.stage_index}};
}

json to_json(const Certificate& c) {
    return {{"target", c.target},
            {"certified_min", c.certified_min},
            {"cells_examined", c.cells_examined},
            {"max_depth", c.max_depth},
            {"method", to_string(c.method)},
            {"status", to_string(c.status)}};
}

json to_json(const ErrorBound& e) {
    return {{"d1", e.d1},
            {"d2", e.d2},
            {"delta", e.delta},
            {"exact_bound", e.exact_bound},
            {"linear_bound", e.linear_bound}};
}

json to_json(const BoundBreakdown& b) { return {{"f", b.f}, {"g", b.g}, {"h", b.h}, {"p", b.p}}; }

json to_json(const ConjectureResult& r) {
    json j = to_json(r.result);
    j["psi"] = r.pivot.psi;
    j["phi"] = r.pivot.phi;
    j["coarse_area"] = r.coarse_area;
    j["zoom_levels"] = r.zoom_levels;
    return j;
}

Config config_from_json(const json& j) {
    if (!j.is_object()) throw InvalidPlan("config must be an object");
    std::array<double, 6> v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = number_field(j, kFieldNames[i], is_angle_field(i));
    return Config::from_array(v);
}

DomainBox box_from_json(const json& j) {
    if (!j.is_object()) throw InvalidPlan("box must be an object");
    std::array<Interval, 6> iv;
    for (std::size_t i = 0; i < 6; ++i) {
        const char* key = kFieldNames[i];
        if (!j.contains(key)) throw InvalidPlan(std::string("box: missing interval '") + key + "'");
        const json& pair = j.at(key);
        if (!pair.is_array() || pair.size() != 2) {
            throw InvalidPlan(std::string("box: '") + key + "' must be [lo, hi]");
        }
        json wrapped = {{"lo", pair[0]}, {"hi", pair[1]}};
        iv[i] = {number_field(wrapped, "lo", is_angle_field(i)), number_field(wrapped, "hi", is_angle_field(i))};
        if (!(iv[i].lo <= iv[i].hi)) throw InvalidPlan(std::string("box: '") + key + "' has lo > hi");
    }
    return DomainBox::from_array(iv);
}

SearchPlan plan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("stages") || !j.at("stages").is_array()) {
        throw InvalidPlan("plan must be an object with a 'stages' array");
    }
    SearchPlan plan;
    std::size_t index = 0;
    for (const json& js : j.at("stages")) {
        try {
            if (!js.is_object()) throw InvalidPlan("stage must be an object");
            PlanStage ps;
            ps.d1 = number_field(js, "d1");
            ps.d2 = number_field(js, "d2", true);
            const bool is_auto = js.contains("auto") && js.at("auto") == true;
            if (is_auto == js.contains("box")) throw InvalidPlan("stage needs exactly one of 'box' or \"auto\": true");
            if (!is_auto) ps.box = box_from_json(js.at("box"));
            plan.stages.push_back(ps);
        } catch (const InvalidPlan& e) {
            throw InvalidPlan("stage " + std::to_string(index) + ": " + e.what());
        }
        ++index;
    }
    return plan;
}

SearchResult result_from_json(const json& j) {
    if (!j.is_object() || !j.contains("best")) throw InvalidPlan("result must be an object with 'best'");
    SearchResult r;
    r.best = config_from_json(j.at("best"));
    r.area = number_field(j, "area");
    r.evaluations = count_field<std::uint64_t>(j, "evaluations");
    r.pruned = count_field<std::uint64_t>(j, "pruned");
    r.stage_index = count_field<std::uint32_t>(j, "stage_index");
    return r;
}

Certificate certificate_from_json(const json& j) {
    if (!j.is_object()) throw InvalidPlan("certificate must be an object");
    Certificate c;
    c.target = number_field(j, "target");
    c.certified_min = number_field(j, "certified_min");
    c.cells_examined = count_field<std::uint64_t>(j, "cells_examined");
    c.max_depth = count_field<std::uint32_t>(j, "max_depth");
    try {
        c.method = parse_certify_method(j.at("method").get<std::string>());
        c.status = parse_certify_status(j.at("status").get<std::string>());
    } catch (const std::exception& e) {
        throw InvalidPlan(std::string("certificate: ") + e.what());
    }
    return c;
}

SearchPlan load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidPlan("cannot open plan file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidPlan("plan file '" + path + "' is not valid JSON: " + e.what());
    }
    return plan_from_json(j);
}

void write_surface_csv(const SurfaceGrid& grid, std::ostream& out) {
    out << "x2,y2,min_area,x1,y1,alpha,x2_arg,y2_arg,beta\n";
    for (std::size_t j = 0; j < grid.ny(); ++j) {
        for (std::size_t i = 0; i < grid.nx(); ++i) {
            const SurfaceCell& c = grid.at(i, j);
            if (c.empty()) continue;
            const Point center = grid.cell_center(i, j);
            const Config& a = c.argmin;
            out << g17(center.x) << ',' << g17(center.y) << ',' << g17(c.min_area) << ',' << g17(a.x1) << ','
                << g17(a.y1) << ',' << g17(a.alpha) << ',' << g17(a.x2) << ',' << g17(a.y2) << ','
                << g17(a.beta) << '\n';
        }
    }
}

void write_surface_csv(const SurfaceGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidPlan("cannot write '" + path + "'");
    write_surface_csv(grid, out);
}

std::vector<SurfaceRow> read_surface_csv(std::istream& in) {
    std::vector<SurfaceRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (!header_seen) {
            header_seen = true;
            if (trim(line).rfind("x2,", 0) == 0) continue;
        }
        const auto parts = split(line, ',');
        if (parts.size() != 9) {
            throw InvalidPlan("surface CSV line " + std::to_string(line_no) + ": expected 9 fields, got " +
                              std::to_string(parts.size()));
        }
        std::array<double, 9> v;
        try {
            for (std::size_t k = 0; k < 9; ++k) v[k] = parse_number(parts[k]);
        } catch (const InvalidInput& e) {
            throw InvalidPlan("surface CSV line " + std::to_string(line_no) + ": " + e.what());
        }
        rows.push_back({v[0], v[1], v[2], {v[3], v[4], v[5], v[6], v[7], v[8]}});
    }
    if (rows.empty()) throw InvalidPlan("surface CSV has no data rows");
    return rows;
}

std::vector<SurfaceRow> read_surface_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidPlan("cannot open surface CSV '" + path + "'");
    return read_surface_csv(in);
}

namespace {

// Smallest gap between distinct sorted values; 1 when there is only one.
double min_spacing(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < v.size(); ++k) gap = std::min(gap, v[k] - v[k - 1]);
    return std::isfinite(gap) && gap > 0.0 ? gap : 1.0;
}

std::string ramp_color(double t) {
    // Dark violet to yellow.
    constexpr double lo[3] = {68.0, 1.0, 84.0};
    constexpr double hi[3] = {253.0, 231.0, 37.0};
    t = std::clamp(t, 0.0, 1.0);
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(lo[0] + t * (hi[0] - lo[0]))),
                  static_cast<int>(std::lround(lo[1] + t * (hi[1] - lo[1]))),
                  static_cast<int>(std::lround(lo[2] + t * (hi[2] - lo[2]))));
    return buf;
}

}  // namespace

std::string render_heatmap_svg(const std::vector<SurfaceRow>& rows) {
    if (rows.empty()) throw InvalidPlan("heatmap needs at least one cell");
    std::vector<double> xs, ys;
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -vmin;
    for (const auto& r : rows) {
        xs.push_back(r.x2);
        ys.push_back(r.y2);
        vmin = std::min(vmin, r.min_area);
        vmax = std::max(vmax, r.min_area);
    }
    const double dx = min_spacing(xs);
    const double dy = min_spacing(ys);
    const double x_lo = *std::min_element(xs.begin(), xs.end()) - 0.5 * dx;
    const double x_hi = *std::max_element(xs.begin(), xs.end()) + 0.5 * dx;
    const double y_lo = *std::min_element(ys.begin(), ys.end()) - 0.5 * dy;
    const double y_hi = *std::max_element(ys.begin(), ys.end()) + 0.5 * dy;

    constexpr double kLeft = 70.0, kTop = 30.0, kPlotW = 480.0, kPlotH = 400.0;
    constexpr double kLegendX = kLeft + kPlotW + 30.0, kLegendW = 20.0;
    const double sx = kPlotW / (x_hi - x_lo);
    const double sy = kPlotH / (y_hi - y_lo);
    auto px = [&](double x) { return kLeft + (x - x_lo) * sx; };
    auto py = [&](double y) { return kTop + (y_hi - y) * sy; };
    auto shade = [&](double v) { return vmax > vmin ? (v - vmin) / (vmax - vmin) : 0.0; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"680\" height=\"500\" viewBox=\"0 0 680 500\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"680\" height=\"500\" fill=\"white\"/>\n";
    svg << "<g id=\"cells\">\n";
    for (const auto& r : rows) {
        svg << "<rect class=\"cell\" x=\"" << fixed(px(r.x2 - 0.5 * dx)) << "\" y=\"" << fixed(py(r.y2 + 0.5 * dy))
            << "\" width=\"" << fixed(dx * sx) << "\" height=\"" << fixed(dy * sy) << "\" fill=\""
            << ramp_color(shade(r.min_area)) << "\"><title>" << g17(r.min_area) << "</title></rect>\n";
    }
    svg << "</g>\n";

    svg << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop) << "\" width=\"" << fixed(kPlotW)
        << "\" height=\"" << fixed(kPlotH) << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (int k = 0; k <= 4; ++k) {
        const double x = x_lo + (x_hi - x_lo) * k / 4.0;
        const double y = y_lo + (y_hi - y_lo) * k / 4.0;
        svg << "<text x=\"" << fixed(px(x)) << "\" y=\"" << fixed(kTop + kPlotH + 16.0)
            << "\" text-anchor=\"middle\">" << fixed(x, 4) << "</text>\n";
        svg << "<text x=\"" << fixed(kLeft - 6.0) << "\" y=\"" << fixed(py(y) + 4.0) << "\" text-anchor=\"end\">"
            << fixed(y, 4) << "</text>\n";
    }
    svg << "<text x=\"" << fixed(kLeft + 0.5 * kPlotW) << "\" y=\"" << fixed(kTop + kPlotH + 36.0)
        << "\" text-anchor=\"middle\">x₂</text>\n";
    svg << "<text x=\"18\" y=\"" << fixed(kTop + 0.5 * kPlotH) << "\" text-anchor=\"middle\">y₂</text>\n";
    svg << "</g>\n";

    svg << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    constexpr int kSteps = 20;
    for (int k = 0; k < kSteps; ++k) {
        const double t = (k + 0.5) / kSteps;
        const double y = kTop + kPlotH * (1.0 - static_cast<double>(k + 1) / kSteps);
        svg << "<rect class=\"legend\" x=\"" << fixed(kLegendX) << "\" y=\"" << fixed(y) << "\" width=\""
            << fixed(kLegendW) << "\" height=\"" << fixed(kPlotH / kSteps) << "\" fill=\"" << ramp_color(t)
            << "\"/>\n";
    }
    svg << "<text x=\"" << fixed(kLegendX + kLegendW + 4.0) << "\" y=\"" << fixed(kTop + kPlotH) << "\">"
        << fixed(vmin, 6) << "</text>\n";
    svg << "<text x=\"" << fixed(kLegendX + kLegendW + 4.0) << "\" y=\"" << fixed(kTop + 10.0) << "\">"
        << fixed(vmax, 6) << "</text>\n";
    svg << "</g>\n</svg>\n";
    return svg.str();
}

void render_heatmap_svg(const std::string& csv_in, const std::string& svg_out) {
    const auto rows = read_surface_csv(csv_in);
    const std::string svg = render_heatmap_svg(rows);
    std::ofstream out(svg_out);
    if (!out) throw InvalidPlan("cannot write '" + svg_out + "'");
    out << svg;
}

}  // namespace wormbound
