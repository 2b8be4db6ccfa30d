#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wormbound/bounds.hpp"
#include "wormbound/conjecture.hpp"
#include "wormbound/search.hpp"

namespace wormbound {

/// Parses a plain number, or an angle with a trailing "deg" (converted to
/// radians). Throws InvalidInput.
double parse_number(std::string_view text, bool allow_deg = false);

/// "x1,y1,alpha,x2,y2,beta"; angles accept the deg suffix.
Config parse_config(std::string_view text);

nlohmann::json to_json(const Config& c);
nlohmann::json to_json(const DomainBox& b);
nlohmann::json to_json(const SearchPlan& plan);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ErrorBound& e);
nlohmann::json to_json(const BoundBreakdown& b);
nlohmann::json to_json(const ConjectureResult& r);

// Parsers throw InvalidPlan with a description of the offending field.
Config config_from_json(const nlohmann::json& j);
DomainBox box_from_json(const nlohmann::json& j);
SearchPlan plan_from_json(const nlohmann::json& j);
SearchResult result_from_json(const nlohmann::json& j);
Certificate certificate_from_json(const nlohmann::json& j);

SearchPlan load_plan(const std::string& path);

/// Header plus one row per non-empty cell:
/// x2,y2,min_area,x1,y1,alpha,x2_arg,y2_arg,beta
void write_surface_csv(const SurfaceGrid& grid, std::ostream& out);
void write_surface_csv(const SurfaceGrid& grid, const std::string& path);

struct SurfaceRow {
    double x2, y2, min_area;
    Config argmin;
};

/// Throws InvalidPlan naming the 1-based line of a malformed row, or when
/// there are no data rows.
std::vector<SurfaceRow> read_surface_csv(std::istream& in);
std::vector<SurfaceRow> read_surface_csv(const std::string& path);

/// One rectangle per row (class "cell"), colored linearly between the
/// smallest and largest min_area, with axis labels and a legend.
std::string render_heatmap_svg(const std::vector<SurfaceRow>& rows);
void render_heatmap_svg(const std::string& csv_in, const std::string& svg_out);

}  // namespace wormbound
