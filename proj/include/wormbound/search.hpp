#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "wormbound/configuration.hpp"

namespace wormbound {

/// One grid pass: coordinates step by d1, angles by d2, starting at the box's
/// lower corner.
struct Stage {
    DomainBox box;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// A plan stage either names its box or derives it from the previous best
/// ("auto": half-width two previous steps per coordinate).
struct PlanStage {
    std::optional<DomainBox> box;
    double d1 = 0.0;
    double d2 = 0.0;

    bool is_auto() const { return !box.has_value(); }
};

struct SearchPlan {
    std::vector<PlanStage> stages;
};

struct SearchResult {
    Config best;
    double area = std::numeric_limits<double>::infinity();
    std::uint64_t evaluations = 0;
    std::uint64_t pruned = 0;
    std::uint32_t stage_index = 0;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// True if (area_a, a) precedes (area_b, b): smaller area, then the
/// lexicographically smaller 6-tuple.
bool better_candidate(double area_a, const Config& a, double area_b, const Config& b);

struct SurfaceCell {
    double min_area = std::numeric_limits<double>::infinity();
    Config argmin;

    bool empty() const { return min_area == std::numeric_limits<double>::infinity(); }
    friend bool operator==(const SurfaceCell&, const SurfaceCell&) = default;
};

/// Per-(x2, y2) cell minima of the hull area.
class SurfaceGrid {
public:
    SurfaceGrid() = default;
    SurfaceGrid(Interval x2_range, Interval y2_range, std::size_t nx, std::size_t ny);

    const Interval& x2_range() const { return x2_range_; }
    const Interval& y2_range() const { return y2_range_; }
    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }

    std::size_t cell_x(double x2) const;
    std::size_t cell_y(double y2) const;
    Point cell_center(std::size_t i, std::size_t j) const;
    Interval cell_x_range(std::size_t i) const;
    Interval cell_y_range(std::size_t j) const;

    const SurfaceCell& at(std::size_t i, std::size_t j) const { return cells_[j * nx_ + i]; }
    SurfaceCell& at(std::size_t i, std::size_t j) { return cells_[j * nx_ + i]; }

    /// Keep (area, c) if it beats the cell's current minimum.
    void offer(std::size_t i, std::size_t j, double area, const Config& c);

    /// Smallest non-empty cell, with its indices; nullopt when all cells are empty.
    struct Minimum {
        std::size_t i, j;
        SurfaceCell cell;
    };
    std::optional<Minimum> global_min() const;

    friend bool operator==(const SurfaceGrid&, const SurfaceGrid&) = default;

private:
    Interval x2_range_{};
    Interval y2_range_{};
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    std::vector<SurfaceCell> cells_;
};

struct GridSearchOptions {
    /// Reject boxes that leave search_domain().
    bool enforce_domain = true;
    /// Skip pairs whose one-shape hull area already exceeds the incumbent.
    bool area_prune = true;
    /// Skip pairs whose analytic bound p(alpha, beta) exceeds the incumbent
    /// (only where both angles lie in the K1 window).
    bool bound_prune = true;
    /// Candidate carried in from an earlier stage; it competes for the minimum.
    std::optional<Config> incumbent;
};

/// Number of grid nodes lo, lo + step, ... not exceeding hi (at least one).
std::size_t axis_count(const Interval& iv, double step);
std::vector<double> grid_axis(const Interval& iv, double step);

/// Throws InvalidPlan for non-positive steps, malformed boxes, or (when
/// enforce_domain) boxes outside search_domain().
void validate_stage(const Stage& stage, bool enforce_domain = true);

/// Minimum of mu over all K2 grid nodes of the stage. OpenMP parallel; the
/// result, including the evaluation and prune counts, does not depend on the
/// thread count. When `surface` is given every node also updates its
/// (x2, y2) cell.
SearchResult grid_search(const Stage& stage, SurfaceGrid* surface = nullptr, const GridSearchOptions& options = {});

/// Throws InvalidPlan if the plan is empty, starts with an auto stage, or
/// has an invalid stage.
void validate_plan(const SearchPlan& plan);

/// Box of an auto stage centered on `best`, clamped to search_domain().
DomainBox auto_box(const Config& best, double prev_d1, double prev_d2);

/// Runs the stages in order; each stage starts from the previous best, so the
/// area never increases. `surface`, when given, is rebuilt for the final stage
/// with one cell per (x2, y2) node.
SearchResult run_plan(const SearchPlan& plan, SurfaceGrid* surface = nullptr);

/// Surface grid spanning box.x2 x box.y2 with nx x ny cells.
SurfaceGrid surface_min(const DomainBox& box, std::size_t nx, std::size_t ny, double d1, double d2,
                        const GridSearchOptions& options = {});

}  // namespace wormbound
