#include "wormbound/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include <omp.h>

#include "wormbound/bounds.hpp"
#include "wormbound/error.hpp"

namespace wormbound {

namespace {

constexpr std::size_t kChunkSize = 16;

struct SquareSlice {
    std::array<Point, 6> sorted;  // E, F and the four vertices
    double area;                  // hull of segment and square
    double x1, y1, alpha;
    std::uint32_t alpha_index;
};

struct TriangleSlice {
    std::array<Point, 3> sorted;
    double area;  // hull of segment and triangle
    double x2, y2, beta;
    std::uint32_t beta_index;
    std::uint32_t cell;
};

struct Best {
    double area = std::numeric_limits<double>::infinity();
    Config config;
    std::uint64_t evaluations = 0;
    std::uint64_t pruned = 0;

    void offer(double a, const Config& c) {
        if (better_candidate(a, c, area, config)) {
            area = a;
            config = c;
        }
    }

    void merge(const Best& o) {
        offer(o.area, o.config);
        evaluations += o.evaluations;
        pruned += o.pruned;
    }
};

std::vector<SquareSlice> square_slices(const Stage& st) {
    const auto xs = grid_axis(st.box.x1, st.d1);
    const auto ys = grid_axis(st.box.y1, st.d1);
    const auto as = grid_axis(st.box.alpha, st.d2);
    std::vector<SquareSlice> out;
    for (double x : xs) {
        for (double y : ys) {
            for (std::size_t k = 0; k < as.size(); ++k) {
                const auto v = square_vertices(x, y, as[k]);
                if (!shape_in_K2(v)) continue;
                SquareSlice s{{kSegmentStart, kSegmentEnd, v[0], v[1], v[2], v[3]}, 0.0, x, y, as[k],
                              static_cast<std::uint32_t>(k)};
                std::sort(s.sorted.begin(), s.sorted.end(), lex_less);
                s.area = sorted_hull_area(s.sorted);
                out.push_back(s);
            }
        }
    }
    // Ascending one-shape area lets the inner loop stop at the first slice
    // that cannot beat the incumbent.
    std::stable_sort(out.begin(), out.end(),
                     [](const SquareSlice& a, const SquareSlice& b) { return a.area < b.area; });
    return out;
}

std::vector<TriangleSlice> triangle_slices(const Stage& st, const SurfaceGrid* surface) {
    const auto xs = grid_axis(st.box.x2, st.d1);
    const auto ys = grid_axis(st.box.y2, st.d1);
    const auto bs = grid_axis(st.box.beta, st.d2);
    std::vector<TriangleSlice> out;
    for (double x : xs) {
        for (double y : ys) {
            std::uint32_t cell = 0;
            if (surface) {
                cell = static_cast<std::uint32_t>(surface->cell_y(y) * surface->nx() + surface->cell_x(x));
            }
            for (std::size_t k = 0; k < bs.size(); ++k) {
                const auto v = triangle_vertices(x, y, bs[k]);
                if (!shape_in_K2(v)) continue;
                TriangleSlice t{{v[0], v[1], v[2]}, 0.0, x, y, bs[k], static_cast<std::uint32_t>(k), cell};
                std::sort(t.sorted.begin(), t.sorted.end(), lex_less);
                std::array<Point, 5> with_segment{kSegmentStart, kSegmentEnd, v[0], v[1], v[2]};
                std::sort(with_segment.begin(), with_segment.end(), lex_less);
                t.area = sorted_hull_area(with_segment);
                out.push_back(t);
            }
        }
    }
    return out;
}

// p(alpha, beta) per (alpha node, beta node); 0 where the bound does not apply.
std::vector<double> angle_bound_table(const Stage& st, bool enabled) {
    const auto as = grid_axis(st.box.alpha, st.d2);
    const auto bs = grid_axis(st.box.beta, st.d2);
    std::vector<double> table(as.size() * bs.size(), 0.0);
    if (!enabled) return table;
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = 0; j < bs.size(); ++j) {
            if (kK1Alpha.contains(as[i]) && kK1Beta.contains(bs[j])) {
                table[i * bs.size() + j] = p_bound(as[i], bs[j]);
            }
        }
    }
    return table;
}

double pair_area(const SquareSlice& s, const TriangleSlice& t) {
    std::array<Point, 9> merged;
    std::merge(s.sorted.begin(), s.sorted.end(), t.sorted.begin(), t.sorted.end(), merged.begin(), lex_less);
    return sorted_hull_area(merged);
}

struct ScanContext {
    const std::vector<SquareSlice>& squares;
    const std::vector<double>& bound_table;
    std::size_t beta_count;
    const GridSearchOptions& options;
};

// Scan one triangle slice against all square slices. Pruning is strict so
// every node tying the running minimum is still evaluated.
void scan_triangle(const ScanContext& ctx, const TriangleSlice& t, Best& best) {
    const auto n = static_cast<std::uint64_t>(ctx.squares.size());
    if (ctx.options.area_prune && t.area > best.area) {
        best.pruned += n;
        return;
    }
    for (std::size_t k = 0; k < ctx.squares.size(); ++k) {
        const SquareSlice& s = ctx.squares[k];
        if (ctx.options.area_prune && s.area > best.area) {
            best.pruned += n - k;
            return;
        }
        if (ctx.options.bound_prune &&
            ctx.bound_table[s.alpha_index * ctx.beta_count + t.beta_index] > best.area) {
            ++best.pruned;
            continue;
        }
        const double area = pair_area(s, t);
        ++best.evaluations;
        if (area <= best.area) best.offer(area, {s.x1, s.y1, s.alpha, t.x2, t.y2, t.beta});
    }
}

}  // namespace

bool better_candidate(double area_a, const Config& a, double area_b, const Config& b) {
    if (area_a != area_b) return area_a < area_b;
    return tuple_less(a, b);
}

SurfaceGrid::SurfaceGrid(Interval x2_range, Interval y2_range, std::size_t nx, std::size_t ny)
    : x2_range_(x2_range), y2_range_(y2_range), nx_(nx), ny_(ny), cells_(nx * ny) {
    if (nx == 0 || ny == 0) throw InvalidInput("SurfaceGrid: cell counts must be positive");
    if (!(x2_range.lo <= x2_range.hi) || !(y2_range.lo <= y2_range.hi)) {
        throw InvalidInput("SurfaceGrid: malformed range");
    }
}

namespace {
std::size_t cell_of(double v, const Interval& iv, std::size_t n) {
    if (iv.width() <= 0.0) return 0;
    const double t = std::floor((v - iv.lo) / iv.width() * static_cast<double>(n));
    if (t <= 0.0) return 0;
    return std::min(n - 1, static_cast<std::size_t>(t));
}
}  // namespace

std::size_t SurfaceGrid::cell_x(double x2) const { return cell_of(x2, x2_range_, nx_); }
std::size_t SurfaceGrid::cell_y(double y2) const { return cell_of(y2, y2_range_, ny_); }

Interval SurfaceGrid::cell_x_range(std::size_t i) const {
    const double w = x2_range_.width() / static_cast<double>(nx_);
    return {x2_range_.lo + w * static_cast<double>(i), x2_range_.lo + w * static_cast<double>(i + 1)};
}

Interval SurfaceGrid::cell_y_range(std::size_t j) const {
    const double w = y2_range_.width() / static_cast<double>(ny_);
    return {y2_range_.lo + w * static_cast<double>(j), y2_range_.lo + w * static_cast<double>(j + 1)};
}

Point SurfaceGrid::cell_center(std::size_t i, std::size_t j) const {
    const Interval xr = cell_x_range(i);
    const Interval yr = cell_y_range(j);
    return {0.5 * (xr.lo + xr.hi), 0.5 * (yr.lo + yr.hi)};
}

void SurfaceGrid::offer(std::size_t i, std::size_t j, double area, const Config& c) {
    SurfaceCell& cell = at(i, j);
    if (better_candidate(area, c, cell.min_area, cell.argmin)) {
        cell.min_area = area;
        cell.argmin = c;
    }
}

std::optional<SurfaceGrid::Minimum> SurfaceGrid::global_min() const {
    std::optional<Minimum> best;
    for (std::size_t j = 0; j < ny_; ++j) {
        for (std::size_t i = 0; i < nx_; ++i) {
            const SurfaceCell& c = at(i, j);
            if (c.empty()) continue;
            if (!best || better_candidate(c.min_area, c.argmin, best->cell.min_area, best->cell.argmin)) {
                best = Minimum{i, j, c};
            }
        }
    }
    return best;
}

std::size_t axis_count(const Interval& iv, double step) {
    const double span = iv.hi - iv.lo;
    if (span <= 0.0) return 1;
    return static_cast<std::size_t>(std::floor(span / step + 1e-9)) + 1;
}

std::vector<double> grid_axis(const Interval& iv, double step) {
    const std::size_t n = axis_count(iv, step);
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = iv.lo + static_cast<double>(k) * step;
    return v;
}

void validate_stage(const Stage& stage, bool enforce_domain) {
    if (!(stage.d1 > 0.0) || !(stage.d2 > 0.0) || !std::isfinite(stage.d1) || !std::isfinite(stage.d2)) {
        throw InvalidPlan("stage grid steps d1, d2 must be positive and finite");
    }
    if (!stage.box.well_formed()) throw InvalidPlan("stage box must have finite intervals with lo <= hi");
    if (enforce_domain && !search_domain().contains(stage.box)) {
        throw InvalidPlan("stage box leaves the search domain");
    }
    const auto axes = stage.box.as_array();
    double nodes = 1.0;
    for (std::size_t i = 0; i < 6; ++i) {
        nodes *= static_cast<double>(axis_count(axes[i], (i == 2 || i == 5) ? stage.d2 : stage.d1));
    }
    if (nodes > 1e15) throw InvalidPlan("stage has too many grid nodes");
}

SearchResult grid_search(const Stage& stage, SurfaceGrid* surface, const GridSearchOptions& options) {
    validate_stage(stage, options.enforce_domain);

    const auto squares = square_slices(stage);
    auto triangles = triangle_slices(stage, surface);
    const auto table = angle_bound_table(stage, options.bound_prune);
    const ScanContext ctx{squares, table, axis_count(stage.box.beta, stage.d2), options};

    Best global;
    if (options.incumbent) global.offer(mu(*options.incumbent), *options.incumbent);

    // Chunks are fixed independent of the thread count: one chunk per surface
    // cell, otherwise runs of kChunkSize triangle slices seeded by a
    // deterministic pre-pass.
    std::vector<std::size_t> chunk_start;
    if (surface) {
        std::stable_sort(triangles.begin(), triangles.end(), [](const TriangleSlice& a, const TriangleSlice& b) {
            return a.cell != b.cell ? a.cell < b.cell : a.area < b.area;
        });
        for (std::size_t k = 0; k < triangles.size(); ++k) {
            if (k == 0 || triangles[k].cell != triangles[k - 1].cell) chunk_start.push_back(k);
        }
    } else {
        if (!triangles.empty() && !squares.empty()) {
            const auto seed = std::min_element(triangles.begin(), triangles.end(),
                                               [](const TriangleSlice& a, const TriangleSlice& b) {
                                                   return a.area < b.area;
                                               });
            scan_triangle(ctx, *seed, global);
        }
        for (std::size_t k = 0; k < triangles.size(); k += kChunkSize) chunk_start.push_back(k);
    }
    chunk_start.push_back(triangles.size());

    const auto chunks = static_cast<std::int64_t>(chunk_start.size() - 1);
    std::vector<Best> partial(static_cast<std::size_t>(std::max<std::int64_t>(chunks, 0)));
    const double seed_area = surface ? std::numeric_limits<double>::infinity() : global.area;
    const Config seed_config = global.config;

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
        Best local;
        local.area = seed_area;
        local.config = seed_config;
        const auto cs = static_cast<std::size_t>(c);
        for (std::size_t k = chunk_start[cs]; k < chunk_start[cs + 1]; ++k) {
            scan_triangle(ctx, triangles[k], local);
        }
        partial[cs] = local;
    }

    for (std::size_t c = 0; c < partial.size(); ++c) {
        global.merge(partial[c]);
        if (surface) {
            const std::size_t cell = triangles[chunk_start[c]].cell;
            surface->offer(cell % surface->nx(), cell / surface->nx(), partial[c].area, partial[c].config);
        }
    }

    if (global.area == std::numeric_limits<double>::infinity()) {
        throw InvalidPlan("stage contains no grid node satisfying the K2 conditions");
    }
    SearchResult r;
    r.best = global.config;
    r.area = global.area;
    r.evaluations = global.evaluations;
    r.pruned = global.pruned;
    return r;
}

void validate_plan(const SearchPlan& plan) {
    if (plan.stages.empty()) throw InvalidPlan("plan has no stages");
    if (plan.stages.front().is_auto()) throw InvalidPlan("the first stage needs an explicit box");
    for (std::size_t i = 0; i < plan.stages.size(); ++i) {
        const PlanStage& ps = plan.stages[i];
        try {
            if (ps.is_auto()) {
                if (!(ps.d1 > 0.0) || !(ps.d2 > 0.0)) throw InvalidPlan("grid steps must be positive");
            } else {
                validate_stage({*ps.box, ps.d1, ps.d2});
            }
        } catch (const InvalidPlan& e) {
            throw InvalidPlan("stage " + std::to_string(i) + ": " + e.what());
        }
    }
}

DomainBox auto_box(const Config& best, double prev_d1, double prev_d2) {
    const auto center = best.as_array();
    const auto domain = search_domain().as_array();
    std::array<Interval, 6> iv;
    for (std::size_t i = 0; i < 6; ++i) {
        const double half = 2.0 * ((i == 2 || i == 5) ? prev_d2 : prev_d1);
        iv[i] = {std::max(domain[i].lo, center[i] - half), std::min(domain[i].hi, center[i] + half)};
    }
    return DomainBox::from_array(iv);
}

namespace {

// One cell per (x2, y2) node, with the node at the cell center.
SurfaceGrid node_centered_surface(const Stage& stage) {
    const std::size_t nx = axis_count(stage.box.x2, stage.d1);
    const std::size_t ny = axis_count(stage.box.y2, stage.d1);
    const double half = 0.5 * stage.d1;
    const double x_last = stage.box.x2.lo + stage.d1 * static_cast<double>(nx - 1);
    const double y_last = stage.box.y2.lo + stage.d1 * static_cast<double>(ny - 1);
    return SurfaceGrid({stage.box.x2.lo - half, x_last + half}, {stage.box.y2.lo - half, y_last + half}, nx, ny);
}

}  // namespace

SearchResult run_plan(const SearchPlan& plan, SurfaceGrid* surface) {
    validate_plan(plan);
    SearchResult result;
    std::uint64_t evaluations = 0;
    std::uint64_t pruned = 0;
    for (std::size_t i = 0; i < plan.stages.size(); ++i) {
        const PlanStage& ps = plan.stages[i];
        const PlanStage& prev = plan.stages[i == 0 ? 0 : i - 1];
        Stage stage{ps.is_auto() ? auto_box(result.best, prev.d1, prev.d2) : *ps.box, ps.d1, ps.d2};

        GridSearchOptions opt;
        if (i > 0) opt.incumbent = result.best;
        SurfaceGrid* stage_surface = nullptr;
        if (surface && i + 1 == plan.stages.size()) {
            *surface = node_centered_surface(stage);
            stage_surface = surface;
        }
        SearchResult r = grid_search(stage, stage_surface, opt);
        evaluations += r.evaluations;
        pruned += r.pruned;
        if (i == 0 || better_candidate(r.area, r.best, result.area, result.best)) {
            r.stage_index = static_cast<std::uint32_t>(i);
            result = r;
        }
    }
    result.evaluations = evaluations;
    result.pruned = pruned;
    return result;
}

SurfaceGrid surface_min(const DomainBox& box, std::size_t nx, std::size_t ny, double d1, double d2,
                        const GridSearchOptions& options) {
    SurfaceGrid grid(box.x2, box.y2, nx, ny);
    grid_search({box, d1, d2}, &grid, options);
    return grid;
}

}  // namespace wormbound
