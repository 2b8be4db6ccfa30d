#include "wormbound/conjecture.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include <omp.h>

#include "wormbound/error.hpp"

namespace wormbound {

namespace {

struct PivotCandidate {
    double area = std::numeric_limits<double>::infinity();
    Config config;
    PivotParams pivot;

    void offer(const PivotCandidate& o) {
        if (better_candidate(o.area, o.config, area, config)) *this = o;
    }
};

PivotCandidate evaluate(const PivotParams& p) {
    const Config c = pivot_config(p);
    return {mu(c), c, p};
}

// Scan psi = psi0 + i*step (i in [i_lo, i_hi]) x phi = phi0 + j*step
// (j in [j_lo, j_hi]), skipping invalid pivots. Rows run in parallel and are
// reduced in row order.
PivotCandidate scan(double psi0, double phi0, double step, long i_lo, long i_hi, long j_lo, long j_hi,
                    std::uint64_t& evaluations) {
    const long rows = i_hi - i_lo + 1;
    std::vector<PivotCandidate> row_best(static_cast<std::size_t>(std::max(rows, 0L)));
    std::vector<std::uint64_t> row_evals(row_best.size(), 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (long r = 0; r < rows; ++r) {
        const double psi = psi0 + static_cast<double>(i_lo + r) * step;
        PivotCandidate best;
        std::uint64_t n = 0;
        for (long j = j_lo; j <= j_hi; ++j) {
            const PivotParams p{psi, phi0 + static_cast<double>(j) * step};
            if (!valid_pivot(p)) continue;
            best.offer(evaluate(p));
            ++n;
        }
        row_best[static_cast<std::size_t>(r)] = best;
        row_evals[static_cast<std::size_t>(r)] = n;
    }
    PivotCandidate best;
    for (std::size_t r = 0; r < row_best.size(); ++r) {
        best.offer(row_best[r]);
        evaluations += row_evals[r];
    }
    return best;
}

}  // namespace

bool valid_pivot(const PivotParams& p) {
    return p.psi >= kPsiLo && p.psi <= kPsiHi && p.phi > kPhiLo && p.phi < kPhiHi;
}

Config pivot_config(const PivotParams& p) {
    if (!valid_pivot(p)) {
        throw InvalidInput("pivot_config: need psi in [pi/2, 5pi/6] and phi in (pi, 3pi/2)");
    }
    const Point f = kSegmentEnd;
    const double s = kTriangleSide;
    const std::array<Point, 3> tri{
        f,
        Point{f.x + s * std::cos(p.psi), f.y + s * std::sin(p.psi)},
        Point{f.x + s * std::cos(p.psi + kPi / 3.0), f.y + s * std::sin(p.psi + kPi / 3.0)},
    };
    Point top = tri[0];
    for (const Point& v : tri) {
        if (v.y > top.y || (v.y == top.y && v.x > top.x)) top = v;
    }

    const double q = kSquareSide;
    const Point u{q * std::cos(p.phi), q * std::sin(p.phi)};
    const Point w{q * std::cos(p.phi + kPi / 2.0), q * std::sin(p.phi + kPi / 2.0)};
    const std::array<Point, 4> sq{
        top,
        Point{top.x + u.x, top.y + u.y},
        Point{top.x + u.x + w.x, top.y + u.y + w.y},
        Point{top.x + w.x, top.y + w.y},
    };

    const ShapePose sp = recover_pose(sq, kSquarePeriod);
    const ShapePose tp = recover_pose(tri, kTrianglePeriod);
    return {sp.cx, sp.cy, sp.angle, tp.cx, tp.cy, tp.angle};
}

ConjectureResult conjecture_search(double coarse_step, double final_step, const ConjectureOptions& options) {
    if (!(final_step > 0.0) || !(final_step <= coarse_step) || !std::isfinite(coarse_step)) {
        throw InvalidInput("conjecture_search: need 0 < final_step <= coarse_step");
    }
    if (coarse_step > kPhiHi - kPhiLo) throw InvalidInput("conjecture_search: coarse_step too large");
    if (options.window < 1) throw InvalidInput("conjecture_search: window must be at least 1");

    std::uint64_t evaluations = 0;
    const long psi_nodes = static_cast<long>(std::floor((kPsiHi - kPsiLo) / coarse_step + 1e-9));
    const long phi_nodes = static_cast<long>(std::ceil((kPhiHi - kPhiLo) / coarse_step));
    PivotCandidate best = scan(kPsiLo, kPhiLo, coarse_step, 0, psi_nodes, 1, phi_nodes, evaluations);
    if (best.area == std::numeric_limits<double>::infinity()) {
        throw InvalidInput("conjecture_search: coarse grid contains no valid pivot");
    }

    ConjectureResult out;
    out.coarse_area = best.area;
    double step = coarse_step;
    const long w = options.window;
    constexpr int kMaxRecentres = 10000;
    while (step > final_step * (1.0 + 1e-9)) {
        step /= 10.0;
        ++out.zoom_levels;
        for (int r = 0; r < kMaxRecentres; ++r) {
            PivotCandidate window = scan(best.pivot.psi, best.pivot.phi, step, -w, w, -w, w, evaluations);
            if (!better_candidate(window.area, window.config, best.area, best.config)) break;
            best = window;
        }
    }

    out.pivot = best.pivot;
    out.result.best = best.config;
    out.result.area = best.area;
    out.result.evaluations = evaluations;
    out.result.pruned = 0;
    out.result.stage_index = out.zoom_levels;
    return out;
}

}  // namespace wormbound
