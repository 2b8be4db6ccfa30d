#include "wormbound/reference.hpp"

#include <cmath>
#include <limits>

#include "certify_cell.hpp"
#include "wormbound/error.hpp"

namespace wormbound::reference {

namespace {

void descend(const detail::AngleCell& cell, double target, const CertifyOptions& opt, detail::BnbTally& tally) {
    ++tally.examined;
    const auto outcome = detail::judge_cell(cell, target, opt);
    if (outcome.verdict != detail::CellVerdict::Split) {
        tally.leaf(cell, outcome);
        return;
    }
    const auto [lo, hi] = detail::split_cell(cell);
    descend(lo, target, opt, tally);
    descend(hi, target, opt, tally);
}

}  // namespace

Certificate certify_theorem(double target, CertifyMethod method, const CertifyOptions& opt) {
    if (!(target > 0.0 && target <= 0.25)) throw InvalidInput("certify_theorem: target must lie in (0, 0.25]");
    if (!(opt.resolution > 0.0)) throw InvalidInput("certify_theorem: resolution must be positive");

    Certificate cert;
    cert.target = target;
    cert.method = method;
    if (method == CertifyMethod::FullGrid) {
        const auto na = static_cast<std::uint64_t>(std::max(1.0, std::ceil(kK1Alpha.width() / opt.resolution)));
        const auto nb = static_cast<std::uint64_t>(std::max(1.0, std::ceil(kK1Beta.width() / opt.resolution)));
        const double sa = kK1Alpha.width() / static_cast<double>(na);
        const double sb = kK1Beta.width() / static_cast<double>(nb);
        double lowest = std::numeric_limits<double>::infinity();
        for (std::uint64_t i = 0; i < na; ++i) {
            for (std::uint64_t j = 0; j < nb; ++j) {
                const double a = kK1Alpha.lo + (static_cast<double>(i) + 0.5) * sa;
                const double b = kK1Beta.lo + (static_cast<double>(j) + 0.5) * sb;
                lowest = std::min(lowest, p_bound(a, b) - kLipschitzP * 0.5 * (sa + sb));
            }
        }
        cert.certified_min = lowest;
        cert.cells_examined = na * nb;
        cert.max_depth = 0;
        cert.status = lowest >= target ? CertifyStatus::Certified : CertifyStatus::Failed;
        return cert;
    }

    detail::BnbTally tally;
    descend(detail::k1_root_cell(), target, opt, tally);
    cert.certified_min = tally.min_lower_bound;
    cert.cells_examined = tally.examined;
    cert.max_depth = tally.max_depth;
    cert.status = tally.failed ? CertifyStatus::Failed : CertifyStatus::Certified;
    return cert;
}

SearchResult grid_search(const Stage& stage, SurfaceGrid* surface, bool enforce_domain) {
    validate_stage(stage, enforce_domain);
    const auto x1s = grid_axis(stage.box.x1, stage.d1);
    const auto y1s = grid_axis(stage.box.y1, stage.d1);
    const auto as = grid_axis(stage.box.alpha, stage.d2);
    const auto x2s = grid_axis(stage.box.x2, stage.d1);
    const auto y2s = grid_axis(stage.box.y2, stage.d1);
    const auto bs = grid_axis(stage.box.beta, stage.d2);

    SearchResult r;
    for (double x1 : x1s)
        for (double y1 : y1s)
            for (double a : as)
                for (double x2 : x2s)
                    for (double y2 : y2s)
                        for (double b : bs) {
                            const Config c{x1, y1, a, x2, y2, b};
                            if (!in_K2(c)) continue;
                            const double area = mu(c);
                            ++r.evaluations;
                            if (better_candidate(area, c, r.area, r.best)) {
                                r.area = area;
                                r.best = c;
                            }
                            if (surface) surface->offer(surface->cell_x(x2), surface->cell_y(y2), area, c);
                        }
    if (r.evaluations == 0) throw InvalidPlan("stage contains no grid node satisfying the K2 conditions");
    return r;
}

}  // namespace wormbound::reference
