#include <cmath>
#include <limits>
#include <vector>

#include <omp.h>

#include "certify_cell.hpp"
#include "wormbound/bounds.hpp"
#include "wormbound/error.hpp"

namespace wormbound {

namespace {

constexpr std::uint64_t kMaxGridCells = 4'000'000'000ULL;
constexpr std::size_t kParallelFrontier = 512;

void validate(double target, const CertifyOptions& opt) {
    if (!(target > 0.0 && target <= 0.25)) throw InvalidInput("certify_theorem: target must lie in (0, 0.25]");
    if (!(opt.resolution > 0.0) || !std::isfinite(opt.resolution)) {
        throw InvalidInput("certify_theorem: resolution must be positive");
    }
}

Certificate certify_full_grid(double target, const CertifyOptions& opt) {
    const auto na = static_cast<std::int64_t>(std::max(1.0, std::ceil(kK1Alpha.width() / opt.resolution)));
    const auto nb = static_cast<std::int64_t>(std::max(1.0, std::ceil(kK1Beta.width() / opt.resolution)));
    if (static_cast<double>(na) * static_cast<double>(nb) > static_cast<double>(kMaxGridCells)) {
        throw InvalidInput("certify_theorem: resolution too fine for a full grid, use bnb");
    }
    const double sa = kK1Alpha.width() / static_cast<double>(na);
    const double sb = kK1Beta.width() / static_cast<double>(nb);

    double min_center = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : min_center) schedule(static)
    for (std::int64_t i = 0; i < na; ++i) {
        const double a = kK1Alpha.lo + (static_cast<double>(i) + 0.5) * sa;
        for (std::int64_t j = 0; j < nb; ++j) {
            const double b = kK1Beta.lo + (static_cast<double>(j) + 0.5) * sb;
            min_center = std::min(min_center, p_bound(a, b));
        }
    }

    Certificate cert;
    cert.target = target;
    cert.method = CertifyMethod::FullGrid;
    cert.certified_min = min_center - kLipschitzP * 0.5 * (sa + sb);
    cert.cells_examined = static_cast<std::uint64_t>(na) * static_cast<std::uint64_t>(nb);
    cert.max_depth = 0;
    cert.status = cert.certified_min >= target ? CertifyStatus::Certified : CertifyStatus::Failed;
    return cert;
}

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

Certificate certify_branch_and_bound(double target, const CertifyOptions& opt) {
    detail::BnbTally total;

    // Breadth-first expansion until there is enough independent work, then
    // depth-first within each frontier cell in parallel. The leaf set is the
    // same as a single depth-first traversal from the root.
    std::vector<detail::AngleCell> frontier{detail::k1_root_cell()};
    while (!frontier.empty() && frontier.size() < kParallelFrontier) {
        std::vector<detail::AngleCell> next;
        next.reserve(2 * frontier.size());
        for (const auto& cell : frontier) {
            ++total.examined;
            const auto outcome = detail::judge_cell(cell, target, opt);
            if (outcome.verdict != detail::CellVerdict::Split) {
                total.leaf(cell, outcome);
                continue;
            }
            const auto [lo, hi] = detail::split_cell(cell);
            next.push_back(lo);
            next.push_back(hi);
        }
        frontier = std::move(next);
    }

    const auto n = static_cast<std::int64_t>(frontier.size());
    std::vector<detail::BnbTally> partial(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        descend(frontier[static_cast<std::size_t>(i)], target, opt, partial[static_cast<std::size_t>(i)]);
    }
    for (const auto& t : partial) total.merge(t);

    Certificate cert;
    cert.target = target;
    cert.method = CertifyMethod::BranchAndBound;
    cert.certified_min = total.min_lower_bound;
    cert.cells_examined = total.examined;
    cert.max_depth = total.max_depth;
    cert.status = total.failed ? CertifyStatus::Failed : CertifyStatus::Certified;
    return cert;
}

}  // namespace

Certificate certify_theorem(double target, CertifyMethod method, const CertifyOptions& options) {
    validate(target, options);
    return method == CertifyMethod::FullGrid ? certify_full_grid(target, options)
                                             : certify_branch_and_bound(target, options);
}

}  // namespace wormbound
