#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>

#include "wormbound/bounds.hpp"
#include "wormbound/configuration.hpp"

namespace wormbound::detail {

struct AngleCell {
    double alpha_lo, alpha_hi, beta_lo, beta_hi;
    std::uint32_t depth;
};

inline AngleCell k1_root_cell() { return {kK1Alpha.lo, kK1Alpha.hi, kK1Beta.lo, kK1Beta.hi, 0}; }

enum class CellVerdict { Cleared, Witness, Exhausted, Split };

struct CellOutcome {
    CellVerdict verdict;
    double lower_bound;
};

/// Lower bound of p on the cell from its center value and Lipschitz slack.
inline CellOutcome judge_cell(const AngleCell& c, double target, const CertifyOptions& opt) {
    const double sa = c.alpha_hi - c.alpha_lo;
    const double sb = c.beta_hi - c.beta_lo;
    const double center = p_bound(0.5 * (c.alpha_lo + c.alpha_hi), 0.5 * (c.beta_lo + c.beta_hi));
    const double lb = center - kLipschitzP * 0.5 * (sa + sb);
    if (lb >= target) return {CellVerdict::Cleared, lb};
    if (center < target) return {CellVerdict::Witness, lb};
    if (c.depth >= opt.max_depth || std::max(sa, sb) < opt.resolution) return {CellVerdict::Exhausted, lb};
    return {CellVerdict::Split, lb};
}

/// Halve the longer side; ties halve alpha. Low half first.
inline std::pair<AngleCell, AngleCell> split_cell(const AngleCell& c) {
    AngleCell lo = c;
    AngleCell hi = c;
    lo.depth = hi.depth = c.depth + 1;
    if (c.alpha_hi - c.alpha_lo >= c.beta_hi - c.beta_lo) {
        const double mid = 0.5 * (c.alpha_lo + c.alpha_hi);
        lo.alpha_hi = mid;
        hi.alpha_lo = mid;
    } else {
        const double mid = 0.5 * (c.beta_lo + c.beta_hi);
        lo.beta_hi = mid;
        hi.beta_lo = mid;
    }
    return {lo, hi};
}

/// Partial branch-and-bound tally; merging is associative and commutative.
struct BnbTally {
    std::uint64_t examined = 0;
    double min_lower_bound = std::numeric_limits<double>::infinity();
    std::uint32_t max_depth = 0;
    bool failed = false;

    void leaf(const AngleCell& c, const CellOutcome& o) {
        min_lower_bound = std::min(min_lower_bound, o.lower_bound);
        max_depth = std::max(max_depth, c.depth);
        if (o.verdict != CellVerdict::Cleared) failed = true;
    }

    void merge(const BnbTally& other) {
        examined += other.examined;
        min_lower_bound = std::min(min_lower_bound, other.min_lower_bound);
        max_depth = std::max(max_depth, other.max_depth);
        failed = failed || other.failed;
    }
};


}  // namespace wormbound::detail
