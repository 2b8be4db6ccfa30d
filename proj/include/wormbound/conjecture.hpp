#pragma once

#include <cstdint>

#include "wormbound/configuration.hpp"
#include "wormbound/search.hpp"

namespace wormbound {

/// Two-angle family in which a triangle vertex sits at F = (1, 0) and the
/// top-most vertices of the square and the triangle coincide.
struct PivotParams {
    double psi = 0.0;  ///< direction of the triangle edge leaving F, [pi/2, 5pi/6]
    double phi = 0.0;  ///< direction of the square edge leaving the shared top vertex, (pi, 3pi/2)

    friend bool operator==(const PivotParams&, const PivotParams&) = default;
};

inline constexpr double kPsiLo = kPi / 2.0;
inline constexpr double kPsiHi = 5.0 * kPi / 6.0;
inline constexpr double kPhiLo = kPi;
inline constexpr double kPhiHi = 1.5 * kPi;

bool valid_pivot(const PivotParams& p);

/// Throws InvalidInput when p is outside the pivot ranges.
Config pivot_config(const PivotParams& p);

struct ConjectureOptions {
    /// Zoom window half-width in steps of the current resolution.
    int window = 30;
};

struct ConjectureResult {
    SearchResult result;
    PivotParams pivot;
    double coarse_area = 0.0;
    std::uint32_t zoom_levels = 0;
};

/// Full (psi, phi) scan at coarse_step, then windows around the incumbent with
/// the step divided by 10 until it reaches final_step. Each window is
/// re-centred until the incumbent stops moving.
ConjectureResult conjecture_search(double coarse_step, double final_step, const ConjectureOptions& options = {});

}  // namespace wormbound
