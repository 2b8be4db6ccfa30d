#pragma once

#include "wormbound/bounds.hpp"
#include "wormbound/search.hpp"

/// Serial, unpruned counterparts of the parallel kernels. They exist to check
/// the kernels and to benchmark against; production paths never call them.
namespace wormbound::reference {

Certificate certify_theorem(double target, CertifyMethod method, const CertifyOptions& options = {});

/// Evaluates mu at every K2 node with no pruning. `evaluations` counts K2
/// nodes; `pruned` is always 0.
SearchResult grid_search(const Stage& stage, SurfaceGrid* surface = nullptr, bool enforce_domain = true);

}  // namespace wormbound::reference
