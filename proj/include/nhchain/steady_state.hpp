#pragma once

#include "nhchain/krylov.hpp"

namespace nhchain {

struct SolverOptions {
  SolverMethod method = SolverMethod::Auto;
  /// Auto picks the dense path up to this many sites and Krylov above it.
  int auto_dense_max_sites = 10;
  KrylovOptions krylov;
};

SolverMethod resolve_method(const SolverOptions& opts, int num_sites);

/// Builds H for `p` and returns its steady state using the selected path.
SteadyState solve_steady_state(const ChainParams& p, const SolverOptions& opts = {});

}  // namespace nhchain
