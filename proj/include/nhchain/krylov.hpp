#pragma once

#include <cstdint>

#include "nhchain/spectral.hpp"

namespace nhchain {

struct EvolveOptions {
  double tol = 1e-12;          ///< local error per substep, relative to the current norm
  int krylov_dim = 30;
  int max_substeps = 100000;
};

/// exp(-i H t) psi0 by Arnoldi projection with adaptive substeps. The norm is
/// not restored; it decays as the non-positive imaginary spectrum dictates.
StateVector evolve(const SparseOperator& h, const StateVector& psi0, double t,
                   const EvolveOptions& opts = {});

inline constexpr std::uint64_t kDefaultSeed = 1234567;

/// Unit-norm state with independent standard normal real and imaginary parts,
/// drawn from mt19937_64 seeded with `seed`.
StateVector random_state(std::size_t dim, std::uint64_t seed);

struct KrylovOptions {
  double period = 0.0;  ///< propagation time per iteration; <= 0 means 5 / decay_rate
  double tol = 1e-10;   ///< stop when phase-aligned successive iterates differ by less
  int max_iters = 10000;
  std::uint64_t seed = kDefaultSeed;
  EvolveOptions evolve;
};

/// Power iteration on the propagator exp(-i H period), carried as a two-vector
/// block so that the runner-up eigenvalue (and hence the gap) is available
/// from a 2x2 Rayleigh-Ritz projection. Throws ConvergenceError after
/// max_iters iterations.
SteadyState steady_state_krylov(const SparseOperator& h, const ChainParams& p,
                                const KrylovOptions& opts = {});

}  // namespace nhchain
