#include "nhchain/steady_state.hpp"

namespace nhchain {

SolverMethod resolve_method(const SolverOptions& opts, int num_sites) {
  if (opts.method != SolverMethod::Auto) return opts.method;
  return num_sites <= opts.auto_dense_max_sites ? SolverMethod::Dense : SolverMethod::Krylov;
}

SteadyState solve_steady_state(const ChainParams& p, const SolverOptions& opts) {
  p.validate();
  const SparseOperator h = build_hamiltonian(p);
  if (resolve_method(opts, p.num_sites) == SolverMethod::Dense) return steady_state_dense(h, p);
  return steady_state_krylov(h, p, opts.krylov);
}

}  // namespace nhchain
