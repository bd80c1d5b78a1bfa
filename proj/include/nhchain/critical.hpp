#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nhchain/steady_state.hpp"

namespace nhchain {

/// Imaginary-part gap of H(p). The dense path uses all eigenvalues; the
/// Krylov path uses the two-vector Ritz estimate.
double gap_at(const ChainParams& p, const SolverOptions& opts = {});

struct EpOptions {
  double tol_coupling = 1e-5;
  SolverOptions solver{SolverMethod::Dense, 10, {}};
};

struct EpSearch {
  double critical_coupling = 0.0;  ///< midpoint of the final bracket
  double lo = 0.0, hi = 0.0;       ///< final bracket: gapped at lo, closed at hi
  double gap_lo = 0.0, gap_hi = 0.0;
  int evaluations = 0;
};

/// Bisects the indicator gap(J) > gap_tolerance on [lo, hi]. The gap is
/// identically zero past the exceptional point, so there is no sign change
/// to exploit. `base` supplies N, decay rate, field and angle; its coupling
/// is ignored. Throws DomainError unless lo is gapped and hi is closed.
EpSearch find_ep_coupling(const ChainParams& base, double lo, double hi,
                          const EpOptions& opts = {});

struct EpPoint {
  double field = 0.0;
  double critical_coupling = 0.0;  ///< NaN when the point failed
  std::string status;              ///< "ok", "closed_at_zero" or an error message
};

struct EpCurve {
  int num_sites = 0;
  double tol_gap = 0.0;
  std::vector<EpPoint> points;
  bool monotone = true;  ///< J_c non-increasing in h over the successful points
};

/// Exceptional-point coupling for every field value (bracket [0, 0.6 gamma]).
/// Points are independent and evaluated in parallel; failures are recorded
/// per point. A field that closes the gap already at J = 0 yields J_c = 0.
EpCurve ep_curve(int num_sites, std::span<const double> fields, double decay_rate, double angle,
                 const EpOptions& opts = {});

/// Least-squares fit of J_c(N) to sum_k c_k / N^k, k = degree..0.
struct ScalingFit {
  int degree = 2;
  std::vector<double> coefficients;  ///< highest inverse power first; last is the N -> inf limit
  double residual_norm = 0.0;
  std::vector<std::pair<int, double>> points;

  double extrapolated() const { return coefficients.back(); }
};

/// Throws DomainError with fewer than degree + 2 distinct sizes or a
/// rank-deficient design.
ScalingFit fit_inverse_poly(std::span<const std::pair<int, double>> points, int degree = 2);

}  // namespace nhchain
