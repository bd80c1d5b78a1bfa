#include "nhchain/critical.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "nhchain/errors.hpp"

namespace nhchain {

double gap_at(const ChainParams& p, const SolverOptions& opts) {
  p.validate();
  const SparseOperator h = build_hamiltonian(p);
  if (resolve_method(opts, p.num_sites) == SolverMethod::Dense) {
    const std::vector<Complex> ev = dense_eigenvalues(h);
    return imaginary_gap(ev);
  }
  return steady_state_krylov(h, p, opts.krylov).gap;
}

EpSearch find_ep_coupling(const ChainParams& base, double lo, double hi, const EpOptions& opts) {
  base.validate();
  if (!(lo >= 0.0) || !(hi > lo)) throw DomainError("find_ep_coupling: need 0 <= lo < hi");
  if (!(opts.tol_coupling > 0.0)) throw DomainError("find_ep_coupling: tolerance must be positive");
  const double tol_gap = gap_tolerance(base);

  EpSearch s;
  auto gap_for = [&](double coupling) {
    ChainParams p = base;
    p.coupling = coupling;
    ++s.evaluations;
    return gap_at(p, opts.solver);
  };

  s.lo = lo;
  s.hi = hi;
  s.gap_lo = gap_for(lo);
  s.gap_hi = gap_for(hi);
  if (!(s.gap_lo > tol_gap) || s.gap_hi > tol_gap) {
    std::ostringstream os;
    os << "find_ep_coupling: bracket [" << lo << ", " << hi
       << "] does not enclose the gap closing (gap(lo) = " << s.gap_lo
       << ", gap(hi) = " << s.gap_hi << ", tolerance " << tol_gap << ")";
    throw DomainError(os.str());
  }
  while (s.hi - s.lo > opts.tol_coupling) {
    const double mid = 0.5 * (s.lo + s.hi);
    const double g = gap_for(mid);
    if (g > tol_gap) {
      s.lo = mid;
      s.gap_lo = g;
    } else {
      s.hi = mid;
      s.gap_hi = g;
    }
  }
  s.critical_coupling = 0.5 * (s.lo + s.hi);
  return s;
}

EpCurve ep_curve(int num_sites, std::span<const double> fields, double decay_rate, double angle,
                 const EpOptions& opts) {
  ChainParams base;
  base.num_sites = num_sites;
  base.decay_rate = decay_rate;
  base.angle = angle;
  base.validate();
  if (decay_rate <= 0.0) throw DomainError("ep_curve: decay rate must be positive");

  EpCurve curve;
  curve.num_sites = num_sites;
  curve.tol_gap = gap_tolerance(base);
  curve.points.resize(fields.size());
  const double upper = 0.6 * decay_rate;
  const auto count = static_cast<std::ptrdiff_t>(fields.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    EpPoint& pt = curve.points[static_cast<std::size_t>(i)];
    pt.field = fields[static_cast<std::size_t>(i)];
    pt.critical_coupling = std::numeric_limits<double>::quiet_NaN();
    try {
      ChainParams p = base;
      p.field = pt.field;
      p.coupling = 0.0;
      if (gap_at(p, opts.solver) <= curve.tol_gap) {
        pt.critical_coupling = 0.0;
        pt.status = "closed_at_zero";
        continue;
      }
      pt.critical_coupling = find_ep_coupling(p, 0.0, upper, opts).critical_coupling;
      pt.status = "ok";
    } catch (const std::exception& e) {
      pt.status = e.what();
    }
  }

  double previous = std::numeric_limits<double>::infinity();
  double previous_field = -std::numeric_limits<double>::infinity();
  for (const EpPoint& pt : curve.points) {
    if (std::isnan(pt.critical_coupling)) continue;
    if (pt.field > previous_field && pt.critical_coupling > previous + opts.tol_coupling)
      curve.monotone = false;
    previous = pt.critical_coupling;
    previous_field = pt.field;
  }
  return curve;
}

ScalingFit fit_inverse_poly(std::span<const std::pair<int, double>> points, int degree) {
  if (degree < 0) throw DomainError("fit_inverse_poly: degree must be >= 0");
  std::set<int> sizes;
  for (const auto& [n, value] : points) {
    if (n < 1) throw DomainError("fit_inverse_poly: sizes must be positive");
    if (!std::isfinite(value)) throw DomainError("fit_inverse_poly: non-finite input value");
    sizes.insert(n);
  }
  if (static_cast<int>(sizes.size()) < degree + 2)
    throw DomainError("fit_inverse_poly: need at least " + std::to_string(degree + 2) +
                      " distinct sizes, got " + std::to_string(sizes.size()));

  const auto rows = static_cast<Eigen::Index>(points.size());
  const Eigen::Index cols = degree + 1;
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd target(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& [n, value] = points[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < cols; ++c)
      design(r, c) = std::pow(1.0 / n, static_cast<double>(degree - c));
    target(r) = value;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < cols) throw DomainError("fit_inverse_poly: rank-deficient design matrix");
  const Eigen::VectorXd coeffs = qr.solve(target);

  ScalingFit fit;
  fit.degree = degree;
  fit.coefficients.assign(coeffs.data(), coeffs.data() + coeffs.size());
  fit.residual_norm = (design * coeffs - target).norm();
  fit.points.assign(points.begin(), points.end());
  return fit;
}

}  // namespace nhchain
