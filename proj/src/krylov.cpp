#include "nhchain/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "nhchain/errors.hpp"

namespace nhchain {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

// Round up to two significant digits, as Expokit does for step sizes.
double round_step(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) return x;
  const double s = std::pow(10.0, std::floor(std::log10(x)) - 1.0);
  return std::ceil(x / s) * s;
}

}  // namespace

StateVector evolve(const SparseOperator& h, const StateVector& psi0, double t,
                   const EvolveOptions& opts) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("evolve: time must be finite and >= 0");
  if (static_cast<std::size_t>(psi0.size()) != h.dim())
    throw DomainError("evolve: state dimension does not match operator");
  if (t == 0.0) return psi0;

  const Eigen::Index n = psi0.size();
  const int m = static_cast<int>(std::min<Eigen::Index>(std::max(opts.krylov_dim, 1), n));
  const double anorm = std::max(h.norm_inf(), 1e-300);
  const double btol = 1e-12 * anorm;
  constexpr int kExtra = 2;
  constexpr int kMaxRejections = 20;
  constexpr double kSafety = 0.9;
  const double xm = 1.0 / m;

  StateVector w = psi0;
  double beta = w.norm();
  if (beta == 0.0) return w;

  const double fact = std::pow((m + 1) / std::numbers::e, m + 1) *
                      std::sqrt(2.0 * std::numbers::pi * (m + 1));
  double t_new = round_step((1.0 / anorm) * std::pow(fact * opts.tol / (4.0 * anorm), xm));

  DenseMatrix basis(n, m + 1);
  DenseMatrix hess(m + 2, m + 2);
  double t_now = 0.0;
  int substeps = 0;

  while (t_now < t) {
    if (++substeps > opts.max_substeps)
      throw NumericalError("evolve: exceeded " + std::to_string(opts.max_substeps) + " substeps");
    double t_step = std::min(t - t_now, t_new);

    basis.col(0) = w / beta;
    hess.setZero();
    int used = m;
    bool breakdown = false;
    for (int j = 0; j < m; ++j) {
      StateVector p = kMinusI * op_matvec(h, basis.col(j));
      for (int i = 0; i <= j; ++i) {
        hess(i, j) = basis.col(i).dot(p);
        p -= hess(i, j) * basis.col(i);
      }
      const double s = p.norm();
      if (s < btol) {
        breakdown = true;
        used = j + 1;
        t_step = t - t_now;
        break;
      }
      hess(j + 1, j) = s;
      basis.col(j + 1) = p / s;
    }

    double avnorm = 0.0;
    if (!breakdown) {
      hess(m + 1, m) = 1.0;
      avnorm = (kMinusI * op_matvec(h, basis.col(m))).norm();
    }
    const int size = breakdown ? used : m + kExtra;

    DenseMatrix expm;
    double err_loc = 0.0;
    for (int rejections = 0;; ++rejections) {
      expm = (t_step * hess.topLeftCorner(size, size)).exp();
      if (breakdown) {
        err_loc = btol;
        break;
      }
      const double p1 = std::abs(expm(m, 0)) * beta;
      const double p2 = std::abs(expm(m + 1, 0)) * beta * avnorm;
      if (p1 > 10.0 * p2)
        err_loc = p2;
      else if (p1 > p2)
        err_loc = p1 * p2 / (p1 - p2);
      else
        err_loc = p1;
      if (!std::isfinite(err_loc)) throw NumericalError("evolve: non-finite error estimate");
      if (err_loc <= opts.tol * beta) break;
      if (rejections >= kMaxRejections)
        throw NumericalError("evolve: step size rejected too many times");
      t_step = round_step(kSafety * t_step * std::pow(opts.tol * beta / err_loc, xm));
    }

    const int keep = breakdown ? used : m + 1;
    w = basis.leftCols(keep) * (beta * expm.col(0).head(keep));
    beta = w.norm();
    t_now += t_step;
    if (beta == 0.0) return w;
    if (!std::isfinite(beta)) throw NumericalError("evolve: state norm became non-finite");
    const double ratio = err_loc > 0.0 ? opts.tol * beta / err_loc : 1e3;
    t_new = round_step(kSafety * t_step * std::pow(ratio, xm));
  }
  return w;
}

StateVector random_state(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  StateVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(gen);
    const double im = normal(gen);
    v(i) = Complex{re, im};
  }
  return v.normalized();
}

SteadyState steady_state_krylov(const SparseOperator& h, const ChainParams& p,
                                const KrylovOptions& opts) {
  p.validate();
  if (h.dim() != p.dim()) throw DomainError("steady_state_krylov: operator does not match params");
  if (p.decay_rate <= 0.0) throw DomainError("steady_state_krylov: decay rate must be positive");
  if (opts.max_iters < 1) throw DomainError("steady_state_krylov: max_iters must be >= 1");
  const double period = opts.period > 0.0 ? opts.period : 5.0 / p.decay_rate;

  StateVector lead = random_state(h.dim(), opts.seed);
  StateVector second = random_state(h.dim(), opts.seed + 1);
  second -= lead * lead.dot(second);
  second.normalize();

  double diff = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < opts.max_iters && !(diff < opts.tol);) {
    ++it;
    StateVector next = evolve(h, lead, period, opts.evolve);
    StateVector next2 = evolve(h, second, period, opts.evolve);
    const double nrm = next.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm))
      throw NumericalError("steady_state_krylov: propagated state vanished");
    next /= nrm;
    next2 -= next * next.dot(next2);
    const double nrm2 = next2.norm();
    if (nrm2 > 0.0 && std::isfinite(nrm2))
      next2 /= nrm2;
    else
      next2 = second;  // second direction fully absorbed; keep the previous one

    const Complex overlap = next.dot(lead);
    if (std::abs(overlap) > 0.0) next *= std::conj(overlap) / std::abs(overlap);
    diff = (next - lead).norm();
    lead = std::move(next);
    second = std::move(next2);
  }
  if (!(diff < opts.tol)) {
    std::ostringstream os;
    os << "steady_state_krylov: no convergence after " << opts.max_iters
       << " iterations (last change " << diff << ") at " << p.describe();
    throw ConvergenceError(os.str(), diff);
  }

  // Rayleigh-Ritz on span{lead, second}.
  second -= lead * lead.dot(second);
  second.normalize();
  const StateVector h_lead = op_matvec(h, lead);
  const StateVector h_second = op_matvec(h, second);
  Eigen::Matrix2cd projected;
  projected << lead.dot(h_lead), lead.dot(h_second), second.dot(h_lead), second.dot(h_second);
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> ritz(projected, false);
  std::array<Complex, 2> rv{ritz.eigenvalues()(0), ritz.eigenvalues()(1)};
  std::sort(rv.begin(), rv.end(), spectral_order);

  SteadyState ss;
  ss.params = p;
  ss.method = SolverMethod::Krylov;
  ss.eigenvalue = lead.dot(h_lead);
  ss.vector = std::move(lead);
  apply_phase_gauge(ss.vector);
  ss.gap = imaginary_gap(rv);
  ss.near_ep = ss.gap <= gap_tolerance(p);
  ss.iterations = it;
  ss.residual = (op_matvec(h, ss.vector) - ss.eigenvalue * ss.vector).norm();
  return ss;
}

}  // namespace nhchain
