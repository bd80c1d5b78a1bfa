#include "nhchain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "nhchain/errors.hpp"

namespace nhchain {

namespace {

struct RawEigen {
  std::vector<Complex> values;
  DenseMatrix left;
  DenseMatrix right;
};

RawEigen run_zgeev(const SparseOperator& h, bool want_left, bool want_right) {
  if (h.dim() > kMaxDenseDim)
    throw ResourceError("dense eigensolver: dimension " + std::to_string(h.dim()) +
                        " exceeds the dense limit " + std::to_string(kMaxDenseDim) +
                        "; use the Krylov path");
  const auto n = static_cast<lapack_int>(h.dim());
  DenseMatrix a = h.to_dense();
  RawEigen out;
  out.values.resize(h.dim());
  if (want_left) out.left.resize(n, n);
  if (want_right) out.right.resize(n, n);
  Complex dummy{};
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, want_left ? 'V' : 'N', want_right ? 'V' : 'N', n, a.data(), n,
      out.values.data(), want_left ? out.left.data() : &dummy, n,
      want_right ? out.right.data() : &dummy, n);
  if (info != 0) throw NumericalError("zgeev failed with info = " + std::to_string(info));
  for (const Complex& v : out.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("dense eigensolver produced a non-finite eigenvalue");
  return out;
}

std::vector<std::size_t> sorted_order(const std::vector<Complex>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return spectral_order(values[a], values[b]);
  });
  return order;
}

std::string format_values(const std::vector<Complex>& values) {
  std::ostringstream os;
  os.precision(12);
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  return os.str();
}

}  // namespace

const char* to_string(SolverMethod m) {
  switch (m) {
    case SolverMethod::Auto:
      return "auto";
    case SolverMethod::Dense:
      return "dense";
    case SolverMethod::Krylov:
      return "krylov";
  }
  return "unknown";
}

double gap_tolerance(const ChainParams& p) { return 1e-6 * p.decay_rate; }

bool spectral_order(const Complex& a, const Complex& b) {
  if (a.imag() != b.imag()) return a.imag() > b.imag();
  return a.real() < b.real();
}

double imaginary_gap(std::span<const Complex> sorted) {
  if (sorted.size() < 2) return 0.0;
  return std::max(0.0, sorted[0].imag() - sorted[1].imag());
}

std::vector<Complex> dense_eigenvalues(const SparseOperator& h) {
  RawEigen raw = run_zgeev(h, false, false);
  std::sort(raw.values.begin(), raw.values.end(), spectral_order);
  return raw.values;
}

Spectrum dense_spectrum(const SparseOperator& h) {
  RawEigen raw = run_zgeev(h, true, true);
  const std::size_t n = raw.values.size();
  const std::vector<std::size_t> order = sorted_order(raw.values);

  Spectrum s;
  s.eigenvalues.resize(n);
  s.right.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  s.left.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto src = static_cast<Eigen::Index>(order[j]);
    const auto dst = static_cast<Eigen::Index>(j);
    s.eigenvalues[j] = raw.values[order[j]];
    s.right.col(dst) = raw.right.col(src).normalized();
    s.left.col(dst) = raw.left.col(src).normalized();
  }

  // Group eigenvalues that coincide within the pairing tolerance; inside a
  // group left and right vectors are only determined up to a basis change.
  const double scale = std::max(1.0, h.norm_inf());
  const double cluster_tol = 1e-8 * scale;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(s.eigenvalues[i] - s.eigenvalues[j]) <= cluster_tol) parent[find(j)] = find(i);

  std::vector<std::vector<Eigen::Index>> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[find(i)].push_back(static_cast<Eigen::Index>(i));

  for (const auto& members : clusters) {
    if (members.empty()) continue;
    const auto k = static_cast<Eigen::Index>(members.size());
    DenseMatrix lc(s.left.rows(), k), rc(s.right.rows(), k);
    for (Eigen::Index c = 0; c < k; ++c) {
      lc.col(c) = s.left.col(members[static_cast<std::size_t>(c)]);
      rc.col(c) = s.right.col(members[static_cast<std::size_t>(c)]);
    }
    const DenseMatrix overlap = lc.adjoint() * rc;
    Eigen::JacobiSVD<DenseMatrix> svd(overlap);
    const double smin = svd.singularValues()(k - 1);
    if (!(smin > 1e-10)) {
      std::vector<Complex> colliding;
      for (Eigen::Index m : members) colliding.push_back(s.eigenvalues[static_cast<std::size_t>(m)]);
      std::ostringstream os;
      os << "dense_spectrum: left/right eigenvectors cannot be paired (overlap singular value "
         << smin << ") for eigenvalues {" << format_values(colliding) << "}";
      throw DegeneracyError(os.str());
    }
    // (L S^{-H})^H R = S^{-1} L^H R = I.
    const DenseMatrix fixed = lc * overlap.inverse().adjoint();
    for (Eigen::Index c = 0; c < k; ++c) s.left.col(members[static_cast<std::size_t>(c)]) = fixed.col(c);
  }
  return s;
}

std::array<Complex, 4> eigenvalues_two_site(const ChainParams& p) {
  p.validate();
  if (p.num_sites != 2)
    throw DomainError("eigenvalues_two_site: requires N = 2, got " + std::to_string(p.num_sites));
  const double g = p.decay_rate, j = p.coupling, h = p.field;
  const Complex a = std::sqrt(Complex{g * g - 4.0 * j * j, 0.0});
  const Complex b = std::sqrt(Complex{g * g - 4.0 * j * j - 16.0 * h * h, 0.0});
  const Complex base{0.0, -g / 2.0};
  const Complex quarter_i{0.0, 0.25};
  return {base + quarter_i * (a + b), base + quarter_i * (a - b), base - quarter_i * (a - b),
          base - quarter_i * (a + b)};
}

void apply_phase_gauge(StateVector& v) {
  if (v.size() == 0) return;
  Eigen::Index best = 0;
  double best_mag = std::abs(v(0));
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > best_mag + 1e-12) {
      best = i;
      best_mag = m;
    }
  }
  if (best_mag == 0.0) return;
  v *= std::conj(v(best)) / best_mag;
  v(best) = Complex{std::abs(v(best)), 0.0};
}

SteadyState steady_state_dense(const SparseOperator& h, const ChainParams& p) {
  p.validate();
  if (h.dim() != p.dim()) throw DomainError("steady_state_dense: operator does not match params");
  if (p.decay_rate <= 0.0) throw DomainError("steady_state_dense: decay rate must be positive");

  RawEigen raw = run_zgeev(h, false, true);
  const std::vector<std::size_t> order = sorted_order(raw.values);
  std::vector<Complex> sorted(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = raw.values[order[i]];

  SteadyState ss;
  ss.params = p;
  ss.method = SolverMethod::Dense;
  ss.gap = imaginary_gap(sorted);
  if (ss.gap <= gap_tolerance(p)) {
    std::ostringstream os;
    os << "steady state undefined near an exceptional point: gap " << ss.gap
       << " <= tolerance " << gap_tolerance(p) << " at " << p.describe();
    throw EpProximityError(os.str(), ss.gap);
  }
  ss.eigenvalue = sorted[0];
  ss.vector = raw.right.col(static_cast<Eigen::Index>(order[0])).normalized();
  apply_phase_gauge(ss.vector);
  ss.residual = (op_matvec(h, ss.vector) - ss.eigenvalue * ss.vector).norm();
  return ss;
}

}  // namespace nhchain
