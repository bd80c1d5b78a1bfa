#include "nhchain/observables.hpp"

#include <cmath>
#include <sstream>

#include "nhchain/errors.hpp"
#include "nhchain/kernels.hpp"

namespace nhchain {

namespace {

struct TwoSiteRoots {
  double a, b;
};

TwoSiteRoots gapped_roots(const ChainParams& p, const char* who) {
  p.validate();
  if (p.num_sites != 2) throw DomainError(std::string(who) + ": requires N = 2");
  if (p.decay_rate <= 0.0) throw DomainError(std::string(who) + ": decay rate must be positive");
  const double g = p.decay_rate, j = p.coupling, h = p.field;
  const double b2 = g * g - 4.0 * j * j - 16.0 * h * h;
  if (!(b2 > 0.0)) {
    std::ostringstream os;
    os << who << ": outside the gapped region (gamma^2 - 4J^2 - 16h^2 = " << b2 << ")";
    throw DomainError(os.str());
  }
  return {std::sqrt(g * g - 4.0 * j * j), std::sqrt(b2)};
}

}  // namespace

Axis parse_axis(const std::string& name) {
  if (name == "x") return Axis::X;
  if (name == "y") return Axis::Y;
  if (name == "z") return Axis::Z;
  throw DomainError("unknown axis '" + name + "' (expected x, y or z)");
}

const char* to_string(Axis a) {
  switch (a) {
    case Axis::X:
      return "x";
    case Axis::Y:
      return "y";
    case Axis::Z:
      return "z";
  }
  return "?";
}

PauliLabel pauli_label(Axis a) {
  switch (a) {
    case Axis::X:
      return PauliLabel::X;
    case Axis::Y:
      return PauliLabel::Y;
    case Axis::Z:
      return PauliLabel::Z;
  }
  return PauliLabel::Identity;
}

Complex expectation(const SteadyState& ss, const SparseOperator& op) {
  if (static_cast<std::size_t>(ss.vector.size()) != op.dim())
    throw DomainError("expectation: operator dimension " + std::to_string(op.dim()) +
                      " does not match state dimension " + std::to_string(ss.vector.size()));
  const StateVector applied = op_matvec(op, ss.vector);
  const auto n = static_cast<std::size_t>(ss.vector.size());
  return kernels::dot({ss.vector.data(), n}, {applied.data(), n});
}

double hermitian_expectation(const SteadyState& ss, const SparseOperator& op) {
  const Complex v = expectation(ss, op);
  if (std::abs(v.imag()) > 1e-10) {
    std::ostringstream os;
    os << "hermitian_expectation: imaginary residue " << v.imag() << " exceeds 1e-10";
    throw NumericalError(os.str());
  }
  return v.real();
}

SparseOperator site_operator(Axis axis, int site, int num_sites) {
  return embed(pauli(pauli_label(axis)), site, num_sites);
}

SparseOperator pair_operator(Axis axis, int first, int second, int num_sites) {
  return site_operator(axis, first, num_sites) * site_operator(axis, second, num_sites);
}

std::vector<double> magnetization_profile(const SteadyState& ss, Axis axis) {
  const int n = ss.params.num_sites;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int site = 1; site <= n; ++site)
    out.push_back(hermitian_expectation(ss, site_operator(axis, site, n)));
  return out;
}

std::vector<double> correlation_profile(const SteadyState& ss, Axis axis) {
  const int n = ss.params.num_sites;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int site = 2; site <= n; ++site)
    out.push_back(hermitian_expectation(ss, pair_operator(axis, 1, site, n)));
  return out;
}

TwoSiteMagnetizations magnetizations_two_site(const ChainParams& p) {
  const auto [a, b] = gapped_roots(p, "magnetizations_two_site");
  const double g = p.decay_rate;
  // Transverse response of site 1 is perpendicular to the field.
  const double amp = 4.0 * p.field / g;
  return {amp * -std::sin(p.angle), amp * std::cos(p.angle), -b / g, 0.0, 0.0, -a / g};
}

TwoSiteCorrelations correlations_two_site(const ChainParams& p) {
  const auto [a, b] = gapped_roots(p, "correlations_two_site");
  const double transverse = p.coupling * std::sin(2.0 * p.angle) / p.decay_rate * (1.0 - b / a);
  return {transverse, transverse, b / a};
}

}  // namespace nhchain
