#include "nhchain/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nhchain/errors.hpp"

namespace nhchain {

void ChainParams::validate() const {
  if (num_sites < 2 || num_sites > 24)
    throw DomainError("ChainParams: number of sites must be in [2, 24], got " +
                      std::to_string(num_sites));
  if (!std::isfinite(coupling) || !std::isfinite(decay_rate) || !std::isfinite(field) ||
      !std::isfinite(angle))
    throw DomainError("ChainParams: non-finite parameter");
  if (coupling < 0.0) throw DomainError("ChainParams: coupling must be >= 0");
  if (field < 0.0) throw DomainError("ChainParams: field must be >= 0");
  if (decay_rate < 0.0) throw DomainError("ChainParams: decay rate must be >= 0");
}

double ChainParams::reported_angle() const {
  const double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle, two_pi);
  if (a < 0.0) a += two_pi;
  return a;
}

std::string ChainParams::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "N=" << num_sites << " J=" << coupling << " gamma=" << decay_rate << " h=" << field
     << " theta=" << angle;
  return os.str();
}

SparseOperator build_lossy_chain(const ChainParams& p) {
  p.validate();
  const int n = p.num_sites;
  const std::size_t dim = p.dim();
  const Mat2 plus = pauli(PauliLabel::Plus);
  const Mat2 minus = pauli(PauliLabel::Minus);

  SparseOperator h(dim);
  for (int site = 1; site < n; ++site) {
    const SparseOperator pair = embed(plus, site, n) * embed(plus, site + 1, n) +
                                embed(minus, site, n) * embed(minus, site + 1, n);
    h = h + Complex{p.coupling, 0.0} * pair;
  }

  // -i(gamma/4) sum_n (Z_n + 1) = -i(gamma/2) * (number of up spins), diagonal.
  std::vector<Triplet> loss;
  loss.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    int ups = 0;
    for (int site = 1; site <= n; ++site)
      if (!((i >> site_bit(site, n)) & 1U)) ++ups;
    loss.push_back({i, i, Complex{0.0, -0.5 * p.decay_rate * ups}});
  }
  return h + SparseOperator::from_triplets(dim, std::move(loss));
}

SparseOperator build_field_term(const ChainParams& p) {
  p.validate();
  const Complex cx{p.field * std::cos(p.angle), 0.0};
  const Complex cy{p.field * std::sin(p.angle), 0.0};
  return cx * embed(pauli(PauliLabel::X), 1, p.num_sites) +
         cy * embed(pauli(PauliLabel::Y), 1, p.num_sites);
}

SparseOperator build_hamiltonian(const ChainParams& p) {
  return build_lossy_chain(p) + build_field_term(p);
}

}  // namespace nhchain
