#pragma once

#include <string>

#include "nhchain/operators.hpp"

namespace nhchain {

/// One instance of the lossy pair-creation chain with a transverse field on
/// site 1. Energies are in units of the decay rate when decay_rate = 1.
struct ChainParams {
  int num_sites = 2;
  double coupling = 0.0;    ///< nearest-neighbour pair creation/annihilation strength
  double decay_rate = 1.0;  ///< spontaneous decay rate of the up state
  double field = 0.0;       ///< amplitude of the in-plane field on site 1
  double angle = 0.0;       ///< azimuthal angle of that field, radians

  /// Throws DomainError on N < 2, negative coupling/field/decay or non-finite values.
  void validate() const;

  std::size_t dim() const { return std::size_t{1} << num_sites; }

  /// angle reduced to [0, 2pi) for display; the stored value is untouched.
  double reported_angle() const;

  std::string describe() const;
};

/// Pair-creation coupling plus the anti-Hermitian loss term, open boundary.
SparseOperator build_lossy_chain(const ChainParams& p);

/// h (cos(theta) X_1 + sin(theta) Y_1).
SparseOperator build_field_term(const ChainParams& p);

/// Full Hamiltonian: lossy chain plus field term.
SparseOperator build_hamiltonian(const ChainParams& p);

}  // namespace nhchain
