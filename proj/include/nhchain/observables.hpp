#pragma once

#include <string>
#include <vector>

#include "nhchain/spectral.hpp"

namespace nhchain {

enum class Axis { X, Y, Z };

Axis parse_axis(const std::string& name);
const char* to_string(Axis a);
PauliLabel pauli_label(Axis a);

struct ObservableRecord {
  ChainParams params;
  std::string name;  ///< e.g. "sx_1", "sy1_sy5"
  std::vector<int> sites;
  Complex value;
};

/// <psi|O|psi> with the unit-norm right eigenvector (no left vector involved).
Complex expectation(const SteadyState& ss, const SparseOperator& op);

/// Expectation of a Hermitian operator. Throws NumericalError if the
/// imaginary residue exceeds 1e-10; the residue is dropped otherwise.
double hermitian_expectation(const SteadyState& ss, const SparseOperator& op);

/// sigma^axis on `site`.
SparseOperator site_operator(Axis axis, int site, int num_sites);

/// sigma^axis_first sigma^axis_second.
SparseOperator pair_operator(Axis axis, int first, int second, int num_sites);

/// <sigma^axis_n> for n = 1..N.
std::vector<double> magnetization_profile(const SteadyState& ss, Axis axis);

/// <sigma^axis_1 sigma^axis_n> for n = 2..N (raw, not connected).
std::vector<double> correlation_profile(const SteadyState& ss, Axis axis);

struct TwoSiteMagnetizations {
  double sx1, sy1, sz1, sx2, sy2, sz2;
};

struct TwoSiteCorrelations {
  double xx, yy, zz;
};

/// Closed-form N = 2 steady-state magnetizations. Requires the gapped region
/// gamma^2 - 4J^2 - 16h^2 > 0.
TwoSiteMagnetizations magnetizations_two_site(const ChainParams& p);

/// Closed-form N = 2 nearest-neighbour correlations, with A = sqrt(g^2-4J^2)
/// and B = sqrt(g^2-4J^2-16h^2):
///   xx = yy = (J sin(2 theta) / g) (1 - B/A),   zz = B/A.
/// The transverse form follows from the analytic eigenvector; a variant with
/// sqrt(B/A) in place of B/A disagrees with direct diagonalization.
TwoSiteCorrelations correlations_two_site(const ChainParams& p);

}  // namespace nhchain
