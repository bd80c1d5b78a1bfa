#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "nhchain/hamiltonian.hpp"
#include "nhchain/operators.hpp"

namespace nhchain {

/// Largest dimension handled by the dense path (N = 12).
inline constexpr std::size_t kMaxDenseDim = 4096;

/// Full eigendecomposition of a non-Hermitian matrix.
///
/// Column j of `right` is a unit-norm right eigenvector for eigenvalues[j];
/// column j of `left` is the matching left eigenvector, scaled so that
/// left.col(j).adjoint() * right.col(k) == delta_jk.
/// Eigenvalues are sorted by descending imaginary part, ties by ascending
/// real part.
struct Spectrum {
  std::vector<Complex> eigenvalues;
  DenseMatrix right;
  DenseMatrix left;
};

enum class SolverMethod { Auto, Dense, Krylov };

const char* to_string(SolverMethod m);

/// Slowest-decaying eigenpair of H. The vector has unit Euclidean norm and
/// its largest-magnitude amplitude is real and positive.
struct SteadyState {
  ChainParams params;
  Complex eigenvalue;
  StateVector vector;
  double gap = 0.0;  ///< Im of top eigenvalue minus Im of the runner-up
  SolverMethod method = SolverMethod::Dense;
  bool near_ep = false;  ///< Krylov only: gap estimate fell below the gap tolerance
  int iterations = 0;
  double residual = 0.0;  ///< ||H v - lambda v||
};

/// Closed gap threshold: 1e-6 * decay rate.
double gap_tolerance(const ChainParams& p);

/// Strict ordering used for every eigenvalue list in the library.
bool spectral_order(const Complex& a, const Complex& b);

/// Im(lambda_0) - Im(lambda_1) for a list sorted by spectral_order; >= 0.
double imaginary_gap(std::span<const Complex> sorted);

/// Eigenvalues only, sorted. Throws ResourceError above kMaxDenseDim.
std::vector<Complex> dense_eigenvalues(const SparseOperator& h);

/// Eigenvalues with biorthonormal left/right eigenvectors. Throws
/// DegeneracyError when a cluster of (near-)equal eigenvalues is defective.
Spectrum dense_spectrum(const SparseOperator& h);

/// Closed-form spectrum of the two-site chain, ordered
/// (lambda_{+,+}, lambda_{+,-}, lambda_{-,+}, lambda_{-,-}). Principal complex
/// square roots are used past the exceptional point.
std::array<Complex, 4> eigenvalues_two_site(const ChainParams& p);

/// Rotates v so that its largest-magnitude amplitude is real positive.
/// Magnitude ties within 1e-12 go to the lowest index.
void apply_phase_gauge(StateVector& v);

/// Steady state from a dense diagonalization. Throws EpProximityError when the
/// gap does not exceed gap_tolerance(p).
SteadyState steady_state_dense(const SparseOperator& h, const ChainParams& p);

}  // namespace nhchain
