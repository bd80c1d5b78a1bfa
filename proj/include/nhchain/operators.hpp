#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace nhchain {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using DenseMatrix = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;

enum class PauliLabel { X, Y, Z, Plus, Minus, Identity };

/// Single-site matrix in the ordered (up, down) basis. Plus = (X + iY)/2 raises
/// down to up, Minus = (X - iY)/2 lowers.
Mat2 pauli(PauliLabel label);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Complex value;
};

/// Complex sparse matrix in compressed-row storage.
///
/// Entries are always canonical: sorted by (row, col), duplicates summed and
/// exact zeros removed. Two operators built from the same terms in any order
/// therefore compare equal entry by entry.
class SparseOperator {
 public:
  /// Zero operator of the given dimension.
  explicit SparseOperator(std::size_t dim = 1);

  static SparseOperator from_triplets(std::size_t dim, std::vector<Triplet> entries);
  static SparseOperator identity(std::size_t dim);
  static SparseOperator from_dense(const DenseMatrix& m);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return values_.size(); }

  std::span<const std::size_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const std::size_t> columns() const noexcept { return columns_; }
  std::span<const Complex> values() const noexcept { return values_; }

  std::vector<Triplet> triplets() const;

  /// Matrix element (row, col); zero when not stored.
  Complex coeff(std::size_t row, std::size_t col) const;

  /// Maximum absolute row sum.
  double norm_inf() const;

  SparseOperator adjoint() const;
  DenseMatrix to_dense() const;

  friend bool operator==(const SparseOperator&, const SparseOperator&) = default;

 private:
  std::size_t dim_;
  std::vector<std::size_t> row_offsets_;
  std::vector<std::size_t> columns_;
  std::vector<Complex> values_;
};

/// Bit position of `site` (1-based) in a basis index of an N-site chain.
/// Site 1 is the most significant bit; bit value 0 is spin up.
constexpr int site_bit(int site, int num_sites) { return num_sites - site; }

/// Embeds a single-site operator at `site` (1-based) into the 2^N space.
SparseOperator embed(const Mat2& op, int site, int num_sites);

SparseOperator op_add(const SparseOperator& a, const SparseOperator& b);
SparseOperator op_scale(Complex c, const SparseOperator& a);
SparseOperator op_mul(const SparseOperator& a, const SparseOperator& b);

/// y = A x. Rows are distributed over OpenMP threads; the result does not
/// depend on the thread count.
StateVector op_matvec(const SparseOperator& a, const StateVector& x);

/// Single-threaded reference for op_matvec.
StateVector op_matvec_serial(const SparseOperator& a, const StateVector& x);

inline SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) { return op_add(a, b); }
inline SparseOperator operator*(Complex c, const SparseOperator& a) { return op_scale(c, a); }
inline SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) { return op_mul(a, b); }
inline StateVector operator*(const SparseOperator& a, const StateVector& x) { return op_matvec(a, x); }

/// Computational basis state from a string of 'u'/'d' characters, site 1 first.
StateVector basis_state(std::string_view spins);

}  // namespace nhchain
