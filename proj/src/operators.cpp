#include "nhchain/operators.hpp"

#include <algorithm>
#include <string>

#include "nhchain/errors.hpp"
#include "nhchain/kernels.hpp"

namespace nhchain {

namespace {

constexpr Complex kI{0.0, 1.0};

kernels::CsrView view(const SparseOperator& a) {
  return {a.row_offsets(), a.columns(), a.values()};
}

void require_same_dim(const SparseOperator& a, const SparseOperator& b, const char* what) {
  if (a.dim() != b.dim())
    throw DomainError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                      " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

Mat2 pauli(PauliLabel label) {
  Mat2 m = Mat2::Zero();
  switch (label) {
    case PauliLabel::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case PauliLabel::Y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case PauliLabel::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    case PauliLabel::Plus:
      m << 0.0, 1.0, 0.0, 0.0;
      break;
    case PauliLabel::Minus:
      m << 0.0, 0.0, 1.0, 0.0;
      break;
    case PauliLabel::Identity:
      m << 1.0, 0.0, 0.0, 1.0;
      break;
  }
  return m;
}

SparseOperator::SparseOperator(std::size_t dim) : dim_(dim), row_offsets_(dim + 1, 0) {
  if (dim == 0) throw DomainError("SparseOperator: dimension must be positive");
}

SparseOperator SparseOperator::from_triplets(std::size_t dim, std::vector<Triplet> entries) {
  SparseOperator out(dim);
  for (const Triplet& t : entries) {
    if (t.row >= dim || t.col >= dim)
      throw DomainError("SparseOperator: entry (" + std::to_string(t.row) + ", " +
                        std::to_string(t.col) + ") outside dimension " + std::to_string(dim));
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  out.columns_.reserve(entries.size());
  out.values_.reserve(entries.size());
  std::vector<std::size_t> row_of;
  row_of.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    const std::size_t r = entries[i].row;
    const std::size_t c = entries[i].col;
    Complex sum{0.0, 0.0};
    for (; i < entries.size() && entries[i].row == r && entries[i].col == c; ++i)
      sum += entries[i].value;
    if (sum == Complex{0.0, 0.0}) continue;
    out.columns_.push_back(c);
    out.values_.push_back(sum);
    row_of.push_back(r);
  }
  for (std::size_t r : row_of) ++out.row_offsets_[r + 1];
  for (std::size_t r = 0; r < dim; ++r) out.row_offsets_[r + 1] += out.row_offsets_[r];
  return out;
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  std::vector<Triplet> t;
  t.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) t.push_back({i, i, 1.0});
  return from_triplets(dim, std::move(t));
}

SparseOperator SparseOperator::from_dense(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("SparseOperator::from_dense: matrix not square");
  std::vector<Triplet> t;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != Complex{0.0, 0.0})
        t.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c), m(r, c)});
  return from_triplets(static_cast<std::size_t>(m.rows()), std::move(t));
}

std::vector<Triplet> SparseOperator::triplets() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k)
      t.push_back({r, columns_[k], values_[k]});
  return t;
}

Complex SparseOperator::coeff(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) throw DomainError("SparseOperator::coeff: index out of range");
  const auto first = columns_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row]);
  const auto last = columns_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row + 1]);
  const auto it = std::lower_bound(first, last, col);
  if (it == last || *it != col) return {0.0, 0.0};
  return values_[static_cast<std::size_t>(it - columns_.begin())];
}

double SparseOperator::norm_inf() const {
  double best = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    double sum = 0.0;
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) sum += std::abs(values_[k]);
    best = std::max(best, sum);
  }
  return best;
}

SparseOperator SparseOperator::adjoint() const {
  std::vector<Triplet> t = triplets();
  for (Triplet& e : t) {
    std::swap(e.row, e.col);
    e.value = std::conj(e.value);
  }
  return from_triplets(dim_, std::move(t));
}

DenseMatrix SparseOperator::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  DenseMatrix m = DenseMatrix::Zero(n, n);
  for (const Triplet& t : triplets())
    m(static_cast<Eigen::Index>(t.row), static_cast<Eigen::Index>(t.col)) = t.value;
  return m;
}

SparseOperator embed(const Mat2& op, int site, int num_sites) {
  if (num_sites < 1 || num_sites > 30)
    throw DomainError("embed: number of sites must be in [1, 30], got " + std::to_string(num_sites));
  if (site < 1 || site > num_sites)
    throw DomainError("embed: site " + std::to_string(site) + " outside [1, " +
                      std::to_string(num_sites) + "]");

  const std::size_t dim = std::size_t{1} << num_sites;
  const std::size_t mask = std::size_t{1} << site_bit(site, num_sites);
  std::vector<Triplet> t;
  t.reserve(2 * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const int in = (col & mask) ? 1 : 0;
    for (int out = 0; out < 2; ++out) {
      const Complex v = op(out, in);
      if (v == Complex{0.0, 0.0}) continue;
      const std::size_t row = out ? (col | mask) : (col & ~mask);
      t.push_back({row, col, v});
    }
  }
  return SparseOperator::from_triplets(dim, std::move(t));
}

SparseOperator op_add(const SparseOperator& a, const SparseOperator& b) {
  require_same_dim(a, b, "op_add");
  std::vector<Triplet> t = a.triplets();
  std::vector<Triplet> tb = b.triplets();
  t.insert(t.end(), tb.begin(), tb.end());
  return SparseOperator::from_triplets(a.dim(), std::move(t));
}

SparseOperator op_scale(Complex c, const SparseOperator& a) {
  std::vector<Triplet> t = a.triplets();
  for (Triplet& e : t) e.value *= c;
  return SparseOperator::from_triplets(a.dim(), std::move(t));
}

SparseOperator op_mul(const SparseOperator& a, const SparseOperator& b) {
  require_same_dim(a, b, "op_mul");
  const auto ao = a.row_offsets(), bo = b.row_offsets();
  const auto ac = a.columns(), bc = b.columns();
  const auto av = a.values(), bv = b.values();
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t k = ao[r]; k < ao[r + 1]; ++k) {
      const std::size_t mid = ac[k];
      for (std::size_t l = bo[mid]; l < bo[mid + 1]; ++l) t.push_back({r, bc[l], av[k] * bv[l]});
    }
  return SparseOperator::from_triplets(a.dim(), std::move(t));
}

StateVector op_matvec(const SparseOperator& a, const StateVector& x) {
  if (static_cast<std::size_t>(x.size()) != a.dim())
    throw DomainError("op_matvec: vector length " + std::to_string(x.size()) +
                      " does not match operator dimension " + std::to_string(a.dim()));
  StateVector y(x.size());
  kernels::csr_matvec(view(a), {x.data(), a.dim()}, {y.data(), a.dim()});
  return y;
}

StateVector op_matvec_serial(const SparseOperator& a, const StateVector& x) {
  if (static_cast<std::size_t>(x.size()) != a.dim())
    throw DomainError("op_matvec_serial: dimension mismatch");
  StateVector y(x.size());
  kernels::csr_matvec_serial(view(a), {x.data(), a.dim()}, {y.data(), a.dim()});
  return y;
}

StateVector basis_state(std::string_view spins) {
  const int n = static_cast<int>(spins.size());
  if (n < 1 || n > 30) throw DomainError("basis_state: need 1..30 spins");
  std::size_t index = 0;
  for (int site = 1; site <= n; ++site) {
    const char s = spins[static_cast<std::size_t>(site - 1)];
    if (s == 'd')
      index |= std::size_t{1} << site_bit(site, n);
    else if (s != 'u')
      throw DomainError("basis_state: expected 'u' or 'd', got '" + std::string(1, s) + "'");
  }
  StateVector v = StateVector::Zero(Eigen::Index{1} << n);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

}  // namespace nhchain
