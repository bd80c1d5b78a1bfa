#include "nhchain/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace nhchain::kernels {

namespace {
constexpr std::size_t kDotChunk = 1024;
}

void csr_matvec(const CsrView& a, std::span<const Complex> x, std::span<Complex> y) {
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  assert(x.size() == a.rows() && y.size() == a.rows());
  const std::size_t* offsets = a.row_offsets.data();
  const std::size_t* cols = a.columns.data();
  const Complex* vals = a.values.data();
  const Complex* xp = x.data();
  Complex* yp = y.data();

#pragma omp parallel for schedule(static) if (a.rows() >= kParallelRowThreshold)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) acc += vals[k] * xp[cols[k]];
    yp[r] = acc;
  }
}

void csr_matvec_serial(const CsrView& a, std::span<const Complex> x, std::span<Complex> y) {
  const std::size_t rows = a.rows();
  for (std::size_t r = 0; r < rows; ++r) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = a.row_offsets[r]; k < a.row_offsets[r + 1]; ++k)
      acc += a.values[k] * x[a.columns[k]];
    y[r] = acc;
  }
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const auto chunks = static_cast<std::ptrdiff_t>((n + kDotChunk - 1) / kDotChunk);
  std::vector<Complex> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(static) if (n >= kParallelRowThreshold)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kDotChunk;
    const std::size_t hi = std::min(n, lo + kDotChunk);
    Complex acc{0.0, 0.0};
    for (std::size_t i = lo; i < hi; ++i) acc += std::conj(x[i]) * y[i];
    partial[static_cast<std::size_t>(c)] = acc;
  }

  Complex total{0.0, 0.0};
  for (const Complex& p : partial) total += p;
  return total;
}

Complex dot_serial(std::span<const Complex> x, std::span<const Complex> y) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

}  // namespace nhchain::kernels
