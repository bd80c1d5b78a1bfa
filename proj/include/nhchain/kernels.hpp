#pragma once

#include <complex>
#include <cstddef>
#include <span>

// Raw compute kernels. Each parallel kernel has a serial twin that tests and
// benchmarks use as the reference.
namespace nhchain::kernels {

using Complex = std::complex<double>;

struct CsrView {
  std::span<const std::size_t> row_offsets;  // size rows + 1
  std::span<const std::size_t> columns;
  std::span<const Complex> values;
  std::size_t rows() const noexcept { return row_offsets.size() - 1; }
};

/// Below this row count the OpenMP kernel stays on the calling thread.
inline constexpr std::size_t kParallelRowThreshold = 2048;

void csr_matvec(const CsrView& a, std::span<const Complex> x, std::span<Complex> y);
void csr_matvec_serial(const CsrView& a, std::span<const Complex> x, std::span<Complex> y);

/// Sum over chunks of fixed size, combined in chunk order, so the rounding
/// is identical for every thread count.
Complex dot(std::span<const Complex> x, std::span<const Complex> y);
Complex dot_serial(std::span<const Complex> x, std::span<const Complex> y);

}  // namespace nhchain::kernels
