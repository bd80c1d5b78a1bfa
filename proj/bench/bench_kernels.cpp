// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "nhchain/hamiltonian.hpp"
#include "nhchain/kernels.hpp"
#include "nhchain/krylov.hpp"

namespace {

using namespace nhchain;

SparseOperator chain(int n) { return build_hamiltonian({n, 0.23, 1.0, 0.2, 0.3}); }

void BM_MatvecSerial(benchmark::State& state) {
  const SparseOperator h = chain(static_cast<int>(state.range(0)));
  const StateVector x = random_state(h.dim(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(op_matvec_serial(h, x));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(h.nnz()));
}

void BM_MatvecParallel(benchmark::State& state) {
  const SparseOperator h = chain(static_cast<int>(state.range(0)));
  const StateVector x = random_state(h.dim(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(op_matvec(h, x));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(h.nnz()));
}

void BM_DotSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const StateVector x = random_state(n, 1), y = random_state(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::dot_serial({x.data(), n}, {y.data(), n}));
}

void BM_DotParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const StateVector x = random_state(n, 1), y = random_state(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::dot({x.data(), n}, {y.data(), n}));
}

void BM_Evolve(benchmark::State& state) {
  const SparseOperator h = chain(static_cast<int>(state.range(0)));
  const StateVector x = random_state(h.dim(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(h, x, 1.0));
}

}  // namespace

BENCHMARK(BM_MatvecSerial)->DenseRange(8, 16, 4);
BENCHMARK(BM_MatvecParallel)->DenseRange(8, 16, 4);
BENCHMARK(BM_DotSerial)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_DotParallel)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Evolve)->DenseRange(8, 12, 2);

BENCHMARK_MAIN();
