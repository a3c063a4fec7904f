#include <benchmark/benchmark.h>

#include <random>

#include "qumode/gates.hpp"
#include "qumode/graph.hpp"
#include "qumode/kerrcat.hpp"
#include "qumode/linalg.hpp"
#include "qumode/sbm.hpp"

using namespace qumode;

static void BM_DisplacementMatrix(benchmark::State& state) {
  const QumodeRegister reg = QumodeRegister::single(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gate_matrix(Displacement{0, Complex(0.6, 0.3)}, reg));
}
BENCHMARK(BM_DisplacementMatrix)->Arg(16)->Arg(32)->Arg(64);

static void BM_BeamsplitterMatrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const QumodeRegister reg({d, d});
  for (auto _ : state) benchmark::DoNotOptimize(gate_matrix(Beamsplitter{0, 1, 0.7, 0.2}, reg));
}
BENCHMARK(BM_BeamsplitterMatrix)->Arg(8)->Arg(12)->Arg(16);

static void BM_HafnianComplete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(n, n);
  a.diagonal().setZero();
  for (auto _ : state) benchmark::DoNotOptimize(hafnian(a));
}
BENCHMARK(BM_HafnianComplete)->DenseRange(8, 20, 4);

static void BM_KerrCatDiagonalization(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const Operator h = kerrcat_hamiltonian({1.0, 3.0, cutoff});
  for (auto _ : state) benchmark::DoNotOptimize(linalg::hermitian_eigenvalues(h.matrix()));
}
BENCHMARK(BM_KerrCatDiagonalization)->Arg(80)->Arg(120)->Arg(200);

static void BM_KerrCatParitySplit(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const Operator h = kerrcat_hamiltonian({1.0, 3.0, cutoff});
  for (auto _ : state) {
    const ParityBlocks b = parity_split(h);
    benchmark::DoNotOptimize(linalg::hermitian_eigenvalues(b.even));
    benchmark::DoNotOptimize(linalg::hermitian_eigenvalues(b.odd));
  }
}
BENCHMARK(BM_KerrCatParitySplit)->Arg(80)->Arg(120)->Arg(200);

static void BM_SbmMap(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  Matrix h(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) h(i, j) = h(j, i) = g(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(map_hamiltonian({h, ""}, minimum_sbm_cutoff(k)));
}
BENCHMARK(BM_SbmMap)->DenseRange(2, 8, 2);
BENCHMARK_MAIN();
