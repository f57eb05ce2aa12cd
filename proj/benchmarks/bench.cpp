#include <benchmark/benchmark.h>

#include "qpea/generators.hpp"
#include "qpea/probability.hpp"
#include "qpea/qpe.hpp"

namespace {

void BM_Eigendecompose(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const qpea::SymmetricMatrix m = qpea::gen_random_symmetric(n, 0.5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpea::eigendecompose(m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigendecompose)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->Complexity();

void BM_EstimateProbabilities(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const qpea::SymmetricMatrix m = qpea::gen_random_symmetric(n, 0.5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpea::estimate_probabilities(m));
  }
}
BENCHMARK(BM_EstimateProbabilities)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_BuildLocalHamiltonian(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  const auto spec = qpea::gen_local_spec(qubits, qpea::LocalModel::H2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpea::build_local_hamiltonian(spec));
  }
}
BENCHMARK(BM_BuildLocalHamiltonian)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_RunSpectral(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const qpea::SymmetricMatrix m = qpea::gen_random_symmetric(n, 0.5, 1);
  const qpea::Spectrum s = qpea::eigendecompose(m);
  const qpea::AlphaVector a = qpea::eigenvector_sums(s);
  qpea::QpeConfig cfg;
  cfg.phase_bits = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpea::run_spectral(s, a, cfg));
  }
}
BENCHMARK(BM_RunSpectral)->Args({64, 8})->Args({256, 8})->Args({64, 12})->Unit(benchmark::kMillisecond);

void BM_RunDense(benchmark::State& state) {
  const qpea::SymmetricMatrix m = qpea::gen_random_symmetric(16, 0.5, 1);
  qpea::QpeConfig cfg;
  cfg.phase_bits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpea::run_dense(m, cfg));
  }
}
BENCHMARK(BM_RunDense)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
