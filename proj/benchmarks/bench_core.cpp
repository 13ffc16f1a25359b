#include <benchmark/benchmark.h>

#include "qetlab/correlations.hpp"
#include "qetlab/eig.hpp"
#include "qetlab/local_extraction.hpp"
#include "qetlab/qet_protocol.hpp"
#include "qetlab/spin_model.hpp"

namespace {

void BM_gibbs_state(benchmark::State& state) {
  const qet::SystemParams params = qet::SystemParams::make(1.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qet::gibbs_state(params));
  }
}
BENCHMARK(BM_gibbs_state);

void BM_hermitian_eig_4x4(benchmark::State& state) {
  const qet::CMatrix h = qet::build_hamiltonian(qet::SystemParams::make(1.0, 2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qet::hermitian_eig(h));
  }
}
BENCHMARK(BM_hermitian_eig_4x4);

void BM_gibbs_oracle(benchmark::State& state) {
  const qet::SystemParams params = qet::SystemParams::make(1.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qet::gibbs_state_oracle(params));
  }
}
BENCHMARK(BM_gibbs_oracle);

void BM_classical_correlation(benchmark::State& state) {
  const qet::GibbsState gibbs = qet::gibbs_state(qet::SystemParams::make(1.0, 2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qet::classical_correlation(gibbs));
  }
}
BENCHMARK(BM_classical_correlation);

void BM_min_conditional_entropy(benchmark::State& state) {
  const qet::GibbsState gibbs = qet::gibbs_state(qet::SystemParams::make(1.0, 2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qet::min_conditional_entropy(gibbs));
  }
}
BENCHMARK(BM_min_conditional_entropy);

void BM_optimal_qet(benchmark::State& state) {
  const qet::GibbsState gibbs = qet::gibbs_state(qet::SystemParams::make(1.0, 2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qet::optimal_qet(gibbs));
  }
}
BENCHMARK(BM_optimal_qet);

void BM_solve_max_omega(benchmark::State& state) {
  const qet::GibbsState gibbs = qet::gibbs_state(qet::SystemParams::make(1.0, 2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qet::solve_max_omega(gibbs));
  }
}
BENCHMARK(BM_solve_max_omega);

void BM_run_protocol(benchmark::State& state) {
  const qet::GibbsState gibbs = qet::gibbs_state(qet::SystemParams::make(1.0, 2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qet::run_protocol(gibbs, 0.3));
  }
}
BENCHMARK(BM_run_protocol);

void BM_threshold_t1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qet::threshold_t1(1.0));
  }
}
BENCHMARK(BM_threshold_t1);

}  // namespace

BENCHMARK_MAIN();
