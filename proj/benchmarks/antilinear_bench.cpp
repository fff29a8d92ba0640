#include <benchmark/benchmark.h>

#include <random>

#include "antilinear/anti_orthogonal.hpp"
#include "antilinear/delta_example.hpp"
#include "antilinear/functional_model.hpp"
#include "antilinear/operator.hpp"
#include "antilinear/takagi.hpp"

namespace {

using namespace antilinear;

AntiLinearOperator random_jacobi_operator(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.5, 2.0), v(-1.0, 1.0);
  JacobiParameters p;
  for (std::size_t k = 0; k < n; ++k) {
    p.b.emplace_back(v(rng), v(rng));
    if (k + 1 < n) p.a.push_back(u(rng));
  }
  return jacobi_to_operator(p);
}

void BM_Lanczos(benchmark::State& state) {
  const auto op = random_jacobi_operator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lanczos_tridiagonalize(op));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Lanczos)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_Extract(benchmark::State& state) {
  const auto op = random_jacobi_operator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_spectral_data(op));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Extract)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_Takagi(benchmark::State& state) {
  const auto op = random_jacobi_operator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(takagi(op.matrix()));
}
BENCHMARK(BM_Takagi)->RangeMultiplier(2)->Range(16, 256);

void BM_GramSchmidtDelta(benchmark::State& state) {
  const auto data = delta::discretize({0.0, 3.0}, static_cast<int>(state.range(0))).data;
  for (auto _ : state) benchmark::DoNotOptimize(gram_schmidt(data, 20));
}
BENCHMARK(BM_GramSchmidtDelta)->Arg(500)->Arg(4000)->Arg(32000);

void BM_Discretize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta::discretize(2.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Discretize)->Arg(500)->Arg(4000)->Arg(32000);

void BM_TruncatedResolvent(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(delta::truncated_resolvent({0.6, 0.0}, 1.5, static_cast<int>(state.range(0)), 0, 0));
}
BENCHMARK(BM_TruncatedResolvent)->Arg(500)->Arg(2000)->Arg(5000);

void BM_BuildAndVerifyModel(benchmark::State& state) {
  SpectralData d;
  const int k = static_cast<int>(state.range(0));
  for (int j = 0; j < k; ++j) {
    d.nodes.push_back(0.1 + 3.0 * j / k);
    d.weights.push_back(1.0 / k);
    d.phases.push_back(j % 3 == 0 ? Complex(0.0, 1.0) : Complex(0.3, 0.2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(verify_model(d));
}
BENCHMARK(BM_BuildAndVerifyModel)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
