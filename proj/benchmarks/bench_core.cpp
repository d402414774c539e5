#include <benchmark/benchmark.h>

#include "entmono/cones.hpp"
#include "entmono/eig.hpp"
#include "entmono/monotones.hpp"
#include "entmono/rng.hpp"
#include "entmono/states.hpp"

using namespace entmono;

namespace {

CMatrix random_hermitian(int n, uint64_t seed) {
  Rng rng(seed);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.cgaussian();
  m.symmetrize();
  return m;
}

void BM_JacobiEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CMatrix h = random_hermitian(n, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_eig(h));
  }
}
BENCHMARK(BM_JacobiEig)->Arg(4)->Arg(9)->Arg(16)->Arg(36);

void BM_PsdPart(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HermitianOperator h(2, n / 2, random_hermitian(n, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(psd_part(h));
  }
}
BENCHMARK(BM_PsdPart)->Arg(4)->Arg(6);

void BM_SeeSaw(benchmark::State& state) {
  const HermitianOperator z = max_entangled(3).partial_transpose();
  SolverConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(see_saw_product_min(z, cfg));
  }
}
BENCHMARK(BM_SeeSaw)->Arg(8)->Arg(64);

void BM_IsDecomposable(benchmark::State& state) {
  // Interior member of the decomposable cone at the isotropic family.
  const HermitianOperator s = isotropic(3, 0.75).state;
  const JordanPair jp = jordan_split(s.partial_transpose());
  const HermitianOperator z =
      s - (1.0 - 0.9) * jp.positive_part.partial_transpose();
  SolverConfig cfg;
  for (auto _ : state) {
    ConeOracle oracle(cfg);
    benchmark::DoNotOptimize(oracle.decomposable(z));
  }
}
BENCHMARK(BM_IsDecomposable);

void BM_M1Isotropic(benchmark::State& state) {
  const HermitianOperator s = isotropic(2, 0.75).state;
  const MonotoneConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m1(s, cfg));
  }
}
BENCHMARK(BM_M1Isotropic);

void BM_M1Random2x2(benchmark::State& state) {
  const HermitianOperator s = random_state(2, 2, 602);
  const MonotoneConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m1(s, cfg));
  }
}
BENCHMARK(BM_M1Random2x2);

}  // namespace

BENCHMARK_MAIN();
