#include <benchmark/benchmark.h>

#include "cgeo/compile.hpp"
#include "cgeo/linalg.hpp"
#include "cgeo/path.hpp"
#include "cgeo/rng.hpp"

namespace {

void BM_PauliMultiply(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  cgeo::Rng rng(7);
  const auto paulis = cgeo::enumerate_paulis(n);
  const cgeo::PauliString a = paulis[rng.next_u64() % paulis.size()];
  const cgeo::PauliString b = paulis[rng.next_u64() % paulis.size()];
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgeo::multiply(a, b));
  }
}
BENCHMARK(BM_PauliMultiply)->Arg(4)->Arg(8);

void BM_ExpmHermitian(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  cgeo::Rng rng(7);
  const cgeo::DenseMatrix h = cgeo::dense(cgeo::random_unit_hamiltonian(rng, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgeo::expm_hermitian(h, 0.3));
  }
}
BENCHMARK(BM_ExpmHermitian)->Arg(3)->Arg(5);

void BM_TrotterOrderGreedy(benchmark::State& state) {
  cgeo::Rng rng(7);
  cgeo::Hamiltonian h = cgeo::random_unit_hamiltonian(rng, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgeo::trotter_order_greedy(h));
  }
}
BENCHMARK(BM_TrotterOrderGreedy);

void BM_SynthesizeMonomial(benchmark::State& state) {
  const cgeo::PauliString p = cgeo::PauliString::parse("XYZXYZ");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgeo::synthesize_monomial(p, 0.37));
  }
}
BENCHMARK(BM_SynthesizeMonomial);

void BM_GeodesicStep(benchmark::State& state) {
  cgeo::Rng rng(7);
  const cgeo::Hamiltonian h0 = cgeo::random_unit_hamiltonian(rng, 3);
  const cgeo::PenaltySchedule s = cgeo::PenaltySchedule::cliff(3, 100.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgeo::integrate_geodesic(h0, s, 0.01, 1e-3));
  }
}
BENCHMARK(BM_GeodesicStep);

}  // namespace

BENCHMARK_MAIN();
