#include <benchmark/benchmark.h>

#include "npduel/statevector.hpp"

using namespace npduel;

static void BM_HadamardAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = qsim::StateVector::basis_state(n, 0);
  for (auto _ : state) {
    s = qsim::walsh_hadamard_all(std::move(s));
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(1LL << n);
}
BENCHMARK(BM_HadamardAll)->DenseRange(8, 20, 4)->Complexity();

static void BM_SingleGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = qsim::walsh_hadamard_all(qsim::StateVector::basis_state(n, 0));
  for (auto _ : state) {
    s = qsim::apply_gate(std::move(s), qsim::SingleQubitGate::pauli_x(), n / 2);
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(1LL << n);
}
BENCHMARK(BM_SingleGate)->DenseRange(8, 20, 4)->Complexity();
