#include <benchmark/benchmark.h>

#include "npduel/cerny_tsp.hpp"
#include "npduel/cnf.hpp"
#include "npduel/es_sat.hpp"
#include "npduel/quantum_sat.hpp"

using namespace npduel;

namespace {

cnf::CnfFormula random_3sat(int num_vars, int num_clauses, Rng& rng) {
  std::uniform_int_distribution<int> var(0, num_vars - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<cnf::Clause> clauses;
  for (int c = 0; c < num_clauses; ++c) {
    cnf::Clause clause;
    while (clause.size() < 3) {
      const int v = var(rng);
      bool dup = false;
      for (const auto& lit : clause) dup = dup || lit.var == v;
      if (!dup) clause.push_back({v, sign(rng) == 1});
    }
    clauses.push_back(std::move(clause));
  }
  return cnf::CnfFormula(num_vars, std::move(clauses), cnf::CnfKind::three_sat);
}

}  // namespace

static void BM_CountSolutions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng = make_rng(1);
  const auto f = random_3sat(n, static_cast<int>(4.3 * n), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cnf::count_solutions(f));
  }
}
BENCHMARK(BM_CountSolutions)->DenseRange(12, 20, 4);

static void BM_GroverIteration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = qsim::walsh_hadamard_all(qsim::StateVector::basis_state(n, 0));
  const qsat::MarkedPredicate marked = [](std::uint64_t i) { return i == 1; };
  for (auto _ : state) {
    s = qsat::q_operator(std::move(s), marked);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_GroverIteration)->DenseRange(8, 16, 4);

static void BM_EsGeneration(benchmark::State& state) {
  Rng rng = make_rng(7);
  const auto f = random_3sat(20, 91, rng);
  es::EsConfig cfg;
  cfg.max_generations = 0;
  es::EsRun run(f, cfg, 99);
  for (auto _ : state) {
    run.step();
  }
}
BENCHMARK(BM_EsGeneration);

static void BM_CernyEnumerate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<std::vector<long long>> d(m, std::vector<long long>(m, 1));
  for (int i = 0; i < m; ++i) d[i][i] = 0;
  const auto instance = tsp::make_instance(m, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsp::enumerate_trajectories(instance));
  }
}
BENCHMARK(BM_CernyEnumerate)->DenseRange(5, 8, 1);

BENCHMARK_MAIN();
