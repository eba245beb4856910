#include "npduel/quantum_sat.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

namespace npduel::qsat {

SatRegister prepare_ohya_masuda(const cnf::CnfFormula& f) {
  const int n = f.num_vars();
  if (n + 1 > qsim::kMaxQubits) {
    throw CapExceeded("register of " + std::to_string(n + 1) +
                      " qubits exceeds cap " + std::to_string(qsim::kMaxQubits));
  }
  const std::uint64_t dim_vars = std::uint64_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim_vars));
  std::vector<qsim::Amplitude> amps(dim_vars << 1);
  for (std::uint64_t i = 0; i < dim_vars; ++i) amps[i] = amp;
  return SatRegister{f, qsim::StateVector::from_amplitudes(n + 1, std::move(amps))};
}

SatRegister apply_uf(SatRegister reg) {
  const auto table = cnf::truth_table(reg.formula);
  const std::uint64_t flag = reg.flag_mask();
  std::vector<qsim::Amplitude> amps(reg.state.amplitudes());
  for (std::uint64_t x = 0; x < flag; ++x) {
    if (table[x]) std::swap(amps[x], amps[x | flag]);
  }
  reg.state = qsim::StateVector::from_amplitudes(reg.state.num_qubits(), std::move(amps));
  return reg;
}

double flag_probability(const SatRegister& reg) {
  const std::uint64_t flag = reg.flag_mask();
  return qsim::probability_of(reg.state,
                              [flag](std::uint64_t i) { return (i & flag) != 0; });
}

std::optional<cnf::Assignment> sample_solution(const SatRegister& reg, Rng& rng) {
  const int flag_qubit = reg.formula.num_vars();
  auto [bit, collapsed] = qsim::measure_qubit(reg.state, flag_qubit, rng);
  if (bit == 0) return std::nullopt;
  const auto outcome = qsim::measure_all(collapsed, rng);
  const std::uint64_t x = outcome.basis_index & (reg.flag_mask() - 1);
  return cnf::assignment_from_index(x, reg.formula.num_vars());
}

qsim::StateVector phase_oracle(qsim::StateVector s, const MarkedPredicate& marked) {
  std::vector<qsim::Amplitude> amps(s.amplitudes());
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (marked(i)) amps[i] = -amps[i];
  }
  return qsim::StateVector::from_amplitudes(s.num_qubits(), std::move(amps));
}

qsim::StateVector phase_flip_state(qsim::StateVector s, std::uint64_t target) {
  if (target >= s.dimension()) {
    throw ValidationError("phase flip target " + std::to_string(target) +
                          " outside the basis");
  }
  return phase_oracle(std::move(s),
                      [target](std::uint64_t i) { return i == target; });
}

qsim::StateVector q_operator(qsim::StateVector s, const MarkedPredicate& marked) {
  s = phase_oracle(std::move(s), marked);
  s = qsim::walsh_hadamard_all(std::move(s));
  s = phase_flip_state(std::move(s), 0);
  s = qsim::walsh_hadamard_all(std::move(s));
  return qsim::scale(std::move(s), -1.0);
}

AmplificationPlan plan_iterations(int num_qubits, std::uint64_t marked_count) {
  const std::uint64_t search_space = std::uint64_t{1} << num_qubits;
  if (marked_count == 0) {
    throw ValidationError("nothing to amplify: marked count is 0");
  }
  if (marked_count > search_space) {
    throw ValidationError("marked count exceeds the search space");
  }
  AmplificationPlan plan;
  plan.marked_count = marked_count;
  plan.search_space = search_space;
  plan.theta = std::asin(std::sqrt(static_cast<double>(marked_count) /
                                   static_cast<double>(search_space)));
  // std::round rounds half away from zero, giving k=1 at the N=2r boundary.
  const double k = std::round(std::numbers::pi / (4.0 * plan.theta) - 0.5);
  plan.iterations = static_cast<int>(std::max(0.0, k));
  plan.predicted_success = std::pow(std::sin((2.0 * plan.iterations + 1.0) * plan.theta), 2);
  return plan;
}

GroverStats grover_search(const cnf::CnfFormula& f, std::uint64_t seed, int shots) {
  if (shots < 1) throw ValidationError("shots must be >= 1");
  GroverStats stats;
  stats.formula_dimacs = cnf::serialize_dimacs(f);
  stats.num_vars = f.num_vars();
  stats.solution_count = cnf::count_solutions(f);
  if (stats.solution_count == 0) {
    stats.satisfiable = false;
    return stats;
  }
  stats.satisfiable = true;
  stats.plan = plan_iterations(f.num_vars(), stats.solution_count);
  stats.shots = shots;

  const auto table = cnf::truth_table(f);
  const MarkedPredicate marked = [&table](std::uint64_t i) { return table[i] != 0; };

  auto state = qsim::walsh_hadamard_all(
      qsim::StateVector::basis_state(f.num_vars(), 0));
  for (int i = 0; i < stats.plan.iterations; ++i) {
    state = q_operator(std::move(state), marked);
  }

  for (int shot = 0; shot < shots; ++shot) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(shot));
    const auto outcome = qsim::measure_all(state, rng);
    const auto a = cnf::assignment_from_index(outcome.basis_index, f.num_vars());
    ++stats.outcome_histogram[cnf::assignment_to_string(a)];
    if (table[outcome.basis_index]) ++stats.success_count;
  }
  return stats;
}

std::string to_json(const GroverStats& stats) {
  nlohmann::json j;
  j["formula"] = stats.formula_dimacs;
  j["n"] = stats.num_vars;
  j["r"] = stats.solution_count;
  if (!stats.satisfiable) {
    j["result"] = "unsat";
    return j.dump();
  }
  j["k"] = stats.plan.iterations;
  j["theta"] = stats.plan.theta;
  j["predicted_success"] = stats.plan.predicted_success;
  j["shots"] = stats.shots;
  j["success_count"] = stats.success_count;
  j["outcome_histogram"] = stats.outcome_histogram;
  return j.dump();
}

}  // namespace npduel::qsat
