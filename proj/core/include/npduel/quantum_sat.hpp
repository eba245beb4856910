#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "npduel/cnf.hpp"
#include "npduel/statevector.hpp"

namespace npduel::qsat {

/// n variable qubits (qubit i holds x_{i+1}) plus a satisfaction flag on
/// qubit n. The flag starts at |0> and U_f XORs f(x) into it.
struct SatRegister {
  cnf::CnfFormula formula;
  qsim::StateVector state;

  std::uint64_t flag_mask() const {
    return std::uint64_t{1} << formula.num_vars();
  }
};

/// Uniform superposition over the variable qubits, flag |0>.
SatRegister prepare_ohya_masuda(const cnf::CnfFormula& f);

/// |x>|y> -> |x>|y XOR f(x)>. Involution; variable bits are untouched.
SatRegister apply_uf(SatRegister reg);

/// Probability that measuring the flag yields 1. For prepare + one U_f this
/// equals count_solutions(f) / 2^n.
double flag_probability(const SatRegister& reg);

/// Measures the flag; on 1 measures the remaining qubits of the collapsed
/// state and returns the (always satisfying) assignment, on 0 returns
/// nullopt.
std::optional<cnf::Assignment> sample_solution(const SatRegister& reg, Rng& rng);

using MarkedPredicate = std::function<bool(std::uint64_t)>;

/// Diagonal phase oracle: negates the amplitude of every marked basis state.
qsim::StateVector phase_oracle(qsim::StateVector s, const MarkedPredicate& marked);

/// Phase oracle with the singleton marked set {target}.
qsim::StateVector phase_flip_state(qsim::StateVector s, std::uint64_t target);

/// One amplitude-amplification step Q = -U e^{i pi P_s} U^dagger e^{i pi P_t}
/// with U = H^xn and |s> = |0...0>: oracle, H^xn, flip |0...0>, H^xn, global
/// sign. The leading sign changes no probability; it is kept for fidelity.
qsim::StateVector q_operator(qsim::StateVector s, const MarkedPredicate& marked);

struct AmplificationPlan {
  std::uint64_t marked_count = 0;  // r
  std::uint64_t search_space = 0;  // N = 2^n
  double theta = 0.0;              // asin(sqrt(r/N))
  int iterations = 0;              // k
  double predicted_success = 0.0;  // sin^2((2k+1) theta)
};

/// k = max(0, round(pi/(4 theta) - 1/2)), rounding half away from zero so the
/// N = 2r boundary gives k = 1.
AmplificationPlan plan_iterations(int num_qubits, std::uint64_t marked_count);

struct GroverStats {
  bool satisfiable = false;
  std::string formula_dimacs;
  int num_vars = 0;
  std::uint64_t solution_count = 0;
  AmplificationPlan plan;
  int shots = 0;
  std::uint64_t success_count = 0;
  // Keyed by assignment string ("101" = x1=1, x2=0, x3=1).
  std::map<std::string, std::uint64_t> outcome_histogram;
};

/// Plans with r = count_solutions(f), applies Q^k to H^xn|0...0> and measures
/// `shots` times, one derived RNG stream per shot. Unsatisfiable formulas are
/// reported without running any amplification.
GroverStats grover_search(const cnf::CnfFormula& f, std::uint64_t seed, int shots);

/// Single JSON object {formula, n, r, k, theta, predicted_success, shots,
/// success_count, outcome_histogram}; {formula, n, r, result:"unsat"} when
/// unsatisfiable.
std::string to_json(const GroverStats& stats);

}  // namespace npduel::qsat
