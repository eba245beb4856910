#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "npduel/cnf.hpp"
#include "npduel/rng.hpp"
#include "npduel/statevector.hpp"

namespace npduel::testutil {

// The worked CNF example: (x+y+~z)(~x+~y)(~y+z) over (x,y,z).
inline const char* kExampleDimacs = "p cnf 3 3\n1 2 -3 0\n-1 -2 0\n-2 3 0\n";

inline cnf::CnfFormula example_formula() { return cnf::parse_dimacs(kExampleDimacs); }

inline cnf::CnfFormula random_3sat(int num_vars, int num_clauses, Rng& rng) {
  std::uniform_int_distribution<int> var(0, num_vars - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<cnf::Clause> clauses;
  clauses.reserve(num_clauses);
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

// General CNF with clause lengths in [1, 4].
inline cnf::CnfFormula random_cnf(int num_vars, int num_clauses, Rng& rng) {
  std::uniform_int_distribution<int> var(0, num_vars - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> len(1, 4);
  std::vector<cnf::Clause> clauses;
  clauses.reserve(num_clauses);
  for (int c = 0; c < num_clauses; ++c) {
    cnf::Clause clause;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) {
      clause.push_back({var(rng), sign(rng) == 1});
    }
    clauses.push_back(std::move(clause));
  }
  return cnf::CnfFormula(num_vars, std::move(clauses));
}

inline qsim::StateVector random_state(int num_qubits, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<qsim::Amplitude> amps(std::uint64_t{1} << num_qubits);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {normal(rng), normal(rng)};
    norm += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm);
  for (auto& a : amps) a *= inv;
  return qsim::StateVector::from_amplitudes(num_qubits, std::move(amps));
}

// |freq - p| <= 3 sqrt(p(1-p)/shots)
inline bool within_3sigma(double freq, double p, std::uint64_t shots) {
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
  return std::abs(freq - p) <= 3.0 * sigma;
}

}  // namespace npduel::testutil
