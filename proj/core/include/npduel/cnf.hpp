#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "npduel/errors.hpp"

namespace npduel::cnf {

/// One signed variable occurrence. `var` is 0-based internally; DIMACS input
/// and output use the conventional 1-based indices.
struct Literal {
  int var = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// values[i] holds the value of variable i+1.
using Assignment = std::vector<bool>;

enum class CnfKind { general, three_sat };

/// Immutable CNF formula. Construction validates that every clause is
/// non-empty, all variable indices are in range, and (for three_sat) that
/// every clause has exactly 3 literals. Duplicate literals inside a clause
/// are kept as parsed.
class CnfFormula {
 public:
  CnfFormula(int num_vars, std::vector<Clause> clauses,
             CnfKind kind = CnfKind::general);

  int num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  CnfKind kind() const { return kind_; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int num_vars_;
  std::vector<Clause> clauses_;
  CnfKind kind_;
};

/// Enumeration in count_solutions/solutions/truth_table visits 2^n
/// assignments; the bound keeps that cost explicit.
inline constexpr int kDefaultExhaustiveBound = 24;

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
CnfFormula parse_dimacs_file(const std::string& path);

/// Canonical DIMACS text; parse_dimacs(serialize_dimacs(f)) == f.
std::string serialize_dimacs(const CnfFormula& f);

/// True iff every clause has at least one literal satisfied by `a`.
bool evaluate(const CnfFormula& f, const Assignment& a);

/// Little-endian packing shared with the statevector basis convention:
/// bit i of `index` is the value of variable i+1.
Assignment assignment_from_index(std::uint64_t index, int num_vars);
std::uint64_t index_from_assignment(const Assignment& a);

/// Big-endian reading of an assignment as a binary numeral, x1 first. This is
/// the order in which assignments are written as strings ("011" means x1=0,
/// x2=1, x3=1) and the sort key of solutions().
std::string assignment_to_string(const Assignment& a);

/// Exact number of satisfying assignments among 2^n (exhaustive oracle).
std::uint64_t count_solutions(const CnfFormula& f,
                              int exhaustive_bound = kDefaultExhaustiveBound);

/// All satisfying assignments, ascending in the big-endian reading.
std::vector<Assignment> solutions(const CnfFormula& f,
                                  int exhaustive_bound = kDefaultExhaustiveBound);

/// truth_table(f)[i] != 0 iff the assignment with little-endian index i
/// satisfies f.
std::vector<std::uint8_t> truth_table(const CnfFormula& f,
                                      int exhaustive_bound = kDefaultExhaustiveBound);

}  // namespace npduel::cnf
