#include "npduel/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace npduel::cnf {

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses, CnfKind kind)
    : num_vars_(num_vars), clauses_(std::move(clauses)), kind_(kind) {
  if (num_vars_ < 1) {
    throw ValidationError("formula needs at least one variable");
  }
  if (clauses_.empty()) {
    throw ValidationError("formula needs at least one clause");
  }
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    const Clause& clause = clauses_[c];
    if (clause.empty()) {
      throw ValidationError("clause " + std::to_string(c + 1) + " is empty");
    }
    if (kind_ == CnfKind::three_sat && clause.size() != 3) {
      throw ValidationError("3SAT clause " + std::to_string(c + 1) + " has " +
                            std::to_string(clause.size()) + " literals");
    }
    for (const Literal& lit : clause) {
      if (lit.var < 0 || lit.var >= num_vars_) {
        throw ValidationError("variable index " + std::to_string(lit.var + 1) +
                              " out of range 1.." + std::to_string(num_vars_));
      }
    }
  }
}

namespace {

// Pulls whitespace-separated tokens, dropping 'c' comment lines wholesale.
class TokenStream {
 public:
  explicit TokenStream(std::istream& in) : in_(in) {}

  bool next(std::string& tok) {
    while (true) {
      if (pos_ >= line_.size()) {
        if (!std::getline(in_, line_)) return false;
        if (!line_.empty() && line_[0] == 'c') {
          line_.clear();
          pos_ = 0;
          continue;
        }
        pos_ = 0;
      }
      while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      if (pos_ >= line_.size()) continue;
      std::size_t start = pos_;
      while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      tok = line_.substr(start, pos_ - start);
      return true;
    }
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t pos_ = 0;
};

int parse_int(const std::string& tok, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  TokenStream toks(in);
  std::string tok;

  bool have_header = false;
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<Clause> clauses;
  Clause current;
  bool in_clause = false;

  while (toks.next(tok)) {
    if (tok == "p") {
      if (have_header) throw ParseError("duplicate 'p cnf' header");
      if (!toks.next(tok) || tok != "cnf") throw ParseError("malformed header: expected 'p cnf'");
      if (!toks.next(tok)) throw ParseError("malformed header: missing variable count");
      num_vars = parse_int(tok, "variable count");
      if (!toks.next(tok)) throw ParseError("malformed header: missing clause count");
      num_clauses = parse_int(tok, "clause count");
      if (num_vars < 1) throw ParseError("header declares no variables");
      if (num_clauses < 1) throw ParseError("header declares no clauses");
      have_header = true;
      continue;
    }
    // SATLIB files terminate the clause list with a lone '%'.
    if (tok == "%") break;
    if (!have_header) throw ParseError("literal before 'p cnf' header");

    int lit = parse_int(tok, "literal");
    if (lit == 0) {
      if (!in_clause) throw ParseError("empty clause (0 without preceding literals)");
      clauses.push_back(std::move(current));
      current.clear();
      in_clause = false;
      if (static_cast<int>(clauses.size()) == num_clauses) break;
      continue;
    }
    int var = lit > 0 ? lit : -lit;
    if (var > num_vars) {
      throw ParseError("variable index " + std::to_string(var) + " exceeds declared count " +
                       std::to_string(num_vars));
    }
    current.push_back(Literal{var - 1, lit < 0});
    in_clause = true;
  }

  if (!have_header) throw ParseError("missing 'p cnf' header");
  if (in_clause) throw ParseError("truncated final clause (missing terminating 0)");
  if (static_cast<int>(clauses.size()) != num_clauses) {
    throw ParseError("clause count mismatch: header says " + std::to_string(num_clauses) +
                     ", found " + std::to_string(clauses.size()));
  }
  // Anything after the declared clauses is junk, except the SATLIB
  // "%" / "0" tail (comments were already stripped).
  bool saw_percent = false;
  while (toks.next(tok)) {
    if (tok == "%" && !saw_percent) {
      saw_percent = true;
      continue;
    }
    if (tok == "0" && saw_percent) continue;
    throw ParseError("trailing content after final clause: '" + tok + "'");
  }
  return CnfFormula(num_vars, std::move(clauses));
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.clauses().size() << '\n';
  for (const Clause& clause : f.clauses()) {
    for (const Literal& lit : clause) {
      out << (lit.negated ? -(lit.var + 1) : lit.var + 1) << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars()) {
    throw ValidationError("assignment length " + std::to_string(a.size()) +
                          " != variable count " + std::to_string(f.num_vars()));
  }
  for (const Clause& clause : f.clauses()) {
    bool satisfied = false;
    for (const Literal& lit : clause) {
      if (a[lit.var] != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

Assignment assignment_from_index(std::uint64_t index, int num_vars) {
  Assignment a(num_vars);
  for (int i = 0; i < num_vars; ++i) {
    a[i] = (index >> i) & 1;
  }
  return a;
}

std::uint64_t index_from_assignment(const Assignment& a) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) index |= std::uint64_t{1} << i;
  }
  return index;
}

std::string assignment_to_string(const Assignment& a) {
  std::string s;
  s.reserve(a.size());
  for (bool v : a) s.push_back(v ? '1' : '0');
  return s;
}

namespace {

// Little-endian clause masks: a clause is satisfied by index b iff
// (b & pos) != 0 or (~b & neg) != 0.
struct ClauseMasks {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

std::vector<ClauseMasks> compile_masks(const CnfFormula& f) {
  std::vector<ClauseMasks> masks(f.clauses().size());
  for (std::size_t c = 0; c < f.clauses().size(); ++c) {
    for (const Literal& lit : f.clauses()[c]) {
      std::uint64_t bit = std::uint64_t{1} << lit.var;
      if (lit.negated) {
        masks[c].neg |= bit;
      } else {
        masks[c].pos |= bit;
      }
    }
  }
  return masks;
}

bool satisfies_masks(std::uint64_t bits, const std::vector<ClauseMasks>& masks) {
  for (const ClauseMasks& m : masks) {
    if ((bits & m.pos) == 0 && (~bits & m.neg) == 0) return false;
  }
  return true;
}

void check_bound(const CnfFormula& f, int exhaustive_bound) {
  if (f.num_vars() > exhaustive_bound) {
    throw CapExceeded("exhaustive enumeration over " + std::to_string(f.num_vars()) +
                      " variables exceeds bound " + std::to_string(exhaustive_bound));
  }
}

}  // namespace

std::uint64_t count_solutions(const CnfFormula& f, int exhaustive_bound) {
  check_bound(f, exhaustive_bound);
  const auto masks = compile_masks(f);
  const std::uint64_t n = std::uint64_t{1} << f.num_vars();
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    if (satisfies_masks(bits, masks)) ++count;
  }
  return count;
}

std::vector<Assignment> solutions(const CnfFormula& f, int exhaustive_bound) {
  check_bound(f, exhaustive_bound);
  const auto masks = compile_masks(f);
  const int nv = f.num_vars();
  const std::uint64_t n = std::uint64_t{1} << nv;
  std::vector<Assignment> result;
  // Walk in big-endian order (x1 is the most significant bit) so the output
  // is sorted the way assignment strings read.
  for (std::uint64_t be = 0; be < n; ++be) {
    std::uint64_t bits = 0;
    for (int i = 0; i < nv; ++i) {
      if ((be >> (nv - 1 - i)) & 1) bits |= std::uint64_t{1} << i;
    }
    if (satisfies_masks(bits, masks)) {
      result.push_back(assignment_from_index(bits, nv));
    }
  }
  return result;
}

std::vector<std::uint8_t> truth_table(const CnfFormula& f, int exhaustive_bound) {
  check_bound(f, exhaustive_bound);
  const auto masks = compile_masks(f);
  const std::uint64_t n = std::uint64_t{1} << f.num_vars();
  std::vector<std::uint8_t> table(n);
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    table[bits] = satisfies_masks(bits, masks) ? 1 : 0;
  }
  return table;
}

}  // namespace npduel::cnf
