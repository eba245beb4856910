#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "npduel/cnf.hpp"
#include "test_util.hpp"

using namespace npduel;
using namespace npduel::testutil;

// Independent reference: literal-by-literal clause evaluation, written
// directly against the definition. count/solutions/truth_table must agree
// with it (they use the bitmask fast path).
namespace {

bool reference_evaluate(const cnf::CnfFormula& f, const cnf::Assignment& a) {
  for (const auto& clause : f.clauses()) {
    bool sat = false;
    for (const auto& lit : clause) {
      const bool value = a[lit.var];
      if ((lit.negated && !value) || (!lit.negated && value)) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse_dimacs reads the worked example") {
  const auto f = cnf::parse_dimacs(kExampleDimacs);
  CHECK(f.num_vars() == 3);
  REQUIRE(f.clauses().size() == 3);
  CHECK(f.clauses()[0] == cnf::Clause{{0, false}, {1, false}, {2, true}});
  CHECK(f.clauses()[1] == cnf::Clause{{0, true}, {1, true}});
  CHECK(f.clauses()[2] == cnf::Clause{{1, true}, {2, false}});
}

TEST_CASE("parse_dimacs smallest formula and comments") {
  const auto f = cnf::parse_dimacs("c tiny\np cnf 1 1\n1 0\n");
  CHECK(f.num_vars() == 1);
  CHECK(f.clauses().size() == 1);

  // clauses may span lines and share lines
  const auto g = cnf::parse_dimacs("p cnf 3 2\n1 2\n-3 0 -1 0\n");
  CHECK(g.clauses().size() == 2);
  CHECK(g.clauses()[0].size() == 3);
}

TEST_CASE("parse_dimacs error paths") {
  CHECK_THROWS_AS(cnf::parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);  // var > n
  CHECK_THROWS_AS(cnf::parse_dimacs("1 0\n"), ParseError);               // no header
  CHECK_THROWS_AS(cnf::parse_dimacs(""), ParseError);
  CHECK_THROWS_AS(cnf::parse_dimacs("p cnf 1 1\np cnf 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(cnf::parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);    // too few clauses
  CHECK_THROWS_AS(cnf::parse_dimacs("p cnf 2 1\n1 0\n2 0\n"), ParseError);  // too many
  CHECK_THROWS_AS(cnf::parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);    // truncated
  CHECK_THROWS_AS(cnf::parse_dimacs("p cnf 2 2\n0 1 0\n"), ParseError);  // empty clause
  CHECK_THROWS_AS(cnf::parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);  // junk token
}

TEST_CASE("parse_dimacs tolerates the SATLIB tail") {
  const auto f = cnf::parse_dimacs("p cnf 1 1\n1 0\n%\n0\n");
  CHECK(f.clauses().size() == 1);
}

TEST_CASE("serialize_dimacs round-trips") {
  const auto f = example_formula();
  CHECK(cnf::serialize_dimacs(f) == "p cnf 3 3\n1 2 -3 0\n-1 -2 0\n-2 3 0\n");
  CHECK(cnf::parse_dimacs(cnf::serialize_dimacs(f)) == f);

  const cnf::CnfFormula unit(1, {{{0, true}}});
  CHECK(cnf::serialize_dimacs(unit) == "p cnf 1 1\n-1 0\n");
}

TEST_CASE("round-trip property on random formulas") {
  Rng rng = make_rng(11);
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<int> nv(1, 12);
    const int n = nv(rng);
    std::uniform_int_distribution<int> nc(1, 30);
    const auto f = random_cnf(n, nc(rng), rng);
    const auto reparsed = cnf::parse_dimacs(cnf::serialize_dimacs(f));
    CHECK(reparsed == f);
    CHECK(cnf::serialize_dimacs(reparsed) == cnf::serialize_dimacs(f));
  }
}

TEST_CASE("construction rejects invalid formulas") {
  CHECK_THROWS_AS(cnf::CnfFormula(1, {}), ValidationError);            // no clauses
  CHECK_THROWS_AS(cnf::CnfFormula(1, {{}}), ValidationError);          // empty clause
  CHECK_THROWS_AS(cnf::CnfFormula(1, {{{1, false}}}), ValidationError);  // var out of range
  CHECK_THROWS_AS(cnf::CnfFormula(0, {{{0, false}}}), ValidationError);
}

TEST_CASE("3SAT flag rejects clauses of length != 3") {
  const cnf::Clause triple{{0, false}, {1, false}, {2, false}};
  CHECK_NOTHROW(cnf::CnfFormula(3, {triple}, cnf::CnfKind::three_sat));
  CHECK_THROWS_AS(cnf::CnfFormula(3, {{{0, false}}}, cnf::CnfKind::three_sat),
                  ValidationError);
  CHECK_THROWS_AS(
      cnf::CnfFormula(3, {{{0, false}, {1, false}, {2, false}, {0, true}}},
                      cnf::CnfKind::three_sat),
      ValidationError);
}

TEST_CASE("duplicate literals are preserved as parsed") {
  const auto f = cnf::parse_dimacs("p cnf 2 1\n1 1 -2 0\n");
  CHECK(f.clauses()[0].size() == 3);
  CHECK(f.clauses()[0][0] == f.clauses()[0][1]);
  CHECK(cnf::evaluate(f, {true, true}));
  CHECK_FALSE(cnf::evaluate(f, {false, true}));
}

TEST_CASE("evaluate on the worked example") {
  const auto f = example_formula();
  CHECK(cnf::evaluate(f, {true, false, true}));    // 101 satisfies
  CHECK_FALSE(cnf::evaluate(f, {true, true, true}));  // clause ~x+~y fails
  CHECK(cnf::evaluate(cnf::parse_dimacs("p cnf 1 1\n1 0\n"), {true}));
  CHECK_THROWS_AS(cnf::evaluate(f, {true, false}), ValidationError);
}

TEST_CASE("count_solutions and solutions on the worked example") {
  const auto f = example_formula();
  CHECK(cnf::count_solutions(f) == 4);

  const auto sols = cnf::solutions(f);
  REQUIRE(sols.size() == 4);
  CHECK(cnf::assignment_to_string(sols[0]) == "000");
  CHECK(cnf::assignment_to_string(sols[1]) == "011");
  CHECK(cnf::assignment_to_string(sols[2]) == "100");
  CHECK(cnf::assignment_to_string(sols[3]) == "101");
}

TEST_CASE("count_solutions degenerate formulas") {
  const auto contradiction = cnf::parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
  CHECK(cnf::count_solutions(contradiction) == 0);
  CHECK(cnf::solutions(contradiction).empty());

  const auto tautology = cnf::parse_dimacs("p cnf 1 1\n1 -1 0\n");
  CHECK(cnf::count_solutions(tautology) == 2);

  const auto unit = cnf::parse_dimacs("p cnf 1 1\n1 0\n");
  const auto sols = cnf::solutions(unit);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == cnf::Assignment{true});
}

TEST_CASE("exhaustive bound is enforced") {
  cnf::Clause clause{{0, false}, {1, false}, {2, false}};
  const cnf::CnfFormula f(30, {clause});
  CHECK_THROWS_AS(cnf::count_solutions(f), CapExceeded);
  CHECK_THROWS_AS(cnf::solutions(f), CapExceeded);
  CHECK_THROWS_AS(cnf::truth_table(f), CapExceeded);
  CHECK_NOTHROW(cnf::count_solutions(f, 30));
}

TEST_CASE("index packing is little-endian") {
  // index 6 = 110b: bit0 (x1) = 0, bit1 (x2) = 1, bit2 (x3) = 1
  const auto a = cnf::assignment_from_index(6, 3);
  CHECK(a == cnf::Assignment{false, true, true});
  CHECK(cnf::index_from_assignment(a) == 6);
  CHECK(cnf::assignment_to_string(a) == "011");
  for (std::uint64_t i = 0; i < 32; ++i) {
    CHECK(cnf::index_from_assignment(cnf::assignment_from_index(i, 5)) == i);
  }
}

TEST_CASE("oracle routes agree: evaluate vs count vs solutions vs truth_table") {
  Rng rng = make_rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> nv(1, 10);
    const int n = nv(rng);
    std::uniform_int_distribution<int> nc(1, 4 * n);
    const auto f = random_cnf(n, nc(rng), rng);

    const auto table = cnf::truth_table(f);
    const auto sols = cnf::solutions(f);
    CHECK(cnf::count_solutions(f) == sols.size());

    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const auto a = cnf::assignment_from_index(i, n);
      const bool expected = reference_evaluate(f, a);
      CHECK(cnf::evaluate(f, a) == expected);
      CHECK((table[i] != 0) == expected);
      if (expected) ++count;
    }
    CHECK(count == sols.size());

    // solutions is sorted by the big-endian string reading
    for (std::size_t i = 1; i < sols.size(); ++i) {
      CHECK(cnf::assignment_to_string(sols[i - 1]) <
            cnf::assignment_to_string(sols[i]));
    }
    // evaluate(f, a) == membership in solutions(f)
    for (const auto& s : sols) {
      CHECK(cnf::evaluate(f, s));
    }
  }
}
