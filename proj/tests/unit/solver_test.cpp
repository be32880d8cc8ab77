#include <gtest/gtest.h>

#include "fmc/analysis/solver.hpp"
#include "generators.hpp"
#include "oracle.hpp"

namespace fmc::analysis {
namespace {

TEST(Solver, TrivialCases) {
  EXPECT_TRUE(solve(PropositionalFormula(1, {})).satisfiable());
  EXPECT_TRUE(solve(PropositionalFormula(1, {{1}})).satisfiable());
  EXPECT_FALSE(solve(PropositionalFormula(1, {{1}, {-1}})).satisfiable());
}

TEST(Solver, ReturnsSatisfyingAssignment) {
  PropositionalFormula f(3, {{1, 2}, {-1, 3}, {-2, -3}, {-3, 1}});
  SolveResult r = solve(f);
  ASSERT_TRUE(r.satisfiable());
  EXPECT_TRUE(f.satisfied_by(*r.assignment));
}

TEST(Solver, PigeonholeThreeIntoTwoIsUnsat) {
  // Variable p*2+h+1 means pigeon p sits in hole h.
  std::vector<Clause> clauses;
  for (int p = 0; p < 3; ++p) clauses.push_back({p * 2 + 1, p * 2 + 2});
  for (int h = 0; h < 2; ++h) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) clauses.push_back({-(p * 2 + h + 1), -(q * 2 + h + 1)});
    }
  }
  SolveResult r = solve(PropositionalFormula(6, clauses));
  EXPECT_FALSE(r.satisfiable());
  EXPECT_GT(r.stats.conflicts, 0u);
}

TEST(Solver, AgreesWithTruthTable) {
  testing::Rng rng(424242);
  for (int i = 0; i < 1000; ++i) {
    PropositionalFormula f = testing::random_cnf(rng, 12);
    SolveResult r = solve(f);
    ASSERT_EQ(r.satisfiable(), testing::oracle::satisfiable(f)) << "case " << i;
    if (r.satisfiable()) {
      ASSERT_TRUE(f.satisfied_by(*r.assignment));
    }
  }
}

TEST(Solver, AgreesWithTruthTableOnTwoCnf) {
  testing::Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    PropositionalFormula f = testing::random_cnf(rng, 10, 2);
    ASSERT_EQ(solve(f).satisfiable(), testing::oracle::satisfiable(f)) << "case " << i;
  }
}

}  // namespace
}  // namespace fmc::analysis
