#pragma once

#include <cstdint>
#include <optional>

#include "fmc/propositional.hpp"

namespace fmc::analysis {

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
};

struct SolveResult {
  // Present iff the formula is satisfiable.
  std::optional<Assignment> assignment;
  SolveStats stats;

  bool satisfiable() const { return assignment.has_value(); }
};

// Complete DPLL: unit propagation, then branching on the unassigned variable
// that occurs in the most not-yet-satisfied clauses (ties to the lowest
// index), trying false before true, with chronological backtracking. Free
// variables are false in the returned assignment, which is re-checked
// against every clause before returning.
SolveResult solve(const PropositionalFormula& formula);

}  // namespace fmc::analysis
