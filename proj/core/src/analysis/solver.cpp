#include "fmc/analysis/solver.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace fmc::analysis {
namespace {

class Dpll {
 public:
  explicit Dpll(const PropositionalFormula& formula)
      : formula_(formula), values_(formula.variable_count() + 1, 0) {}

  SolveResult run() {
    SolveResult result;
    for (;;) {
      if (!propagate()) {
        ++stats_.conflicts;
        if (!backtrack()) {
          result.stats = stats_;
          return result;
        }
        continue;
      }
      const int var = pick_branch_variable();
      if (var == 0) break;
      ++stats_.decisions;
      decisions_.push_back(Decision{var, false, trail_.size()});
      assign(-var);
    }

    Assignment assignment(formula_.variable_count(), false);
    for (std::size_t v = 1; v < values_.size(); ++v) assignment[v - 1] = values_[v] > 0;
    if (!formula_.satisfied_by(assignment)) {
      throw std::logic_error("solver produced an assignment that violates a clause");
    }
    result.assignment = std::move(assignment);
    result.stats = stats_;
    return result;
  }

 private:
  struct Decision {
    int variable;
    bool flipped;
    std::size_t trail_size;
  };

  // +1 satisfied, -1 falsified, 0 undetermined.
  int value(Literal lit) const {
    const int v = values_[static_cast<std::size_t>(std::abs(lit))];
    return lit > 0 ? v : -v;
  }

  void assign(Literal lit) {
    values_[static_cast<std::size_t>(std::abs(lit))] = static_cast<signed char>(lit > 0 ? 1 : -1);
    trail_.push_back(lit);
  }

  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      values_[static_cast<std::size_t>(std::abs(trail_.back()))] = 0;
      trail_.pop_back();
    }
  }

  // False on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& clause : formula_.clauses()) {
        Literal unit = 0;
        std::size_t open = 0;
        bool satisfied = false;
        for (Literal lit : clause) {
          const int v = value(lit);
          if (v > 0) {
            satisfied = true;
            break;
          }
          if (v == 0) {
            ++open;
            unit = lit;
          }
        }
        if (satisfied) continue;
        if (open == 0) return false;
        if (open == 1) {
          ++stats_.propagations;
          assign(unit);
          changed = true;
        }
      }
    }
    return true;
  }

  // Flips the most recent unflipped decision. False when none is left.
  bool backtrack() {
    while (!decisions_.empty()) {
      Decision& d = decisions_.back();
      undo_to(d.trail_size);
      if (!d.flipped) {
        d.flipped = true;
        assign(d.variable);
        return true;
      }
      decisions_.pop_back();
    }
    return false;
  }

  // 0 when every clause is satisfied.
  int pick_branch_variable() {
    counts_.assign(values_.size(), 0);
    bool any_open = false;
    for (const Clause& clause : formula_.clauses()) {
      bool satisfied = false;
      for (Literal lit : clause) {
        if (value(lit) > 0) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      any_open = true;
      for (Literal lit : clause) {
        if (value(lit) == 0) ++counts_[static_cast<std::size_t>(std::abs(lit))];
      }
    }
    if (!any_open) return 0;
    std::size_t best = 0;
    for (std::size_t v = 1; v < counts_.size(); ++v) {
      if (counts_[v] > (best == 0 ? 0 : counts_[best])) best = v;
    }
    return static_cast<int>(best);
  }

  const PropositionalFormula& formula_;
  std::vector<signed char> values_;
  std::vector<Literal> trail_;
  std::vector<Decision> decisions_;
  std::vector<std::size_t> counts_;
  SolveStats stats_;
};

}  // namespace

SolveResult solve(const PropositionalFormula& formula) { return Dpll(formula).run(); }

}  // namespace fmc::analysis
