#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fmc/feature_model.hpp"

namespace fmc {

// A literal is a nonzero signed variable index: +v is "v true", -v is "v false".
using Literal = int;
using Clause = std::vector<Literal>;
// Indexed by variable - 1.
using Assignment = std::vector<bool>;

// CNF over variables 1..variable_count, each labelled with the feature it
// encodes. Construction sorts and deduplicates the literals of every clause
// and rejects empty clauses, tautologies and out-of-range indices.
class PropositionalFormula {
 public:
  // Variable v is labelled FeatureId{v - 1}.
  PropositionalFormula(std::size_t variable_count, std::vector<Clause> clauses);
  PropositionalFormula(std::vector<FeatureId> variable_features, std::vector<Clause> clauses);

  std::size_t variable_count() const { return variable_features_.size(); }
  std::span<const Clause> clauses() const { return clauses_; }

  FeatureId feature_of(int variable) const;
  int variable_of(FeatureId feature) const;

  bool satisfied_by(const Assignment& assignment) const;

  // Copy with extra unit clauses appended.
  PropositionalFormula with_units(std::span<const Literal> units) const;

 private:
  std::vector<FeatureId> variable_features_;
  std::vector<int> feature_variables_;  // indexed by FeatureId::value, 0 when unmapped
  std::vector<Clause> clauses_;
};

// Feature-model semantics as CNF. Feature i becomes variable i + 1.
//
//   root                      (r)
//   child => parent           (-c | p)
//   mandatory: parent => child (-p | c)
//   or group                  (-o | m1 | ... | mn)
//   alternative group         the or clause plus (-mi | -mj) for i < j
//   a requires b              (-a | b)
//   a excludes b              (-a | -b)
PropositionalFormula to_propositional(const FeatureModel& model);

}  // namespace fmc
