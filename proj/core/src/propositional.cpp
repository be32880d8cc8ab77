#include "fmc/propositional.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "fmc/error.hpp"

namespace fmc {
namespace {

Clause normalize(Clause clause, std::size_t variable_count) {
  if (clause.empty()) throw ModelError(ErrorCode::kStructure, "empty clause");
  for (Literal lit : clause) {
    const auto v = static_cast<std::size_t>(std::abs(lit));
    if (lit == 0 || v > variable_count) {
      throw ModelError(ErrorCode::kStructure,
                       "literal " + std::to_string(lit) + " is out of range");
    }
  }
  std::sort(clause.begin(), clause.end(), [](Literal a, Literal b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
  });
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 1; i < clause.size(); ++i) {
    if (clause[i] == -clause[i - 1]) {
      throw ModelError(ErrorCode::kStructure, "clause contains a literal and its negation");
    }
  }
  return clause;
}

std::vector<FeatureId> identity_labels(std::size_t n) {
  std::vector<FeatureId> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = FeatureId{i};
  return labels;
}

}  // namespace

PropositionalFormula::PropositionalFormula(std::size_t variable_count, std::vector<Clause> clauses)
    : PropositionalFormula(identity_labels(variable_count), std::move(clauses)) {}

PropositionalFormula::PropositionalFormula(std::vector<FeatureId> variable_features,
                                           std::vector<Clause> clauses)
    : variable_features_(std::move(variable_features)) {
  if (variable_features_.empty()) {
    throw ModelError(ErrorCode::kStructure, "formula needs at least one variable");
  }
  std::size_t max_feature = 0;
  for (FeatureId f : variable_features_) max_feature = std::max(max_feature, f.value);
  feature_variables_.assign(max_feature + 1, 0);
  for (std::size_t v = 0; v < variable_features_.size(); ++v) {
    int& slot = feature_variables_[variable_features_[v].value];
    if (slot != 0) throw ModelError(ErrorCode::kStructure, "variable map is not a bijection");
    slot = static_cast<int>(v + 1);
  }
  clauses_.reserve(clauses.size());
  for (Clause& c : clauses) clauses_.push_back(normalize(std::move(c), variable_count()));
}

FeatureId PropositionalFormula::feature_of(int variable) const {
  return variable_features_.at(static_cast<std::size_t>(variable - 1));
}

int PropositionalFormula::variable_of(FeatureId feature) const {
  int v = feature.value < feature_variables_.size() ? feature_variables_[feature.value] : 0;
  if (v == 0) throw ModelError(ErrorCode::kUnknownFeature, "feature has no variable");
  return v;
}

bool PropositionalFormula::satisfied_by(const Assignment& assignment) const {
  if (assignment.size() != variable_count()) return false;
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal lit) {
      return assignment[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0);
    });
  });
}

PropositionalFormula PropositionalFormula::with_units(std::span<const Literal> units) const {
  std::vector<Clause> clauses = clauses_;
  for (Literal u : units) clauses.push_back({u});
  return PropositionalFormula(variable_features_, std::move(clauses));
}

PropositionalFormula to_propositional(const FeatureModel& model) {
  auto var = [](FeatureId f) { return static_cast<Literal>(f.value + 1); };
  std::vector<Clause> clauses;
  clauses.push_back({var(model.root())});

  for (const Feature& f : model.features()) {
    if (!f.parent) continue;
    clauses.push_back({-var(f.id), var(*f.parent)});
    if (f.variability == Variability::kMandatory) clauses.push_back({-var(*f.parent), var(f.id)});
  }
  for (const Group& g : model.groups()) {
    Clause at_least_one{-var(g.owner)};
    for (FeatureId m : g.members) at_least_one.push_back(var(m));
    clauses.push_back(std::move(at_least_one));
    if (g.kind == GroupKind::kAlternative) {
      for (std::size_t i = 0; i < g.members.size(); ++i) {
        for (std::size_t j = i + 1; j < g.members.size(); ++j) {
          clauses.push_back({-var(g.members[i]), -var(g.members[j])});
        }
      }
    }
  }
  for (const CrossTreeConstraint& c : model.constraints()) {
    if (c.kind == ConstraintKind::kRequires) {
      clauses.push_back({-var(c.source), var(c.target)});
    } else {
      clauses.push_back({-var(c.source), -var(c.target)});
    }
  }
  std::vector<FeatureId> labels(model.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = FeatureId{i};
  return PropositionalFormula(std::move(labels), std::move(clauses));
}

}  // namespace fmc
