#include "fmc/analysis/analysis.hpp"

#include <algorithm>
#include <cstdlib>

#include <json.hpp>

#include "fmc/analysis/solver.hpp"
#include "fmc/error.hpp"
#include "fmc/propositional.hpp"

namespace fmc::analysis {
namespace {

struct MaskClause {
  std::uint32_t positive = 0;
  std::uint32_t negative = 0;

  bool satisfied(std::uint32_t selected) const {
    return (selected & positive) != 0 || (~selected & negative) != 0;
  }
};

// Depth-first enumeration in id order. Clauses are checked as soon as their
// highest variable is decided, so failing branches are cut early.
class Counter {
 public:
  explicit Counter(const FeatureModel& model) : model_(model), by_last_(model.size()) {
    const PropositionalFormula formula = to_propositional(model);
    for (const Clause& clause : formula.clauses()) {
      MaskClause mask;
      std::size_t last = 0;
      for (Literal lit : clause) {
        const auto index = static_cast<std::size_t>(std::abs(lit) - 1);
        (lit > 0 ? mask.positive : mask.negative) |= std::uint32_t{1} << index;
        last = std::max(last, index);
      }
      by_last_[last].push_back(mask);
    }
  }

  std::uint64_t run() { return visit(0, 0); }

 private:
  std::uint64_t visit(std::size_t index, std::uint32_t selected) {
    if (index == model_.size()) return 1;
    const Feature& f = model_.feature(FeatureId{index});
    const bool parent_on = !f.parent || (selected >> f.parent->value) & 1U;
    std::uint64_t total = 0;
    total += try_value(index, selected);
    if (parent_on) total += try_value(index, selected | (std::uint32_t{1} << index));
    return total;
  }

  std::uint64_t try_value(std::size_t index, std::uint32_t selected) {
    for (const MaskClause& c : by_last_[index]) {
      if (!c.satisfied(selected)) return 0;
    }
    return visit(index + 1, selected);
  }

  const FeatureModel& model_;
  std::vector<std::vector<MaskClause>> by_last_;
};

}  // namespace

Consistency check_consistency(const FeatureModel& model) {
  return solve(to_propositional(model)).satisfiable() ? Consistency::kConsistent
                                                      : Consistency::kVoid;
}

std::vector<FeatureId> dead_features(const FeatureModel& model) {
  const PropositionalFormula formula = to_propositional(model);
  if (!solve(formula).satisfiable()) {
    throw AnalysisError(ErrorCode::kVoidModel,
                        "model '" + model.name(model.root()) + "' has no valid configuration");
  }
  std::vector<FeatureId> dead;
  for (const Feature& f : model.features()) {
    const Literal unit[] = {formula.variable_of(f.id)};
    if (!solve(formula.with_units(unit)).satisfiable()) dead.push_back(f.id);
  }
  return dead;
}

std::uint64_t count_configurations(const FeatureModel& model) {
  if (model.size() > kCountingCap) {
    throw AnalysisError(ErrorCode::kOverCap,
                        "model has " + std::to_string(model.size()) +
                            " features; configuration counting is capped at " +
                            std::to_string(kCountingCap));
  }
  return Counter(model).run();
}

AnalysisReport analyze(const FeatureModel& model) {
  AnalysisReport report;
  report.consistent = check_consistency(model) == Consistency::kConsistent;
  if (report.consistent) {
    for (FeatureId f : dead_features(model)) report.dead_features.push_back(model.name(f));
  }
  if (model.size() <= kCountingCap) report.configuration_count = count_configurations(model);
  return report;
}

std::string to_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["consistent"] = report.consistent;
  j["dead_features"] = report.dead_features;
  if (report.configuration_count) {
    j["configuration_count"] = *report.configuration_count;
  } else {
    j["configuration_count"] = nullptr;
  }
  return j.dump();
}

}  // namespace fmc::analysis
