#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fmc/feature_model.hpp"

namespace fmc {

struct Configuration {
  std::set<FeatureId> selected;

  bool contains(FeatureId f) const { return selected.count(f) != 0; }
};

enum class Rule {
  kRootSelected,
  kChildImpliesParent,
  kMandatoryChild,
  kOrGroup,
  kAlternativeGroup,
  kRequires,
  kExcludes,
};

const char* to_string(Rule rule);

struct Violation {
  Rule rule;
  // Features involved, most relevant first: the child (then parent), the
  // group owner (then the selected members), or the constraint source/target.
  std::vector<FeatureId> features;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

// Checks config against every tree, group and cross-tree rule. Violations are
// reported in rule order: root, per-feature tree rules in id order, groups,
// then constraints in declaration order. Throws ModelError if config names a
// feature outside the model.
ValidationResult validate_configuration(const FeatureModel& model, const Configuration& config);

std::string describe(const FeatureModel& model, const Violation& violation);

// One feature name per line; blank lines and `#` comments are ignored.
// Unknown names throw ParseError at the offending line.
Configuration parse_configuration(const FeatureModel& model, std::string_view text);

}  // namespace fmc
