#include "fmc/configuration.hpp"

#include "fmc/error.hpp"

namespace fmc {

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::kRootSelected: return "root";
    case Rule::kChildImpliesParent: return "parent";
    case Rule::kMandatoryChild: return "mandatory";
    case Rule::kOrGroup: return "or";
    case Rule::kAlternativeGroup: return "alternative";
    case Rule::kRequires: return "requires";
    case Rule::kExcludes: return "excludes";
  }
  return "?";
}

ValidationResult validate_configuration(const FeatureModel& model, const Configuration& config) {
  for (FeatureId f : config.selected) {
    if (f.value >= model.size()) {
      throw ModelError(ErrorCode::kUnknownFeature,
                       "configuration references unknown feature id " + std::to_string(f.value));
    }
  }

  ValidationResult result;
  auto report = [&](Rule rule, std::vector<FeatureId> features) {
    result.violations.push_back(Violation{rule, std::move(features)});
  };

  if (!config.contains(model.root())) report(Rule::kRootSelected, {model.root()});

  for (const Feature& f : model.features()) {
    if (!f.parent) continue;
    const bool child = config.contains(f.id);
    const bool parent = config.contains(*f.parent);
    if (child && !parent) report(Rule::kChildImpliesParent, {f.id, *f.parent});
    if (f.variability == Variability::kMandatory && parent && !child) {
      report(Rule::kMandatoryChild, {f.id, *f.parent});
    }
  }

  for (const Group& g : model.groups()) {
    if (!config.contains(g.owner)) continue;
    std::vector<FeatureId> involved{g.owner};
    for (FeatureId m : g.members) {
      if (config.contains(m)) involved.push_back(m);
    }
    const std::size_t chosen = involved.size() - 1;
    if (chosen == 0 || (g.kind == GroupKind::kAlternative && chosen > 1)) {
      report(g.kind == GroupKind::kOr ? Rule::kOrGroup : Rule::kAlternativeGroup,
             std::move(involved));
    }
  }

  for (const CrossTreeConstraint& c : model.constraints()) {
    if (!config.contains(c.source)) continue;
    const bool target = config.contains(c.target);
    if (c.kind == ConstraintKind::kRequires && !target) {
      report(Rule::kRequires, {c.source, c.target});
    } else if (c.kind == ConstraintKind::kExcludes && target) {
      report(Rule::kExcludes, {c.source, c.target});
    }
  }
  return result;
}

std::string describe(const FeatureModel& model, const Violation& v) {
  auto name = [&](std::size_t i) { return model.name(v.features.at(i)); };
  switch (v.rule) {
    case Rule::kRootSelected:
      return "root: root feature " + name(0) + " is not selected";
    case Rule::kChildImpliesParent:
      return "parent: " + name(0) + " is selected without its parent " + name(1);
    case Rule::kMandatoryChild:
      return "mandatory: " + name(1) + " is selected without its mandatory child " + name(0);
    case Rule::kOrGroup:
      return "or: " + name(0) + " is selected but none of its or-group members are";
    case Rule::kAlternativeGroup: {
      if (v.features.size() == 1) {
        return "alternative: " + name(0) + " is selected but none of its alternatives are";
      }
      std::string chosen;
      for (std::size_t i = 1; i < v.features.size(); ++i) {
        chosen += (i > 1 ? ", " : "") + name(i);
      }
      return "alternative: " + name(0) + " has more than one alternative selected (" + chosen +
             ")";
    }
    case Rule::kRequires:
      return "requires: " + name(0) + " requires " + name(1) + ", which is not selected";
    case Rule::kExcludes:
      return "excludes: " + name(0) + " excludes " + name(1) + ", but both are selected";
  }
  return "unknown rule";
}

Configuration parse_configuration(const FeatureModel& model, std::string_view text) {
  Configuration config;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    std::string_view name = line.substr(first, last - first + 1);
    auto id = model.find(name);
    if (!id) {
      throw ParseError(ErrorCode::kUnknownFeature, SourceLocation{line_no, first + 1},
                       "unknown feature '" + std::string(name) + "'");
    }
    config.selected.insert(*id);
  }
  return config;
}

}  // namespace fmc
