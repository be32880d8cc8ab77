#include "fmc/feature_model.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

#include "fmc/error.hpp"

namespace fmc {
namespace {

constexpr std::array<std::string_view, 9> kKeywords = {
    "feature", "mandatory", "optional", "or", "alternative",
    "attribute", "constraints", "requires", "excludes",
};

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void fail(ErrorCode code, const std::string& message) {
  throw ModelError(code, message);
}

void check_name(const std::string& name) {
  if (!is_valid_identifier(name)) {
    fail(ErrorCode::kInvalidName, "invalid feature name '" + name + "'");
  }
}

}  // namespace

const char* to_string(Variability v) {
  switch (v) {
    case Variability::kMandatory: return "mandatory";
    case Variability::kOptional: return "optional";
    case Variability::kGroupMember: return "group member";
  }
  return "?";
}

const char* to_string(GroupKind k) { return k == GroupKind::kOr ? "or" : "alternative"; }

const char* to_string(ConstraintKind k) {
  return k == ConstraintKind::kRequires ? "requires" : "excludes";
}

const char* to_string(Datatype d) {
  switch (d) {
    case Datatype::kString: return "string";
    case Datatype::kInteger: return "integer";
    case Datatype::kDecimal: return "decimal";
    case Datatype::kBoolean: return "boolean";
    case Datatype::kDate: return "date";
  }
  return "?";
}

std::optional<Datatype> datatype_from_string(std::string_view text) {
  for (auto d : {Datatype::kString, Datatype::kInteger, Datatype::kDecimal, Datatype::kBoolean,
                 Datatype::kDate}) {
    if (text == to_string(d)) return d;
  }
  return std::nullopt;
}

bool is_keyword(std::string_view name) {
  return std::find(kKeywords.begin(), kKeywords.end(), name) != kKeywords.end();
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !is_alpha(name.front())) return false;
  for (char c : name) {
    if (!is_alpha(c) && !is_digit(c) && c != '_') return false;
  }
  return !is_keyword(name);
}

// ---------------------------------------------------------------------------
// FeatureModel

FeatureModel FeatureModel::create(std::vector<Feature> features, std::vector<Group> groups,
                                  std::vector<CrossTreeConstraint> constraints) {
  if (features.empty()) fail(ErrorCode::kStructure, "feature model has no features");

  const std::size_t n = features.size();
  std::unordered_map<std::string, std::size_t> names;
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Feature& f = features[i];
    if (f.id.value != i) fail(ErrorCode::kStructure, "feature id does not match its position");
    check_name(f.name);
    if (!names.emplace(f.name, i).second) {
      fail(ErrorCode::kDuplicateFeature, "duplicate feature '" + f.name + "'");
    }
    if (!f.parent) {
      ++roots;
    } else if (f.parent->value >= n) {
      fail(ErrorCode::kUnknownFeature, "feature '" + f.name + "' has an unknown parent");
    }
    std::unordered_set<std::string> attrs;
    for (const Attribute& a : f.attributes) {
      if (!is_valid_identifier(a.name)) {
        fail(ErrorCode::kInvalidName, "invalid attribute name '" + a.name + "'");
      }
      if (!attrs.insert(a.name).second) {
        fail(ErrorCode::kDuplicateAttribute,
             "duplicate attribute '" + a.name + "' on feature '" + f.name + "'");
      }
    }
  }
  if (roots != 1) fail(ErrorCode::kStructure, "feature model must have exactly one root");

  // Cycle detection: follow parent links; any walk longer than n revisits a node.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t steps = 0;
    std::optional<FeatureId> cur = features[i].parent;
    while (cur) {
      if (++steps > n) {
        fail(ErrorCode::kCycle, "parent references of '" + features[i].name + "' form a cycle");
      }
      cur = features[cur->value].parent;
    }
  }
  if (features[0].parent) fail(ErrorCode::kStructure, "the root must be the first feature");
  for (std::size_t i = 1; i < n; ++i) {
    if (features[i].parent->value >= i) {
      fail(ErrorCode::kStructure,
           "feature '" + features[i].name + "' is listed before its parent");
    }
  }

  const Feature& root = features[0];
  if (root.variability != Variability::kMandatory || root.group) {
    fail(ErrorCode::kStructure, "the root feature must be mandatory and ungrouped");
  }

  for (std::size_t g = 0; g < groups.size(); ++g) {
    const Group& group = groups[g];
    if (group.id.value != g) fail(ErrorCode::kStructure, "group id does not match its position");
    if (group.owner.value >= n) fail(ErrorCode::kUnknownFeature, "group owner is unknown");
    if (group.members.size() < 2) {
      fail(ErrorCode::kGroupTooSmall, "group under '" + features[group.owner.value].name +
                                          "' has fewer than 2 members");
    }
    for (FeatureId m : group.members) {
      if (m.value >= n) fail(ErrorCode::kUnknownFeature, "group member is unknown");
      const Feature& f = features[m.value];
      if (f.variability != Variability::kGroupMember || f.group != group.id ||
          f.parent != group.owner) {
        fail(ErrorCode::kStructure, "feature '" + f.name + "' is not a member of its group");
      }
    }
  }
  for (const Feature& f : features) {
    const bool member = f.variability == Variability::kGroupMember;
    if (member != f.group.has_value()) {
      fail(ErrorCode::kStructure, "feature '" + f.name + "' has inconsistent group membership");
    }
    if (member) {
      if (f.group->value >= groups.size()) fail(ErrorCode::kStructure, "unknown group id");
      const auto& ms = groups[f.group->value].members;
      if (std::find(ms.begin(), ms.end(), f.id) == ms.end()) {
        fail(ErrorCode::kStructure, "feature '" + f.name + "' missing from its group");
      }
    }
  }

  for (const CrossTreeConstraint& c : constraints) {
    if (c.source.value >= n || c.target.value >= n) {
      fail(ErrorCode::kUnknownFeature, "constraint references an unknown feature");
    }
    if (c.source == c.target) {
      fail(ErrorCode::kSelfConstraint,
           "feature '" + features[c.source.value].name + "' constrains itself");
    }
  }

  FeatureModel model;
  model.children_.resize(n);
  for (std::size_t i = 1; i < n; ++i) {
    model.children_[features[i].parent->value].push_back(FeatureId{i});
  }
  model.features_ = std::move(features);
  model.groups_ = std::move(groups);
  model.constraints_ = std::move(constraints);
  return model;
}

const Feature& FeatureModel::feature(FeatureId id) const { return features_.at(id.value); }

const Group& FeatureModel::group(GroupId id) const { return groups_.at(id.value); }

std::optional<FeatureId> FeatureModel::find(std::string_view name) const {
  for (const Feature& f : features_) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

std::span<const FeatureId> FeatureModel::children(FeatureId id) const {
  return children_.at(id.value);
}

// ---------------------------------------------------------------------------
// FeatureModelBuilder

FeatureModelBuilder::FeatureModelBuilder(std::string root_name) {
  add_feature(std::move(root_name), std::nullopt, Variability::kMandatory, std::nullopt);
}

FeatureId FeatureModelBuilder::add_feature(std::string name, std::optional<FeatureId> parent,
                                           Variability variability,
                                           std::optional<GroupId> group) {
  check_name(name);
  if (find(name)) fail(ErrorCode::kDuplicateFeature, "duplicate feature '" + name + "'");
  FeatureId id{features_.size()};
  features_.push_back(Feature{id, std::move(name), parent, variability, group, {}});
  return id;
}

void FeatureModelBuilder::check_feature(FeatureId id) const {
  if (id.value >= features_.size()) fail(ErrorCode::kUnknownFeature, "unknown feature id");
}

FeatureId FeatureModelBuilder::add_child(FeatureId parent, std::string name,
                                         Variability variability) {
  check_feature(parent);
  if (variability == Variability::kGroupMember) {
    fail(ErrorCode::kStructure, "group members must be added through add_group_member");
  }
  return add_feature(std::move(name), parent, variability, std::nullopt);
}

GroupId FeatureModelBuilder::add_group(FeatureId owner, GroupKind kind) {
  check_feature(owner);
  GroupId id{groups_.size()};
  groups_.push_back(Group{id, owner, kind, {}});
  return id;
}

FeatureId FeatureModelBuilder::add_group_member(GroupId group, std::string name) {
  if (group.value >= groups_.size()) fail(ErrorCode::kStructure, "unknown group id");
  FeatureId id = add_feature(std::move(name), groups_[group.value].owner,
                             Variability::kGroupMember, group);
  groups_[group.value].members.push_back(id);
  return id;
}

void FeatureModelBuilder::add_attribute(FeatureId feature, Attribute attribute) {
  check_feature(feature);
  if (!is_valid_identifier(attribute.name)) {
    fail(ErrorCode::kInvalidName, "invalid attribute name '" + attribute.name + "'");
  }
  Feature& f = features_[feature.value];
  for (const Attribute& a : f.attributes) {
    if (a.name == attribute.name) {
      fail(ErrorCode::kDuplicateAttribute,
           "duplicate attribute '" + a.name + "' on feature '" + f.name + "'");
    }
  }
  f.attributes.push_back(std::move(attribute));
}

void FeatureModelBuilder::add_constraint(ConstraintKind kind, FeatureId source,
                                         FeatureId target) {
  check_feature(source);
  check_feature(target);
  if (source == target) {
    fail(ErrorCode::kSelfConstraint,
         "feature '" + features_[source.value].name + "' constrains itself");
  }
  constraints_.push_back(CrossTreeConstraint{kind, source, target});
}

void FeatureModelBuilder::add_constraint(ConstraintKind kind, std::string_view source,
                                         std::string_view target) {
  auto s = find(source);
  if (!s) fail(ErrorCode::kUnknownFeature, "unknown feature '" + std::string(source) + "'");
  auto t = find(target);
  if (!t) fail(ErrorCode::kUnknownFeature, "unknown feature '" + std::string(target) + "'");
  add_constraint(kind, *s, *t);
}

std::optional<FeatureId> FeatureModelBuilder::find(std::string_view name) const {
  for (const Feature& f : features_) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

FeatureModel FeatureModelBuilder::build() const {
  return FeatureModel::create(features_, groups_, constraints_);
}

}  // namespace fmc
