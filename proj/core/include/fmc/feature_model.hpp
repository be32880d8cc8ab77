#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fmc {

struct FeatureId {
  std::size_t value = 0;

  friend auto operator<=>(const FeatureId&, const FeatureId&) = default;
};

struct GroupId {
  std::size_t value = 0;

  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

enum class Variability { kMandatory, kOptional, kGroupMember };
enum class GroupKind { kOr, kAlternative };
enum class ConstraintKind { kRequires, kExcludes };
enum class Datatype { kString, kInteger, kDecimal, kBoolean, kDate };

const char* to_string(Variability v);
const char* to_string(GroupKind k);
const char* to_string(ConstraintKind k);
const char* to_string(Datatype d);
std::optional<Datatype> datatype_from_string(std::string_view text);

struct Attribute {
  std::string name;
  Datatype datatype = Datatype::kString;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct Feature {
  FeatureId id;
  std::string name;
  std::optional<FeatureId> parent;
  Variability variability = Variability::kMandatory;
  std::optional<GroupId> group;
  std::vector<Attribute> attributes;

  friend bool operator==(const Feature&, const Feature&) = default;
};

struct Group {
  GroupId id;
  FeatureId owner;
  GroupKind kind = GroupKind::kOr;
  std::vector<FeatureId> members;

  friend bool operator==(const Group&, const Group&) = default;
};

struct CrossTreeConstraint {
  ConstraintKind kind = ConstraintKind::kRequires;
  FeatureId source;
  FeatureId target;

  friend bool operator==(const CrossTreeConstraint&, const CrossTreeConstraint&) = default;
};

// True for `[A-Za-z][A-Za-z0-9_]*` spellings that are not DSL keywords.
bool is_valid_identifier(std::string_view name);
bool is_keyword(std::string_view name);

// An immutable, validated feature tree plus cross-tree constraints.
//
// Feature ids are dense indices into features(); group ids index groups().
// Every non-root feature's parent has a smaller id than the feature itself,
// so iterating features() in order visits parents before children.
class FeatureModel {
 public:
  // Validates every structural invariant and throws ModelError on the first
  // violation. Parts are taken as-is: ids must equal their position.
  static FeatureModel create(std::vector<Feature> features, std::vector<Group> groups,
                             std::vector<CrossTreeConstraint> constraints);

  FeatureId root() const { return FeatureId{0}; }
  std::size_t size() const { return features_.size(); }

  std::span<const Feature> features() const { return features_; }
  std::span<const Group> groups() const { return groups_; }
  std::span<const CrossTreeConstraint> constraints() const { return constraints_; }

  const Feature& feature(FeatureId id) const;
  const Group& group(GroupId id) const;
  std::optional<FeatureId> find(std::string_view name) const;
  const std::string& name(FeatureId id) const { return feature(id).name; }

  // Children in id order.
  std::span<const FeatureId> children(FeatureId id) const;

  friend bool operator==(const FeatureModel& a, const FeatureModel& b) {
    return a.features_ == b.features_ && a.groups_ == b.groups_ &&
           a.constraints_ == b.constraints_;
  }

 private:
  FeatureModel() = default;

  std::vector<Feature> features_;
  std::vector<Group> groups_;
  std::vector<CrossTreeConstraint> constraints_;
  std::vector<std::vector<FeatureId>> children_;
};

// Incremental construction in declaration order. Name-level checks happen
// eagerly so that callers (the DSL parser) can attach a source location;
// build() runs the full invariant check.
class FeatureModelBuilder {
 public:
  explicit FeatureModelBuilder(std::string root_name);

  FeatureId add_child(FeatureId parent, std::string name, Variability variability);
  GroupId add_group(FeatureId owner, GroupKind kind);
  FeatureId add_group_member(GroupId group, std::string name);
  void add_attribute(FeatureId feature, Attribute attribute);
  void add_constraint(ConstraintKind kind, FeatureId source, FeatureId target);
  void add_constraint(ConstraintKind kind, std::string_view source, std::string_view target);

  std::optional<FeatureId> find(std::string_view name) const;
  FeatureId root() const { return FeatureId{0}; }

  FeatureModel build() const;

 private:
  FeatureId add_feature(std::string name, std::optional<FeatureId> parent,
                        Variability variability, std::optional<GroupId> group);
  void check_feature(FeatureId id) const;

  std::vector<Feature> features_;
  std::vector<Group> groups_;
  std::vector<CrossTreeConstraint> constraints_;
};

}  // namespace fmc
