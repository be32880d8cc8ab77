#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmc/dl/ontology.hpp"
#include "fmc/feature_model.hpp"

namespace fmc::owl {

// Entity names derived from a feature name F: the class F, its rule class
// FRule and the object property hasF.
std::string class_name(const Feature& feature);
std::string rule_class_name(const Feature& feature);
std::string property_name(const Feature& feature);

// Class F, class FRule, object property hasF, range(hasF) = F and
// FRule ≡ ∃hasF.F, in that order.
std::vector<dl::Axiom> emit_feature_base(const Feature& feature);

// ParentRule ⊑ ∃hasChild.Child
dl::Axiom emit_mandatory(const Feature& parent, const Feature& child);

// Optional children add nothing beyond their own base axioms.
std::vector<dl::Axiom> emit_optional(const Feature& parent, const Feature& child);

// Source ⊑ ∃hasTarget.Target, on the feature class itself.
dl::Axiom emit_requires(const Feature& source, const Feature& target);

// ParentRule ⊑ ⊔ ∃hasBi.Bi over the group members.
dl::Axiom emit_or(const FeatureModel& model, const Group& group);

// The or axiom followed by ParentRule ⊑ ¬(∃hasBi.Bi ⊓ ∃hasBj.Bj) for every
// member pair i < j.
std::vector<dl::Axiom> emit_alternative(const FeatureModel& model, const Group& group);

// Source ⊑ ¬∃hasTarget.Target
dl::Axiom emit_excludes(const Feature& source, const Feature& target);

// DisjointClasses(Fi, Fj) for all i < j in feature order.
std::vector<dl::Axiom> emit_disjointness(const FeatureModel& model);

// Per attribute: data property declaration, domain and xsd range.
std::vector<dl::Axiom> emit_attributes(const Feature& feature);

dl::XsdDatatype to_xsd(Datatype datatype);

std::string default_iri(const FeatureModel& model);

struct CompileOptions {
  // Defaults to default_iri(model).
  std::optional<std::string> iri;
};

// Base axioms for every feature, tree relations per parent in feature order,
// cross-tree constraints in declaration order, disjointness, attributes.
// Throws CompileError on class or data-property name collisions.
dl::Ontology compile(const FeatureModel& model, const CompileOptions& options = {});

}  // namespace fmc::owl
