#include "fmc/owl/compiler.hpp"

#include <map>
#include <set>

#include "fmc/error.hpp"

namespace fmc::owl {
namespace {

using dl::ClassExpression;

ClassExpression has(const Feature& f) {
  return ClassExpression::some(property_name(f), ClassExpression::named(class_name(f)));
}

std::vector<ClassExpression> member_restrictions(const FeatureModel& model, const Group& group) {
  std::vector<ClassExpression> ops;
  ops.reserve(group.members.size());
  for (FeatureId m : group.members) ops.push_back(has(model.feature(m)));
  return ops;
}

}  // namespace

std::string class_name(const Feature& feature) { return feature.name; }
std::string rule_class_name(const Feature& feature) { return feature.name + "Rule"; }
std::string property_name(const Feature& feature) { return "has" + feature.name; }

std::vector<dl::Axiom> emit_feature_base(const Feature& f) {
  return {
      dl::Declaration{dl::EntityKind::kClass, class_name(f)},
      dl::Declaration{dl::EntityKind::kClass, rule_class_name(f)},
      dl::Declaration{dl::EntityKind::kObjectProperty, property_name(f)},
      dl::ObjectPropertyRange{property_name(f), ClassExpression::named(class_name(f))},
      dl::EquivalentClasses{ClassExpression::named(rule_class_name(f)), has(f)},
  };
}

dl::Axiom emit_mandatory(const Feature& parent, const Feature& child) {
  return dl::SubClassOf{ClassExpression::named(rule_class_name(parent)), has(child)};
}

std::vector<dl::Axiom> emit_optional(const Feature&, const Feature&) { return {}; }

dl::Axiom emit_requires(const Feature& source, const Feature& target) {
  return dl::SubClassOf{ClassExpression::named(class_name(source)), has(target)};
}

dl::Axiom emit_or(const FeatureModel& model, const Group& group) {
  return dl::SubClassOf{ClassExpression::named(rule_class_name(model.feature(group.owner))),
                        ClassExpression::union_of(member_restrictions(model, group))};
}

std::vector<dl::Axiom> emit_alternative(const FeatureModel& model, const Group& group) {
  std::vector<dl::Axiom> axioms{emit_or(model, group)};
  const auto owner = ClassExpression::named(rule_class_name(model.feature(group.owner)));
  const auto ops = member_restrictions(model, group);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      axioms.push_back(dl::SubClassOf{
          owner, ClassExpression::complement(ClassExpression::intersection({ops[i], ops[j]}))});
    }
  }
  return axioms;
}

dl::Axiom emit_excludes(const Feature& source, const Feature& target) {
  return dl::SubClassOf{ClassExpression::named(class_name(source)),
                        ClassExpression::complement(has(target))};
}

std::vector<dl::Axiom> emit_disjointness(const FeatureModel& model) {
  std::vector<dl::Axiom> axioms;
  const auto features = model.features();
  axioms.reserve(features.size() * (features.size() - 1) / 2);
  for (std::size_t i = 0; i < features.size(); ++i) {
    for (std::size_t j = i + 1; j < features.size(); ++j) {
      axioms.push_back(dl::DisjointClasses{class_name(features[i]), class_name(features[j])});
    }
  }
  return axioms;
}

dl::XsdDatatype to_xsd(Datatype datatype) {
  switch (datatype) {
    case Datatype::kString: return dl::XsdDatatype::kString;
    case Datatype::kInteger: return dl::XsdDatatype::kInteger;
    case Datatype::kDecimal: return dl::XsdDatatype::kDecimal;
    case Datatype::kBoolean: return dl::XsdDatatype::kBoolean;
    case Datatype::kDate: return dl::XsdDatatype::kDate;
  }
  return dl::XsdDatatype::kString;
}

std::vector<dl::Axiom> emit_attributes(const Feature& feature) {
  std::vector<dl::Axiom> axioms;
  for (const Attribute& a : feature.attributes) {
    axioms.push_back(dl::Declaration{dl::EntityKind::kDataProperty, a.name});
    axioms.push_back(dl::DataPropertyDomain{a.name, class_name(feature)});
    axioms.push_back(dl::DataPropertyRange{a.name, to_xsd(a.datatype)});
  }
  return axioms;
}

std::string default_iri(const FeatureModel& model) {
  return "http://example.org/spl/" + model.name(model.root()) + "#";
}

dl::Ontology compile(const FeatureModel& model, const CompileOptions& options) {
  // Class names of one feature may shadow the rule class of another
  // (feature "A" beside feature "ARule").
  std::map<std::string, std::string> classes;
  for (const Feature& f : model.features()) {
    for (const std::string& name : {class_name(f), rule_class_name(f)}) {
      auto [it, inserted] = classes.emplace(name, f.name);
      if (!inserted) {
        throw CompileError(ErrorCode::kNameCollision,
                           "class '" + name + "' would be generated for both feature '" +
                               it->second + "' and feature '" + f.name + "'");
      }
    }
  }
  std::map<std::string, std::string> data_properties;
  std::map<std::string, std::string> object_properties;
  for (const Feature& f : model.features()) object_properties.emplace(property_name(f), f.name);
  for (const Feature& f : model.features()) {
    for (const Attribute& a : f.attributes) {
      // OWL 2 DL forbids punning between object and data properties.
      if (auto op = object_properties.find(a.name); op != object_properties.end()) {
        throw CompileError(ErrorCode::kNameCollision,
                           "data property '" + a.name + "' of feature '" + f.name +
                               "' clashes with the object property of feature '" + op->second +
                               "'");
      }
      auto [it, inserted] = data_properties.emplace(a.name, f.name);
      if (!inserted) {
        throw CompileError(ErrorCode::kNameCollision,
                           "data property '" + a.name + "' is declared by both '" + it->second +
                               "' and '" + f.name + "'");
      }
    }
  }

  dl::Ontology ontology(options.iri.value_or(default_iri(model)));
  for (const Feature& f : model.features()) ontology.append(emit_feature_base(f));

  for (const Feature& parent : model.features()) {
    std::set<GroupId> emitted;
    for (FeatureId child_id : model.children(parent.id)) {
      const Feature& child = model.feature(child_id);
      switch (child.variability) {
        case Variability::kMandatory: ontology.add(emit_mandatory(parent, child)); break;
        case Variability::kOptional: ontology.append(emit_optional(parent, child)); break;
        case Variability::kGroupMember: {
          if (!emitted.insert(*child.group).second) break;
          const Group& g = model.group(*child.group);
          if (g.kind == GroupKind::kOr) {
            ontology.add(emit_or(model, g));
          } else {
            ontology.append(emit_alternative(model, g));
          }
          break;
        }
      }
    }
  }

  for (const CrossTreeConstraint& c : model.constraints()) {
    const Feature& s = model.feature(c.source);
    const Feature& t = model.feature(c.target);
    ontology.add(c.kind == ConstraintKind::kRequires ? emit_requires(s, t) : emit_excludes(s, t));
  }

  ontology.append(emit_disjointness(model));
  for (const Feature& f : model.features()) ontology.append(emit_attributes(f));

  ontology.validate();
  return ontology;
}

}  // namespace fmc::owl
