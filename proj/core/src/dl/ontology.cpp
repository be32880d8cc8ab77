#include "fmc/dl/ontology.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "fmc/error.hpp"
#include "internal/overloaded.hpp"

namespace fmc::dl {
namespace {

using internal::Overloaded;

bool is_local_name(const std::string& name) {
  if (name.empty()) return false;
  auto word = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  if (!word(name.front())) return false;
  return std::all_of(name.begin(), name.end(),
                     [&](char c) { return word(c) || (c >= '0' && c <= '9'); });
}

void check_iri(const std::string& iri) {
  if (iri.empty()) throw ModelError(ErrorCode::kStructure, "ontology IRI is empty");
  for (char c : iri) {
    if (c == '<' || c == '>' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '"') {
      throw ModelError(ErrorCode::kStructure, "ontology IRI contains an illegal character");
    }
  }
}

class Checker {
 public:
  explicit Checker(const std::vector<Axiom>& axioms) {
    for (const Axiom& a : axioms) {
      if (const auto* d = std::get_if<Declaration>(&a)) {
        if (!is_local_name(d->name)) {
          throw ModelError(ErrorCode::kInvalidName, "'" + d->name + "' is not a valid local name");
        }
        if (!declared_.emplace(d->kind, d->name).second) {
          throw ModelError(ErrorCode::kDuplicateDeclaration,
                           std::string(to_string(d->kind)) + " '" + d->name +
                               "' is declared twice");
        }
      }
    }
  }

  void require(EntityKind kind, const std::string& name) const {
    if (!declared_.count({kind, name})) {
      throw ModelError(ErrorCode::kUndeclaredName,
                       std::string(to_string(kind)) + " '" + name + "' is not declared");
    }
  }

  void check(const ClassExpression& e) const {
    using K = ClassExpression::Kind;
    switch (e.kind()) {
      case K::kNamed: require(EntityKind::kClass, e.name()); break;
      case K::kThing: break;
      case K::kSome:
      case K::kAll: require(EntityKind::kObjectProperty, e.name()); [[fallthrough]];
      default:
        for (const ClassExpression& op : e.operands()) check(op);
    }
  }

  void check(const Axiom& axiom) const {
    std::visit(Overloaded{
                   [](const Declaration&) {},
                   [&](const SubClassOf& a) { check(a.sub); check(a.sup); },
                   [&](const EquivalentClasses& a) { check(a.first); check(a.second); },
                   [&](const DisjointClasses& a) {
                     require(EntityKind::kClass, a.first);
                     require(EntityKind::kClass, a.second);
                   },
                   [&](const ObjectPropertyRange& a) {
                     require(EntityKind::kObjectProperty, a.property);
                     check(a.range);
                   },
                   [&](const DataPropertyDomain& a) {
                     require(EntityKind::kDataProperty, a.property);
                     require(EntityKind::kClass, a.domain);
                   },
                   [&](const DataPropertyRange& a) {
                     require(EntityKind::kDataProperty, a.property);
                   },
               },
               axiom);
  }

 private:
  std::set<std::pair<EntityKind, std::string>> declared_;
};

}  // namespace

const char* to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::kClass: return "Class";
    case EntityKind::kObjectProperty: return "ObjectProperty";
    case EntityKind::kDataProperty: return "DataProperty";
  }
  return "?";
}

const char* to_string(XsdDatatype datatype) {
  switch (datatype) {
    case XsdDatatype::kString: return "string";
    case XsdDatatype::kInteger: return "integer";
    case XsdDatatype::kDecimal: return "decimal";
    case XsdDatatype::kBoolean: return "boolean";
    case XsdDatatype::kDate: return "date";
  }
  return "?";
}

std::optional<XsdDatatype> xsd_from_string(std::string_view local_name) {
  for (auto d : {XsdDatatype::kString, XsdDatatype::kInteger, XsdDatatype::kDecimal,
                 XsdDatatype::kBoolean, XsdDatatype::kDate}) {
    if (local_name == to_string(d)) return d;
  }
  return std::nullopt;
}

Ontology::Ontology(std::string iri) : iri_(std::move(iri)) { check_iri(iri_); }

Ontology::Ontology(std::string iri, std::vector<Axiom> axioms)
    : iri_(std::move(iri)), axioms_(std::move(axioms)) {
  check_iri(iri_);
}

void Ontology::append(const std::vector<Axiom>& axioms) {
  axioms_.insert(axioms_.end(), axioms.begin(), axioms.end());
}

std::vector<std::string> Ontology::declared(EntityKind kind) const {
  std::vector<std::string> names;
  for (const Axiom& a : axioms_) {
    if (const auto* d = std::get_if<Declaration>(&a); d && d->kind == kind) {
      names.push_back(d->name);
    }
  }
  return names;
}

bool Ontology::is_declared(EntityKind kind, std::string_view name) const {
  return std::any_of(axioms_.begin(), axioms_.end(), [&](const Axiom& a) {
    const auto* d = std::get_if<Declaration>(&a);
    return d && d->kind == kind && d->name == name;
  });
}

void Ontology::validate() const {
  Checker checker(axioms_);
  for (const Axiom& a : axioms_) checker.check(a);
}

}  // namespace fmc::dl
