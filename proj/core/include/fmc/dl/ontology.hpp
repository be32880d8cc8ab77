#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fmc/dl/class_expression.hpp"

namespace fmc::dl {

enum class EntityKind { kClass, kObjectProperty, kDataProperty };
enum class XsdDatatype { kString, kInteger, kDecimal, kBoolean, kDate };

const char* to_string(EntityKind kind);
// Local name, e.g. "decimal" for xsd:decimal.
const char* to_string(XsdDatatype datatype);
std::optional<XsdDatatype> xsd_from_string(std::string_view local_name);

struct Declaration {
  EntityKind kind;
  std::string name;

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

// sub ⊑ sup
struct SubClassOf {
  ClassExpression sub;
  ClassExpression sup;

  friend bool operator==(const SubClassOf&, const SubClassOf&) = default;
};

// first ≡ second
struct EquivalentClasses {
  ClassExpression first;
  ClassExpression second;

  friend bool operator==(const EquivalentClasses&, const EquivalentClasses&) = default;
};

// first ⊑ ¬second, kept binary.
struct DisjointClasses {
  std::string first;
  std::string second;

  friend bool operator==(const DisjointClasses&, const DisjointClasses&) = default;
};

// ⊤ ⊑ ∀property.range
struct ObjectPropertyRange {
  std::string property;
  ClassExpression range;

  friend bool operator==(const ObjectPropertyRange&, const ObjectPropertyRange&) = default;
};

struct DataPropertyDomain {
  std::string property;
  std::string domain;

  friend bool operator==(const DataPropertyDomain&, const DataPropertyDomain&) = default;
};

struct DataPropertyRange {
  std::string property;
  XsdDatatype range;

  friend bool operator==(const DataPropertyRange&, const DataPropertyRange&) = default;
};

using Axiom = std::variant<Declaration, SubClassOf, EquivalentClasses, DisjointClasses,
                           ObjectPropertyRange, DataPropertyDomain, DataPropertyRange>;

// An ordered axiom list under one IRI. The IRI doubles as the expansion of
// the default `:` prefix, so it normally ends in '#' or '/'.
class Ontology {
 public:
  explicit Ontology(std::string iri);
  Ontology(std::string iri, std::vector<Axiom> axioms);

  const std::string& iri() const { return iri_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }

  void add(Axiom axiom) { axioms_.push_back(std::move(axiom)); }
  void append(const std::vector<Axiom>& axioms);

  // Names declared with the given kind, in declaration order.
  std::vector<std::string> declared(EntityKind kind) const;
  bool is_declared(EntityKind kind, std::string_view name) const;

  // Throws ModelError when a name is declared twice for the same kind or an
  // axiom uses a name that lacks a declaration of the kind its position needs.
  void validate() const;

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  std::string iri_;
  std::vector<Axiom> axioms_;
};

}  // namespace fmc::dl
