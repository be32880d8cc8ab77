#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmc/dl/ontology.hpp"
#include "fmc/scaffold/triggers.hpp"

namespace fmc::scaffold {

struct Category {
  std::string name;
  bool is_rule_class = false;

  friend bool operator==(const Category&, const Category&) = default;
};

// A typed relation between pages. An empty valid_from leaves the subject
// category unrestricted.
struct Predicate {
  std::string name;
  std::vector<std::string> valid_from;
  std::vector<std::string> valid_to;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct FormField {
  std::string name;
  dl::XsdDatatype datatype = dl::XsdDatatype::kString;
  std::optional<LogicKind> business_logic;

  friend bool operator==(const FormField&, const FormField&) = default;
};

struct FormSpec {
  std::string category;
  std::vector<FormField> fields;

  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

struct SiteScaffold {
  std::string site_name;
  std::vector<Category> categories;
  std::vector<Predicate> predicates;
  // One per category, same order.
  std::vector<FormSpec> forms;

  friend bool operator==(const SiteScaffold&, const SiteScaffold&) = default;
};

struct GenerateOptions {
  bool skip_rule_classes = false;
  // Defaults to the local part of the ontology IRI's last path segment.
  std::optional<std::string> site_name;
};

// Ontology elements to site elements:
//   class            -> category (rule classes flagged)
//   object property  -> predicate; valid_to from its range, valid_from from
//                       every C with C ⊑ ∃P.· (directly or inside a union or
//                       intersection), a rule class C being replaced by the
//                       feature class it is equivalent to a restriction on
//   data property    -> form field on each of its domain categories
//
// Throws ScaffoldError for axioms outside the compiler's output shape.
SiteScaffold generate(const dl::Ontology& ontology, const TriggerRegistry& registry,
                      const GenerateOptions& options = {});

}  // namespace fmc::scaffold
