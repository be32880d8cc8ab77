#pragma once

#include <string>
#include <string_view>

#include "fmc/dl/ontology.hpp"

namespace fmc::dl {

// Writes OWL 2 functional-style syntax, one axiom per line:
//
//   Prefix(:=<iri>)
//   Prefix(owl:=<http://www.w3.org/2002/07/owl#>)
//   Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)
//   Ontology(<iri>
//   Declaration(Class(:A))
//   ...
//   )
//
// The ontology is validated first; ModelError signals an undeclared name.
std::string serialize_functional(const Ontology& ontology);

// Number of non-axiom lines serialize_functional emits.
inline constexpr std::size_t kFunctionalSyntaxOverheadLines = 5;

// Reads the subset written by serialize_functional, with free whitespace.
// Throws ParseError with kSyntax for malformed text, kUnsupportedConstruct
// for well-formed OWL outside the subset, and ModelError if the result fails
// Ontology::validate().
Ontology parse_functional(std::string_view text);

}  // namespace fmc::dl
