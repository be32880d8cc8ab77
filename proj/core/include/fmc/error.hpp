#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fmc {

enum class ErrorCode {
  kSyntax,
  kInvalidName,
  kDuplicateFeature,
  kDuplicateAttribute,
  kUnknownFeature,
  kGroupTooSmall,
  kSelfConstraint,
  kCycle,
  kStructure,
  kUnsupportedConstruct,
  kUndeclaredName,
  kDuplicateDeclaration,
  kNameCollision,
  kVoidModel,
  kOverCap,
  kIo,
};

const char* to_string(ErrorCode code);

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised for malformed text input (feature-model DSL, configuration files,
// OWL functional syntax). The location is 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, SourceLocation location, const std::string& message);

  const SourceLocation& location() const noexcept { return location_; }
  // Message without the "line:column:" prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourceLocation location_;
  std::string detail_;
};

// A FeatureModel, Ontology or PropositionalFormula violated one of its
// structural invariants.
class ModelError : public Error {
 public:
  using Error::Error;
};

class CompileError : public Error {
 public:
  using Error::Error;
};

class AnalysisError : public Error {
 public:
  using Error::Error;
};

class ScaffoldError : public Error {
 public:
  using Error::Error;
};

}  // namespace fmc
