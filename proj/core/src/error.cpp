#include "fmc/error.hpp"

namespace fmc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax error";
    case ErrorCode::kInvalidName: return "invalid name";
    case ErrorCode::kDuplicateFeature: return "duplicate feature";
    case ErrorCode::kDuplicateAttribute: return "duplicate attribute";
    case ErrorCode::kUnknownFeature: return "unknown feature";
    case ErrorCode::kGroupTooSmall: return "group too small";
    case ErrorCode::kSelfConstraint: return "self constraint";
    case ErrorCode::kCycle: return "cycle";
    case ErrorCode::kStructure: return "malformed structure";
    case ErrorCode::kUnsupportedConstruct: return "unsupported construct";
    case ErrorCode::kUndeclaredName: return "undeclared name";
    case ErrorCode::kDuplicateDeclaration: return "duplicate declaration";
    case ErrorCode::kNameCollision: return "name collision";
    case ErrorCode::kVoidModel: return "void model";
    case ErrorCode::kOverCap: return "over enumeration cap";
    case ErrorCode::kIo: return "i/o error";
  }
  return "error";
}

ParseError::ParseError(ErrorCode code, SourceLocation location, const std::string& message)
    : Error(code, std::to_string(location.line) + ":" + std::to_string(location.column) + ": " +
                      message),
      location_(location),
      detail_(message) {}

}  // namespace fmc
