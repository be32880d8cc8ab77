#include "fmc/dl/class_expression.hpp"

#include "fmc/error.hpp"

namespace fmc::dl {

ClassExpression::ClassExpression(Kind kind, std::string name,
                                 std::vector<ClassExpression> operands)
    : kind_(kind), name_(std::move(name)), operands_(std::move(operands)) {}

ClassExpression ClassExpression::named(std::string name) {
  return ClassExpression(Kind::kNamed, std::move(name), {});
}

ClassExpression ClassExpression::thing() { return ClassExpression(Kind::kThing, {}, {}); }

ClassExpression ClassExpression::complement(ClassExpression operand) {
  std::vector<ClassExpression> ops;
  ops.push_back(std::move(operand));
  return ClassExpression(Kind::kComplement, {}, std::move(ops));
}

ClassExpression ClassExpression::intersection(std::vector<ClassExpression> operands) {
  if (operands.size() < 2) {
    throw ModelError(ErrorCode::kStructure, "intersection needs at least two operands");
  }
  return ClassExpression(Kind::kIntersection, {}, std::move(operands));
}

ClassExpression ClassExpression::union_of(std::vector<ClassExpression> operands) {
  if (operands.size() < 2) {
    throw ModelError(ErrorCode::kStructure, "union needs at least two operands");
  }
  return ClassExpression(Kind::kUnion, {}, std::move(operands));
}

ClassExpression ClassExpression::some(std::string property, ClassExpression filler) {
  std::vector<ClassExpression> ops;
  ops.push_back(std::move(filler));
  return ClassExpression(Kind::kSome, std::move(property), std::move(ops));
}

ClassExpression ClassExpression::all(std::string property, ClassExpression filler) {
  std::vector<ClassExpression> ops;
  ops.push_back(std::move(filler));
  return ClassExpression(Kind::kAll, std::move(property), std::move(ops));
}

bool ClassExpression::operator==(const ClassExpression& other) const {
  return kind_ == other.kind_ && name_ == other.name_ && operands_ == other.operands_;
}

}  // namespace fmc::dl
