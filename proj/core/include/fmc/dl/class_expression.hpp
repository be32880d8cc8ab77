#pragma once

#include <span>
#include <string>
#include <vector>

namespace fmc::dl {

// A DL concept: named class, top, complement, n-ary intersection/union, or an
// existential/universal restriction over a named object property.
class ClassExpression {
 public:
  enum class Kind { kNamed, kThing, kComplement, kIntersection, kUnion, kSome, kAll };

  static ClassExpression named(std::string name);
  static ClassExpression thing();
  static ClassExpression complement(ClassExpression operand);
  // Both throw ModelError for fewer than two operands.
  static ClassExpression intersection(std::vector<ClassExpression> operands);
  static ClassExpression union_of(std::vector<ClassExpression> operands);
  static ClassExpression some(std::string property, ClassExpression filler);
  static ClassExpression all(std::string property, ClassExpression filler);

  Kind kind() const { return kind_; }
  bool is_named() const { return kind_ == Kind::kNamed; }

  // Class name for kNamed, property name for kSome/kAll, empty otherwise.
  const std::string& name() const { return name_; }
  // Operands for kIntersection/kUnion; the single operand or filler for
  // kComplement/kSome/kAll.
  std::span<const ClassExpression> operands() const { return operands_; }
  const ClassExpression& filler() const { return operands_.at(0); }

  bool operator==(const ClassExpression& other) const;

 private:
  ClassExpression(Kind kind, std::string name, std::vector<ClassExpression> operands);

  Kind kind_;
  std::string name_;
  std::vector<ClassExpression> operands_;
};

}  // namespace fmc::dl
