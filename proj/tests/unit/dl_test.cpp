#include <gtest/gtest.h>

#include "fmc/dl/class_expression.hpp"
#include "fmc/dl/functional_syntax.hpp"
#include "fmc/dl/ontology.hpp"
#include "fmc/error.hpp"
#include "generators.hpp"

namespace fmc::dl {
namespace {

using CE = ClassExpression;

Ontology small_ontology() {
  Ontology o("http://example.org/t#");
  o.add(Declaration{EntityKind::kClass, "A"});
  o.add(Declaration{EntityKind::kClass, "ARule"});
  o.add(Declaration{EntityKind::kObjectProperty, "hasA"});
  o.add(ObjectPropertyRange{"hasA", CE::named("A")});
  o.add(EquivalentClasses{CE::named("ARule"), CE::some("hasA", CE::named("A"))});
  return o;
}

TEST(ClassExpression, FactoriesAndEquality) {
  CE a = CE::named("A");
  EXPECT_TRUE(a.is_named());
  EXPECT_EQ(a.name(), "A");
  CE s = CE::some("p", a);
  EXPECT_EQ(s.kind(), CE::Kind::kSome);
  EXPECT_EQ(s.name(), "p");
  EXPECT_EQ(s.filler(), a);
  EXPECT_EQ(CE::union_of({a, CE::thing()}).operands().size(), 2u);
  EXPECT_NE(CE::union_of({a, CE::thing()}), CE::intersection({a, CE::thing()}));
  EXPECT_NE(CE::some("p", a), CE::all("p", a));
  EXPECT_THROW(CE::union_of({a}), ModelError);
  EXPECT_THROW(CE::intersection({}), ModelError);
}

TEST(Ontology, DeclaredAndValidate) {
  Ontology o = small_ontology();
  EXPECT_EQ(o.declared(EntityKind::kClass), (std::vector<std::string>{"A", "ARule"}));
  EXPECT_TRUE(o.is_declared(EntityKind::kObjectProperty, "hasA"));
  EXPECT_FALSE(o.is_declared(EntityKind::kClass, "hasA"));
  EXPECT_NO_THROW(o.validate());
}

TEST(Ontology, ValidateRejectsUndeclaredAndDuplicate) {
  Ontology o = small_ontology();
  o.add(SubClassOf{CE::named("A"), CE::some("hasB", CE::named("A"))});
  try {
    o.validate();
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndeclaredName);
  }

  Ontology d = small_ontology();
  d.add(Declaration{EntityKind::kClass, "A"});
  try {
    d.validate();
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateDeclaration);
  }

  Ontology wrong_kind = small_ontology();
  wrong_kind.add(DisjointClasses{"A", "hasA"});
  EXPECT_THROW(wrong_kind.validate(), ModelError);
}

TEST(FunctionalSyntax, SerializesSmallOntology) {
  EXPECT_EQ(serialize_functional(small_ontology()),
            "Prefix(:=<http://example.org/t#>)\n"
            "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
            "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
            "Ontology(<http://example.org/t#>\n"
            "Declaration(Class(:A))\n"
            "Declaration(Class(:ARule))\n"
            "Declaration(ObjectProperty(:hasA))\n"
            "ObjectPropertyRange(:hasA :A)\n"
            "EquivalentClasses(:ARule ObjectSomeValuesFrom(:hasA :A))\n"
            ")\n");
}

TEST(FunctionalSyntax, SerializesEveryConstructor) {
  Ontology o = small_ontology();
  o.add(Declaration{EntityKind::kDataProperty, "total"});
  o.add(SubClassOf{CE::named("ARule"),
                   CE::complement(CE::intersection(
                       {CE::some("hasA", CE::named("A")), CE::all("hasA", CE::thing())}))});
  o.add(SubClassOf{CE::named("A"), CE::union_of({CE::named("A"), CE::named("ARule")})});
  o.add(DisjointClasses{"A", "ARule"});
  o.add(DataPropertyDomain{"total", "A"});
  o.add(DataPropertyRange{"total", XsdDatatype::kDecimal});
  const std::string text = serialize_functional(o);
  EXPECT_NE(text.find("SubClassOf(:ARule ObjectComplementOf(ObjectIntersectionOf("
                      "ObjectSomeValuesFrom(:hasA :A) ObjectAllValuesFrom(:hasA owl:Thing))))"),
            std::string::npos);
  EXPECT_NE(text.find("SubClassOf(:A ObjectUnionOf(:A :ARule))"), std::string::npos);
  EXPECT_NE(text.find("DisjointClasses(:A :ARule)"), std::string::npos);
  EXPECT_NE(text.find("DataPropertyDomain(:total :A)"), std::string::npos);
  EXPECT_NE(text.find("DataPropertyRange(:total xsd:decimal)"), std::string::npos);
  EXPECT_EQ(parse_functional(text), o);
}

TEST(FunctionalSyntax, SerializeRejectsUndeclared) {
  Ontology o("http://example.org/t#");
  o.add(DisjointClasses{"A", "B"});
  EXPECT_THROW(serialize_functional(o), ModelError);
}

TEST(FunctionalSyntax, ParseToleratesWhitespace) {
  Ontology o = parse_functional(
      "Prefix( : = <http://example.org/t#> )\n"
      "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)   Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
      "Ontology( <http://example.org/t#>\n"
      "  Declaration( Class( :A ) ) Declaration(Class(:ARule))\n"
      "\tDeclaration(ObjectProperty(:hasA)) ObjectPropertyRange(:hasA :A)\n"
      "  EquivalentClasses(:ARule\n   ObjectSomeValuesFrom(:hasA :A))\n"
      ")");
  EXPECT_EQ(o, small_ontology());
}

TEST(FunctionalSyntax, ParseErrors) {
  const std::string head =
      "Prefix(:=<http://example.org/t#>)\nOntology(<http://example.org/t#>\n";
  auto code = [](const std::string& text) {
    try {
      parse_functional(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code(head + "Declaration(Class(:A))\n"), ErrorCode::kSyntax);
  EXPECT_EQ(code(head + "Declaration(Class(:A)\n)"), ErrorCode::kSyntax);
  EXPECT_EQ(code(head + "Declaration(Class(:A))\nSubClassOf(:A :A :A)\n)"), ErrorCode::kSyntax);
  EXPECT_EQ(code(head + "Declaration(Class(:A))\nAnnotationAssertion(:A :A)\n)"),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(code(head + "Declaration(Class(:A))\nObjectMinCardinality(1 :p :A)\n)"),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(code(head + "SubClassOf(:A :B)\n)"), ErrorCode::kUndeclaredName);
  EXPECT_EQ(code(head + "Declaration(Class(<http://other.org/x#A>))\n)"),
            ErrorCode::kUnsupportedConstruct);
  Ontology full = parse_functional(head + "Declaration(Class(<http://example.org/t#A>))\n)");
  EXPECT_TRUE(full.is_declared(EntityKind::kClass, "A"));
}

TEST(FunctionalSyntax, LineCountIsAxiomsPlusOverhead) {
  testing::Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    Ontology o = testing::random_ontology(rng);
    const std::string text = serialize_functional(o);
    const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    ASSERT_EQ(lines, o.axioms().size() + kFunctionalSyntaxOverheadLines);
  }
}

TEST(FunctionalSyntax, RoundTripProperty) {
  testing::Rng rng(1234);
  for (int i = 0; i < 300; ++i) {
    Ontology o = testing::random_ontology(rng);
    const std::string text = serialize_functional(o);
    Ontology back = parse_functional(text);
    ASSERT_EQ(back, o) << text;
    ASSERT_EQ(serialize_functional(back), text);
  }
}

}  // namespace
}  // namespace fmc::dl
