#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fmc/configuration.hpp"
#include "fmc/dsl.hpp"
#include "fmc/error.hpp"
#include "generators.hpp"
#include "oracle.hpp"

namespace fmc {
namespace {

class ConfigurationTest : public ::testing::Test {
 protected:
  FeatureModel model = parse_model(R"(
    feature Shop {
      mandatory Catalog
      optional Payment {
        alternative { Card Cash }
      }
      or { Web Mobile }
    }
    constraints {
      Mobile requires Payment
      Cash excludes Web
    }
  )");

  Configuration config(std::string_view text) { return parse_configuration(model, text); }
  FeatureId id(const char* name) { return *model.find(name); }
};

TEST_F(ConfigurationTest, ValidConfiguration) {
  EXPECT_TRUE(validate_configuration(model, config("Shop\nCatalog\nWeb\n")).valid());
  EXPECT_THROW(config("Shop Catalog\n"), ParseError);
}

TEST_F(ConfigurationTest, ReportsEachRule) {
  auto v = validate_configuration(model, config("Catalog")).violations;
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0], (Violation{Rule::kRootSelected, {id("Shop")}}));

  v = validate_configuration(model, config("Shop\nWeb")).violations;
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (Violation{Rule::kMandatoryChild, {id("Catalog"), id("Shop")}}));
  EXPECT_EQ(describe(model, v[0]), "mandatory: Shop is selected without its mandatory child Catalog");

  v = validate_configuration(model, config("Shop\nCatalog\nCard\nWeb")).violations;
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, Rule::kChildImpliesParent);

  v = validate_configuration(model, config("Shop\nCatalog\nPayment\nWeb")).violations;
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, Rule::kAlternativeGroup);

  v = validate_configuration(model, config("Shop\nCatalog\nPayment\nCard\nCash\nMobile"))
          .violations;
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (Violation{Rule::kAlternativeGroup, {id("Payment"), id("Card"), id("Cash")}}));
  EXPECT_EQ(describe(model, v[0]),
            "alternative: Payment has more than one alternative selected (Card, Cash)");

  v = validate_configuration(model, config("Shop\nCatalog")).violations;
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, Rule::kOrGroup);

  v = validate_configuration(model, config("Shop\nCatalog\nMobile")).violations;
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (Violation{Rule::kRequires, {id("Mobile"), id("Payment")}}));
  EXPECT_EQ(describe(model, v[0]), "requires: Mobile requires Payment, which is not selected");

  v = validate_configuration(model, config("Shop\nCatalog\nPayment\nCash\nWeb")).violations;
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (Violation{Rule::kExcludes, {id("Cash"), id("Web")}}));
}

TEST_F(ConfigurationTest, ParseSkipsCommentsAndBlankLines) {
  Configuration c = config("# header\n\n  Shop  \nCatalog # why\n\r\nWeb\r\n");
  EXPECT_EQ(c.selected, (std::set<FeatureId>{id("Shop"), id("Catalog"), id("Web")}));
}

TEST_F(ConfigurationTest, ParseRejectsUnknownFeature) {
  try {
    config("Shop\n  Nope\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownFeature);
    EXPECT_EQ(e.location(), (SourceLocation{2, 3}));
  }
}

TEST_F(ConfigurationTest, UnknownIdThrows) {
  Configuration c;
  c.selected.insert(FeatureId{99});
  EXPECT_THROW(validate_configuration(model, c), ModelError);
}

TEST(ConfigurationProperty, AgreesWithOracle) {
  testing::Rng rng(5);
  for (int i = 0; i < 150; ++i) {
    FeatureModel m = testing::random_model(rng, {.max_features = 9});
    for (std::uint32_t s = 0; s < (1U << m.size()); ++s) {
      Configuration c;
      for (std::size_t f = 0; f < m.size(); ++f) {
        if ((s >> f) & 1U) c.selected.insert(FeatureId{f});
      }
      ASSERT_EQ(validate_configuration(m, c).valid(), testing::oracle::is_valid(m, s));
    }
  }
}

TEST(ConfigurationAisco, MinimalProductIsValid) {
  std::ifstream in(FMC_AISCO_MODEL);
  std::ostringstream s;
  s << in.rdbuf();
  FeatureModel m = parse_model(s.str());
  Configuration c =
      parse_configuration(m, "AISCO\nProgramData\nPublicationSystem\nFinancialReport\n");
  EXPECT_TRUE(validate_configuration(m, c).valid());
  c = parse_configuration(
      m, "AISCO\nProgramData\nPublicationSystem\nFinancialReport\nMemberNotification\n");
  auto r = validate_configuration(m, c);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].rule, Rule::kRequires);
}

}  // namespace
}  // namespace fmc
