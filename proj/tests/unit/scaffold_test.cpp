#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fmc/dsl.hpp"
#include "fmc/error.hpp"
#include "fmc/owl/compiler.hpp"
#include "fmc/scaffold/scaffold.hpp"
#include "fmc/scaffold/triggers.hpp"
#include "fmc/scaffold/writer.hpp"
#include "generators.hpp"

namespace fmc::scaffold {
namespace {

namespace fs = std::filesystem;
using CE = dl::ClassExpression;

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SiteScaffold from_source(std::string_view src, const GenerateOptions& options = {}) {
  return generate(owl::compile(parse_model(src)), TriggerRegistry::defaults(), options);
}

const Predicate& predicate(const SiteScaffold& s, std::string_view name) {
  auto it = std::find_if(s.predicates.begin(), s.predicates.end(),
                         [&](const Predicate& p) { return p.name == name; });
  if (it == s.predicates.end()) throw std::runtime_error("no predicate " + std::string(name));
  return *it;
}

const FormSpec& form(const SiteScaffold& s, std::string_view category) {
  auto it = std::find_if(s.forms.begin(), s.forms.end(),
                         [&](const FormSpec& f) { return f.category == category; });
  if (it == s.forms.end()) throw std::runtime_error("no form " + std::string(category));
  return *it;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("fmc_scaffold_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  fs::path dir;
};

TEST(Triggers, DefaultsAndMatching) {
  TriggerRegistry r = TriggerRegistry::defaults();
  EXPECT_EQ(r.size(), 3u);
  EXPECT_EQ(r.match("total"), LogicKind::kSum);
  EXPECT_EQ(r.match("TOTAL"), LogicKind::kSum);
  EXPECT_EQ(r.match("Count"), LogicKind::kCount);
  EXPECT_EQ(r.match("average"), LogicKind::kAverage);
  EXPECT_FALSE(r.match("total_amount"));
  EXPECT_FALSE(r.match("notes"));
  EXPECT_FALSE(TriggerRegistry().match("total"));
}

TEST(Triggers, FromJsonAndErrors) {
  TriggerRegistry r = TriggerRegistry::from_json(R"({"headcount": "count", "Sum_all": "Sum"})");
  EXPECT_EQ(r.match("HeadCount"), LogicKind::kCount);
  EXPECT_EQ(r.match("sum_all"), LogicKind::kSum);
  EXPECT_FALSE(r.match("total"));
  EXPECT_THROW(TriggerRegistry::from_json("{"), ParseError);
  EXPECT_THROW(TriggerRegistry::from_json(R"(["total"])"), ParseError);
  EXPECT_THROW(TriggerRegistry::from_json(R"({"total": "Median"})"), ParseError);
  EXPECT_THROW(TriggerRegistry::from_json(R"({"total": "Sum", "TOTAL": "Count"})"), ScaffoldError);
  TriggerRegistry d = TriggerRegistry::defaults();
  EXPECT_THROW(d.add("Total", LogicKind::kCount), ScaffoldError);
  EXPECT_THROW(d.add("", LogicKind::kCount), ScaffoldError);
  EXPECT_EQ(logic_from_string("AVERAGE"), LogicKind::kAverage);
  EXPECT_STREQ(to_string(LogicKind::kSum), "Sum");
}

TEST(Scaffold, AiscoCoverage) {
  dl::Ontology o = owl::compile(parse_model(slurp(FMC_AISCO_MODEL)));
  SiteScaffold s = generate(o, TriggerRegistry::defaults());
  EXPECT_EQ(s.site_name, "AISCO");
  EXPECT_EQ(s.categories.size(), o.declared(dl::EntityKind::kClass).size());
  EXPECT_EQ(s.predicates.size(), o.declared(dl::EntityKind::kObjectProperty).size());
  EXPECT_EQ(s.forms.size(), s.categories.size());

  const Predicate& donor = predicate(s, "hasDonor");
  EXPECT_EQ(donor.valid_from, (std::vector<std::string>{"MemberNotification"}));
  EXPECT_EQ(donor.valid_to, (std::vector<std::string>{"Donor"}));
  const Predicate& program = predicate(s, "hasProgramData");
  EXPECT_EQ(program.valid_from, (std::vector<std::string>{"AISCO"}));
  EXPECT_TRUE(predicate(s, "hasDonationData").valid_from.empty());

  const FormSpec& donation = form(s, "DonationData");
  ASSERT_EQ(donation.fields.size(), 1u);
  EXPECT_EQ(donation.fields[0],
            (FormField{"total", dl::XsdDatatype::kDecimal, LogicKind::kSum}));
  EXPECT_TRUE(form(s, "Donor").fields.empty());

  auto rule = std::find_if(s.categories.begin(), s.categories.end(),
                           [](const Category& c) { return c.name == "DonorRule"; });
  ASSERT_NE(rule, s.categories.end());
  EXPECT_TRUE(rule->is_rule_class);
  EXPECT_FALSE(s.categories.front().is_rule_class);
}

TEST(Scaffold, TotalTriggersSumNotesDoesNot) {
  SiteScaffold s = from_source(
      "feature A { optional B { attribute total : decimal attribute notes : string } }");
  const FormSpec& f = form(s, "B");
  ASSERT_EQ(f.fields.size(), 2u);
  EXPECT_EQ(f.fields[0].business_logic, LogicKind::kSum);
  EXPECT_FALSE(f.fields[1].business_logic);
}

TEST(Scaffold, GroupMembersGetOwnerAsDomain) {
  SiteScaffold s = from_source(
      "feature A { or { B C } optional X { alternative { Y Z } } } constraints { B excludes Y }");
  EXPECT_EQ(predicate(s, "hasB").valid_from, (std::vector<std::string>{"A"}));
  EXPECT_EQ(predicate(s, "hasY").valid_from, (std::vector<std::string>{"X"}));
  // Excludes only appears under a complement, so it adds no domain.
  EXPECT_EQ(predicate(s, "hasY").valid_to, (std::vector<std::string>{"Y"}));
}

TEST(Scaffold, SkipRuleClassesAndSiteName) {
  SiteScaffold s = from_source("feature A { mandatory B }",
                               GenerateOptions{.skip_rule_classes = true, .site_name = "demo"});
  EXPECT_EQ(s.site_name, "demo");
  ASSERT_EQ(s.categories.size(), 2u);
  EXPECT_EQ(s.categories[1].name, "B");
  EXPECT_EQ(predicate(s, "hasB").valid_from, (std::vector<std::string>{"A"}));
}

TEST(Scaffold, RejectsUnsupportedShapes) {
  dl::Ontology o("http://example.org/x#");
  o.add(dl::Declaration{dl::EntityKind::kClass, "A"});
  o.add(dl::Declaration{dl::EntityKind::kObjectProperty, "p"});
  EXPECT_THROW(generate(o, {}), ScaffoldError);  // no range
  o.add(dl::ObjectPropertyRange{"p", CE::union_of({CE::named("A"), CE::thing()})});
  EXPECT_THROW(generate(o, {}), ScaffoldError);  // range not a named class

  dl::Ontology d("http://example.org/x#");
  d.add(dl::Declaration{dl::EntityKind::kClass, "A"});
  d.add(dl::Declaration{dl::EntityKind::kDataProperty, "v"});
  d.add(dl::DataPropertyRange{"v", dl::XsdDatatype::kString});
  EXPECT_THROW(generate(d, {}), ScaffoldError);  // no domain
}

TEST(Scaffold, CoverageOnRandomModels) {
  testing::Rng rng(8080);
  for (int i = 0; i < 100; ++i) {
    dl::Ontology o = owl::compile(testing::random_model(rng));
    SiteScaffold s = generate(o, TriggerRegistry::defaults());
    ASSERT_EQ(s.categories.size(), o.declared(dl::EntityKind::kClass).size());
    ASSERT_EQ(s.predicates.size(), o.declared(dl::EntityKind::kObjectProperty).size());
    std::size_t fields = 0;
    for (const FormSpec& f : s.forms) fields += f.fields.size();
    ASSERT_EQ(fields, o.declared(dl::EntityKind::kDataProperty).size());
  }
}

TEST(Writer, RenderInstallData) {
  SiteScaffold s = from_source("feature A { mandatory B }");
  auto j = nlohmann::json::parse(render_install_data(s));
  EXPECT_EQ(j["site"], "A");
  ASSERT_EQ(j["categories"].size(), 4u);
  EXPECT_EQ(j["categories"][1]["name"], "ARule");
  EXPECT_EQ(j["categories"][1]["is_rule_class"], true);
  EXPECT_EQ(j["predicates"][1]["name"], "hasB");
  EXPECT_EQ(j["predicates"][1]["valid_from"], nlohmann::json::array({"A"}));
  EXPECT_FALSE(j.contains("$comment"));
  auto z = nlohmann::json::parse(render_install_data(s, Flavor::kZotonicNotes));
  EXPECT_TRUE(z.contains("$comment"));
  EXPECT_EQ(render_install_data(s), render_install_data(from_source("feature A { mandatory B }")));
}

TEST(Writer, RenderFormTemplate) {
  FormSpec f{"Donation",
             {{"total", dl::XsdDatatype::kDecimal, LogicKind::kSum},
              {"notes", dl::XsdDatatype::kString, std::nullopt}}};
  EXPECT_EQ(render_form_template(f),
            "category: Donation\n"
            "field: total (decimal) readonly trigger=Sum\n"
            "field: notes (string)\n");
  EXPECT_EQ(render_form_template(f, Flavor::kZotonicNotes).rfind("{# zotonic-notes:", 0), 0u);
  EXPECT_EQ(form_template_path(f), fs::path("templates") / "Donation_form.tpl.txt");
}

TEST_F(TempDir, WritesBothPhasesAndRefusesToClobber) {
  SiteScaffold s = from_source("feature A { optional B { attribute total : decimal } }");
  auto p1 = write_phase1(s, dir);
  auto p2 = write_phase2(s, dir);
  ASSERT_EQ(p1.size(), 1u);
  EXPECT_EQ(p2.size(), s.forms.size());
  EXPECT_EQ(slurp(dir / "install_data.json"), render_install_data(s));
  EXPECT_EQ(slurp(dir / "templates" / "B_form.tpl.txt"), render_form_template(form(s, "B")));

  try {
    write_phase1(s, dir);
    FAIL();
  } catch (const ScaffoldError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
  EXPECT_THROW(write_phase2(s, dir), ScaffoldError);
  EXPECT_NO_THROW(write_phase1(s, dir, {.overwrite = true}));
  EXPECT_NO_THROW(write_phase2(s, dir, {.overwrite = true}));
}

TEST_F(TempDir, UnwritableTargetIsIoError) {
  fs::create_directories(dir);
  std::ofstream(dir / "blocker") << "x";
  SiteScaffold s = from_source("feature A");
  EXPECT_THROW(write_phase1(s, dir / "blocker"), ScaffoldError);
}

}  // namespace
}  // namespace fmc::scaffold
