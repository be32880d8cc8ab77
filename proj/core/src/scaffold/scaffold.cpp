#include "fmc/scaffold/scaffold.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fmc/error.hpp"

namespace fmc::scaffold {
namespace {

using dl::ClassExpression;

[[noreturn]] void outside_subset(const std::string& message) {
  throw ScaffoldError(ErrorCode::kUnsupportedConstruct, message);
}

void push_unique(std::vector<std::string>& v, const std::string& s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

// Properties P with an existential ∃P.· in positive position.
void positive_existentials(const ClassExpression& e, std::vector<std::string>& out) {
  using K = ClassExpression::Kind;
  switch (e.kind()) {
    case K::kSome: push_unique(out, e.name()); break;
    case K::kUnion:
    case K::kIntersection:
      for (const ClassExpression& op : e.operands()) positive_existentials(op, out);
      break;
    default: break;
  }
}

std::string site_name_from_iri(const std::string& iri) {
  std::string s = iri;
  while (!s.empty() && (s.back() == '#' || s.back() == '/')) s.pop_back();
  auto slash = s.find_last_of("/#:");
  std::string name = slash == std::string::npos ? s : s.substr(slash + 1);
  return name.empty() ? "site" : name;
}

}  // namespace

SiteScaffold generate(const dl::Ontology& ontology, const TriggerRegistry& registry,
                      const GenerateOptions& options) {
  // Rule-class pattern: R ≡ ∃hasF.F identifies R as the rule class of F.
  std::map<std::string, std::string> rule_of;
  std::map<std::string, std::vector<std::string>> ranges;
  std::map<std::string, std::vector<std::string>> domains;
  std::map<std::string, std::vector<std::string>> data_domains;
  std::map<std::string, dl::XsdDatatype> data_ranges;
  std::vector<std::pair<std::string, const ClassExpression*>> subclass_axioms;

  for (const dl::Axiom& axiom : ontology.axioms()) {
    if (const auto* eq = std::get_if<dl::EquivalentClasses>(&axiom)) {
      if (eq->first.is_named() && eq->second.kind() == ClassExpression::Kind::kSome &&
          eq->second.filler().is_named()) {
        rule_of.emplace(eq->first.name(), eq->second.filler().name());
      }
    } else if (const auto* sub = std::get_if<dl::SubClassOf>(&axiom)) {
      if (sub->sub.is_named()) subclass_axioms.emplace_back(sub->sub.name(), &sub->sup);
    } else if (const auto* range = std::get_if<dl::ObjectPropertyRange>(&axiom)) {
      if (!range->range.is_named()) {
        outside_subset("range of '" + range->property + "' is not a named class");
      }
      push_unique(ranges[range->property], range->range.name());
    } else if (const auto* dd = std::get_if<dl::DataPropertyDomain>(&axiom)) {
      push_unique(data_domains[dd->property], dd->domain);
    } else if (const auto* dr = std::get_if<dl::DataPropertyRange>(&axiom)) {
      if (!data_ranges.emplace(dr->property, dr->range).second) {
        outside_subset("data property '" + dr->property + "' has more than one range");
      }
    }
  }

  for (const auto& [cls, sup] : subclass_axioms) {
    std::vector<std::string> properties;
    positive_existentials(*sup, properties);
    auto mapped = rule_of.find(cls);
    const std::string& subject = mapped == rule_of.end() ? cls : mapped->second;
    for (const std::string& p : properties) push_unique(domains[p], subject);
  }

  SiteScaffold site;
  site.site_name = options.site_name.value_or(site_name_from_iri(ontology.iri()));

  std::set<std::string> category_names;
  for (const std::string& cls : ontology.declared(dl::EntityKind::kClass)) {
    const bool is_rule = rule_of.count(cls) != 0;
    if (is_rule && options.skip_rule_classes) continue;
    site.categories.push_back(Category{cls, is_rule});
    category_names.insert(cls);
  }
  auto require_category = [&](const std::string& name, const std::string& context) {
    if (!category_names.count(name)) {
      outside_subset(context + " refers to '" + name + "', which is not a category");
    }
  };

  for (const std::string& p : ontology.declared(dl::EntityKind::kObjectProperty)) {
    auto r = ranges.find(p);
    if (r == ranges.end()) outside_subset("object property '" + p + "' has no range axiom");
    Predicate predicate{p, domains[p], r->second};
    for (const auto& c : predicate.valid_from) require_category(c, "predicate '" + p + "'");
    for (const auto& c : predicate.valid_to) require_category(c, "predicate '" + p + "'");
    site.predicates.push_back(std::move(predicate));
  }

  std::map<std::string, std::size_t> form_index;
  for (const Category& c : site.categories) {
    form_index.emplace(c.name, site.forms.size());
    site.forms.push_back(FormSpec{c.name, {}});
  }
  for (const std::string& p : ontology.declared(dl::EntityKind::kDataProperty)) {
    auto d = data_domains.find(p);
    if (d == data_domains.end()) outside_subset("data property '" + p + "' has no domain");
    auto r = data_ranges.find(p);
    if (r == data_ranges.end()) outside_subset("data property '" + p + "' has no range");
    for (const std::string& cls : d->second) {
      auto form = form_index.find(cls);
      if (form == form_index.end()) {
        // Domain is a rule class the caller chose to skip.
        if (rule_of.count(cls)) continue;
        outside_subset("data property '" + p + "' refers to '" + cls +
                       "', which is not a category");
      }
      site.forms[form->second].fields.push_back(FormField{p, r->second, registry.match(p)});
    }
  }
  return site;
}

}  // namespace fmc::scaffold
