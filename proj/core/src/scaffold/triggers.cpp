#include "fmc/scaffold/triggers.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "fmc/error.hpp"

namespace fmc::scaffold {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const char* to_string(LogicKind kind) {
  switch (kind) {
    case LogicKind::kSum: return "Sum";
    case LogicKind::kCount: return "Count";
    case LogicKind::kAverage: return "Average";
  }
  return "?";
}

std::optional<LogicKind> logic_from_string(std::string_view text) {
  for (auto k : {LogicKind::kSum, LogicKind::kCount, LogicKind::kAverage}) {
    if (lower(text) == lower(to_string(k))) return k;
  }
  return std::nullopt;
}

TriggerRegistry TriggerRegistry::defaults() {
  TriggerRegistry r;
  r.add("total", LogicKind::kSum);
  r.add("count", LogicKind::kCount);
  r.add("average", LogicKind::kAverage);
  return r;
}

TriggerRegistry TriggerRegistry::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ErrorCode::kSyntax, SourceLocation{1, e.byte},
                     std::string("invalid trigger registry JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(ErrorCode::kSyntax, SourceLocation{1, 1},
                     "trigger registry must be a JSON object");
  }
  TriggerRegistry r;
  for (const auto& [pattern, value] : doc.items()) {
    std::optional<LogicKind> kind;
    if (value.is_string()) kind = logic_from_string(value.get<std::string>());
    if (!kind) {
      throw ParseError(ErrorCode::kSyntax, SourceLocation{1, 1},
                       "trigger '" + pattern + "' must map to \"Sum\", \"Count\" or \"Average\"");
    }
    r.add(pattern, *kind);
  }
  return r;
}

void TriggerRegistry::add(std::string_view pattern, LogicKind kind) {
  if (pattern.empty()) throw ScaffoldError(ErrorCode::kStructure, "empty trigger pattern");
  if (!entries_.emplace(lower(pattern), kind).second) {
    throw ScaffoldError(ErrorCode::kDuplicateDeclaration,
                        "trigger pattern '" + std::string(pattern) + "' is registered twice");
  }
}

std::optional<LogicKind> TriggerRegistry::match(std::string_view field_name) const {
  auto it = entries_.find(lower(field_name));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace fmc::scaffold
