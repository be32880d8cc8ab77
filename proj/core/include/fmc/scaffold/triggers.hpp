#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace fmc::scaffold {

enum class LogicKind { kSum, kCount, kAverage };

const char* to_string(LogicKind kind);
std::optional<LogicKind> logic_from_string(std::string_view text);

// Maps data-property names to computed-field logic. Matching is exact and
// case-insensitive.
class TriggerRegistry {
 public:
  TriggerRegistry() = default;

  // {total -> Sum, count -> Count, average -> Average}
  static TriggerRegistry defaults();

  // A JSON object such as {"total": "Sum", "headcount": "Count"}. Throws
  // ParseError for malformed JSON or unknown logic kinds and ScaffoldError
  // for patterns that collide case-insensitively.
  static TriggerRegistry from_json(std::string_view text);

  // Throws ScaffoldError if the pattern is already registered.
  void add(std::string_view pattern, LogicKind kind);

  std::optional<LogicKind> match(std::string_view field_name) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, LogicKind> entries_;  // lower-cased pattern
};

}  // namespace fmc::scaffold
