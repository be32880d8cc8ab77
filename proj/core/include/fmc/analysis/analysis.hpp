#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fmc/feature_model.hpp"

namespace fmc::analysis {

enum class Consistency { kConsistent, kVoid };

// Consistent iff at least one valid configuration exists.
Consistency check_consistency(const FeatureModel& model);

// Features that appear in no valid configuration, in id order. One solver
// call per feature with that feature forced on. Throws AnalysisError
// (kVoidModel) for a void model.
std::vector<FeatureId> dead_features(const FeatureModel& model);

inline constexpr std::size_t kCountingCap = 24;

// Exact number of valid configurations by enumeration over the tree: a child
// is only branched on when its parent is selected. Throws AnalysisError
// (kOverCap) when the model has more than kCountingCap features.
std::uint64_t count_configurations(const FeatureModel& model);

struct AnalysisReport {
  bool consistent = false;
  // Empty for void models.
  std::vector<std::string> dead_features;
  // Absent when the model exceeds the counting cap.
  std::optional<std::uint64_t> configuration_count;
};

AnalysisReport analyze(const FeatureModel& model);

// {"consistent": bool, "dead_features": [names], "configuration_count": int|null}
std::string to_json(const AnalysisReport& report);

}  // namespace fmc::analysis
