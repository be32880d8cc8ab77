#pragma once

#include <cstdint>
#include <vector>

#include "fmc/feature_model.hpp"
#include "fmc/propositional.hpp"

// Exhaustive reference implementations. They read the feature model
// directly and share no code with to_propositional, validate_configuration,
// the solver or the counter.
namespace fmc::testing::oracle {

// Bit i set means feature i is selected.
using Subset = std::uint32_t;

bool is_valid(const FeatureModel& model, Subset selected);

// All valid subsets of a model with at most 24 features, in increasing order.
std::vector<Subset> valid_configurations(const FeatureModel& model);

// Features contained in no valid configuration.
std::vector<FeatureId> dead_features(const FeatureModel& model);

// Truth-table satisfiability over all 2^n assignments (n <= 24).
bool satisfiable(const PropositionalFormula& formula);

}  // namespace fmc::testing::oracle
