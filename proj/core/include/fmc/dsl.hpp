#pragma once

#include <string>
#include <string_view>

#include "fmc/feature_model.hpp"

namespace fmc {

// Parses the block-structured feature-model language:
//
//   feature AISCO {
//     mandatory ProgramData { optional Periodic }
//     optional DonationData { attribute total : decimal }
//     alternative { Web Mobile }
//   }
//   constraints { DonationData requires Web }
//
// `#` starts a comment that runs to the end of the line. Throws ParseError
// carrying a 1-based line/column for syntax and model errors alike.
FeatureModel parse_model(std::string_view source);

// Canonical text for a model: attributes before children, each group printed
// in full at its first member. parse_model(print_model(m)) == m whenever
// features are numbered in preorder and the members of every group are
// adjacent among their owner's children; both hold for parsed models.
std::string print_model(const FeatureModel& model);

}  // namespace fmc
