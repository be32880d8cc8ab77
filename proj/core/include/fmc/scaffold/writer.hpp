#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fmc/scaffold/scaffold.hpp"

namespace fmc::scaffold {

enum class Flavor {
  kNeutral,
  // Adds a header to every file naming the Zotonic artifact it stands in for.
  kZotonicNotes,
};

struct WriteOptions {
  bool overwrite = false;
  Flavor flavor = Flavor::kNeutral;
};

// install_data.json:
//   {"site": ..., "categories": [{"name", "is_rule_class"}],
//    "predicates": [{"name", "valid_from": [...], "valid_to": [...]}]}
std::string render_install_data(const SiteScaffold& scaffold, Flavor flavor = Flavor::kNeutral);

// One `field: <name> (<datatype>)` line per field; computed fields carry a
// `readonly trigger=<Kind>` suffix.
std::string render_form_template(const FormSpec& form, Flavor flavor = Flavor::kNeutral);

// Relative path of a category's template stub.
std::filesystem::path form_template_path(const FormSpec& form);

// Phase 1: categories, predicates and predicate rules. Phase 2: form
// templates under templates/. Both create `dir` if needed, refuse to replace
// existing files unless options.overwrite is set (checked before anything is
// written), and throw ScaffoldError (kIo) on any filesystem failure. Return
// the written paths.
std::vector<std::filesystem::path> write_phase1(const SiteScaffold& scaffold,
                                                const std::filesystem::path& dir,
                                                const WriteOptions& options = {});
std::vector<std::filesystem::path> write_phase2(const SiteScaffold& scaffold,
                                                const std::filesystem::path& dir,
                                                const WriteOptions& options = {});

}  // namespace fmc::scaffold
