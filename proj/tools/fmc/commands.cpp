#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmc/analysis/analysis.hpp"
#include "fmc/configuration.hpp"
#include "fmc/dl/functional_syntax.hpp"
#include "fmc/dsl.hpp"
#include "fmc/error.hpp"
#include "fmc/owl/compiler.hpp"
#include "fmc/scaffold/scaffold.hpp"
#include "fmc/scaffold/writer.hpp"

namespace fmc::cli {
namespace {

namespace fs = std::filesystem;

// Carries an exit code up to run() after the message has been printed.
struct Failure {
  int code;
};

struct Context {
  std::ostream& out;
  std::ostream& err;

  [[noreturn]] void fail(int code, const std::string& message) const {
    err << "fmc: " << message << '\n';
    throw Failure{code};
  }
};

std::string read_file(const Context& ctx, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ctx.fail(kExitParseError, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) ctx.fail(kExitParseError, path + ": read failed");
  return buffer.str();
}

FeatureModel load_model(const Context& ctx, const std::string& path) {
  const std::string source = read_file(ctx, path);
  try {
    return parse_model(source);
  } catch (const ParseError& e) {
    ctx.fail(kExitParseError, path + ":" + e.what());
  }
}

dl::Ontology compile_model(const Context& ctx, const FeatureModel& model,
                           const std::optional<std::string>& iri) {
  try {
    return owl::compile(model, owl::CompileOptions{iri});
  } catch (const Error& e) {
    ctx.fail(kExitCompileError, std::string("compile error: ") + e.what());
  }
}

scaffold::TriggerRegistry load_registry(const Context& ctx) {
  const char* path = std::getenv("FMC_TRIGGERS");
  if (path == nullptr || *path == '\0') return scaffold::TriggerRegistry::defaults();
  const std::string text = read_file(ctx, path);
  try {
    return scaffold::TriggerRegistry::from_json(text);
  } catch (const Error& e) {
    ctx.fail(kExitParseError, std::string(path) + " (FMC_TRIGGERS): " + e.what());
  }
}

// ---------------------------------------------------------------------------

struct CompileArgs {
  std::string input;
  std::string output;
  std::optional<std::string> iri;
};

int cmd_compile(const Context& ctx, const CompileArgs& args) {
  const FeatureModel model = load_model(ctx, args.input);
  const dl::Ontology ontology = compile_model(ctx, model, args.iri);
  const std::string text = dl::serialize_functional(ontology);
  std::ofstream out(args.output, std::ios::binary | std::ios::trunc);
  if (!out) ctx.fail(kExitOutputError, args.output + ": cannot open for writing");
  out << text;
  out.close();
  if (!out) ctx.fail(kExitOutputError, args.output + ": write failed");
  ctx.err << "fmc: wrote " << ontology.axioms().size() << " axioms to " << args.output << '\n';
  return kExitOk;
}

struct ModelArgs {
  std::string input;
  bool json = false;
};

int cmd_check(const Context& ctx, const ModelArgs& args) {
  const FeatureModel model = load_model(ctx, args.input);
  const analysis::AnalysisReport report = analysis::analyze(model);
  if (args.json) {
    ctx.out << analysis::to_json(report) << '\n';
  } else {
    std::string dead;
    for (const std::string& name : report.dead_features) dead += (dead.empty() ? "" : ", ") + name;
    ctx.out << std::left << std::setw(16) << "model:" << model.name(model.root()) << '\n'
            << std::setw(16) << "consistent:" << (report.consistent ? "yes" : "no (void model)")
            << '\n'
            << std::setw(16) << "dead features:" << (dead.empty() ? "none" : dead) << '\n'
            << std::setw(16) << "configurations:"
            << (report.configuration_count ? std::to_string(*report.configuration_count)
                                           : "not counted (over " +
                                                 std::to_string(analysis::kCountingCap) +
                                                 " features)")
            << '\n';
  }
  return report.consistent ? kExitOk : kExitVoidModel;
}

struct ValidateArgs {
  std::string input;
  std::string config;
  bool json = false;
};

int cmd_validate(const Context& ctx, const ValidateArgs& args) {
  const FeatureModel model = load_model(ctx, args.input);
  const std::string text = read_file(ctx, args.config);
  Configuration config;
  try {
    config = parse_configuration(model, text);
  } catch (const ParseError& e) {
    ctx.fail(kExitParseError, args.config + ":" + e.what());
  }
  const ValidationResult result = validate_configuration(model, config);
  if (args.json) {
    nlohmann::ordered_json doc;
    doc["valid"] = result.valid();
    doc["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : result.violations) {
      nlohmann::ordered_json entry;
      entry["rule"] = to_string(v.rule);
      entry["features"] = nlohmann::ordered_json::array();
      for (FeatureId f : v.features) entry["features"].push_back(model.name(f));
      entry["message"] = describe(model, v);
      doc["violations"].push_back(std::move(entry));
    }
    ctx.out << doc.dump() << '\n';
  } else if (result.valid()) {
    ctx.out << "valid\n";
  } else {
    for (const Violation& v : result.violations) ctx.out << describe(model, v) << '\n';
  }
  return result.valid() ? kExitOk : kExitInvalidConfig;
}

struct ScaffoldArgs {
  std::string input;
  std::string outdir;
  std::optional<std::string> iri;
  bool skip_rule_classes = false;
  std::string flavor = "neutral";
  bool overwrite = false;
};

int cmd_scaffold(const Context& ctx, const ScaffoldArgs& args) {
  const FeatureModel model = load_model(ctx, args.input);
  const scaffold::TriggerRegistry registry = load_registry(ctx);
  const dl::Ontology ontology = compile_model(ctx, model, args.iri);

  scaffold::SiteScaffold site;
  try {
    site = scaffold::generate(ontology, registry,
                              scaffold::GenerateOptions{args.skip_rule_classes, std::nullopt});
  } catch (const Error& e) {
    ctx.fail(kExitCompileError, std::string("scaffold error: ") + e.what());
  }

  const scaffold::WriteOptions options{
      args.overwrite,
      args.flavor == "zotonic-notes" ? scaffold::Flavor::kZotonicNotes : scaffold::Flavor::kNeutral};
  const fs::path dir(args.outdir);
  if (!options.overwrite) {
    // Both phases are checked up front so a collision never leaves a half-written site.
    std::vector<fs::path> targets{dir / "install_data.json"};
    for (const auto& form : site.forms) targets.push_back(dir / scaffold::form_template_path(form));
    for (const fs::path& p : targets) {
      std::error_code ec;
      if (fs::exists(p, ec)) {
        ctx.fail(kExitOutputError, p.string() + ": already exists (use --overwrite)");
      }
    }
  }
  try {
    const auto phase1 = scaffold::write_phase1(site, dir, options);
    const auto phase2 = scaffold::write_phase2(site, dir, options);
    ctx.err << "fmc: wrote " << phase1.size() + phase2.size() << " files to " << args.outdir
            << " (" << site.categories.size() << " categories, " << site.predicates.size()
            << " predicates)\n";
  } catch (const ScaffoldError& e) {
    ctx.fail(kExitOutputError, e.what());
  }
  return kExitOk;
}

int cmd_count(const Context& ctx, const ModelArgs& args) {
  const FeatureModel model = load_model(ctx, args.input);
  std::uint64_t count = 0;
  try {
    count = analysis::count_configurations(model);
  } catch (const AnalysisError& e) {
    ctx.fail(kExitAnalysisError, args.input + ": " + e.what());
  }
  if (args.json) {
    nlohmann::ordered_json doc;
    doc["configuration_count"] = count;
    ctx.out << doc.dump() << '\n';
  } else {
    ctx.out << count << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Feature-model compiler: DSL to OWL, consistency analysis, site scaffolds", "fmc"};
  app.require_subcommand(1);

  CompileArgs compile_args;
  auto* compile = app.add_subcommand("compile", "Compile a feature model to OWL functional syntax");
  compile->add_option("input", compile_args.input, "Feature model (.fm)")->required();
  compile->add_option("output", compile_args.output, "Output ontology (.ofn)")->required();
  compile->add_option("--iri", compile_args.iri, "Ontology IRI");

  ModelArgs check_args;
  auto* check = app.add_subcommand("check", "Report consistency, dead features and count");
  check->add_option("input", check_args.input, "Feature model (.fm)")->required();
  check->add_flag("--json", check_args.json, "Emit the report as JSON");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Check a configuration against a model");
  validate->add_option("input", validate_args.input, "Feature model (.fm)")->required();
  validate->add_option("config", validate_args.config, "One feature name per line")->required();
  validate->add_flag("--json", validate_args.json, "Emit violations as JSON");

  ScaffoldArgs scaffold_args;
  auto* scaffold = app.add_subcommand("scaffold", "Generate a site scaffold from a model");
  scaffold->add_option("input", scaffold_args.input, "Feature model (.fm)")->required();
  scaffold->add_option("outdir", scaffold_args.outdir, "Output directory")->required();
  scaffold->add_option("--iri", scaffold_args.iri, "Ontology IRI");
  scaffold->add_flag("--skip-rule-classes", scaffold_args.skip_rule_classes,
                     "Do not turn rule classes into categories");
  scaffold->add_option("--flavor", scaffold_args.flavor, "Output flavor")
      ->check(CLI::IsMember({"neutral", "zotonic-notes"}));
  scaffold->add_flag("--overwrite", scaffold_args.overwrite, "Replace existing files");

  ModelArgs count_args;
  auto* count = app.add_subcommand("count", "Count valid configurations");
  count->add_option("input", count_args.input, "Feature model (.fm)")->required();
  count->add_flag("--json", count_args.json, "Emit the count as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fmc: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kExitUsage;
  }

  try {
    if (compile->parsed()) return cmd_compile(ctx, compile_args);
    if (check->parsed()) return cmd_check(ctx, check_args);
    if (validate->parsed()) return cmd_validate(ctx, validate_args);
    if (scaffold->parsed()) return cmd_scaffold(ctx, scaffold_args);
    if (count->parsed()) return cmd_count(ctx, count_args);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}

}  // namespace fmc::cli
