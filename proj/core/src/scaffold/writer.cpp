#include "fmc/scaffold/writer.hpp"

#include <fstream>
#include <system_error>

#include <json.hpp>

#include "fmc/error.hpp"

namespace fmc::scaffold {
namespace {

namespace fs = std::filesystem;

struct PendingFile {
  fs::path path;
  std::string content;
};

[[noreturn]] void io_error(const fs::path& path, const std::string& what) {
  throw ScaffoldError(ErrorCode::kIo, path.string() + ": " + what);
}

std::vector<fs::path> write_all(const fs::path& dir, const std::vector<PendingFile>& files,
                                const WriteOptions& options) {
  if (!options.overwrite) {
    for (const PendingFile& f : files) {
      std::error_code ec;
      if (fs::exists(dir / f.path, ec)) {
        io_error(dir / f.path, "already exists (pass overwrite to replace it)");
      }
    }
  }
  std::vector<fs::path> written;
  for (const PendingFile& f : files) {
    const fs::path target = dir / f.path;
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) io_error(target.parent_path(), "cannot create directory: " + ec.message());
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) io_error(target, "cannot open for writing");
    out << f.content;
    out.close();
    if (!out) io_error(target, "write failed");
    written.push_back(target);
  }
  return written;
}

}  // namespace

std::string render_install_data(const SiteScaffold& scaffold, Flavor flavor) {
  nlohmann::ordered_json doc;
  if (flavor == Flavor::kZotonicNotes) {
    doc["$comment"] =
        "zotonic-notes: mirrors the site's z_install_data module (category, predicate and "
        "predicate valid_from/valid_to entries)";
  }
  doc["site"] = scaffold.site_name;
  doc["categories"] = nlohmann::ordered_json::array();
  for (const Category& c : scaffold.categories) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["is_rule_class"] = c.is_rule_class;
    doc["categories"].push_back(std::move(entry));
  }
  doc["predicates"] = nlohmann::ordered_json::array();
  for (const Predicate& p : scaffold.predicates) {
    nlohmann::ordered_json entry;
    entry["name"] = p.name;
    entry["valid_from"] = p.valid_from;
    entry["valid_to"] = p.valid_to;
    doc["predicates"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string render_form_template(const FormSpec& form, Flavor flavor) {
  std::string out;
  if (flavor == Flavor::kZotonicNotes) {
    out += "{# zotonic-notes: mirrors the admin edit template for category " + form.category +
           "; each field becomes a category property #}\n";
  }
  out += "category: " + form.category + "\n";
  for (const FormField& f : form.fields) {
    out += "field: " + f.name + " (" + dl::to_string(f.datatype) + ")";
    if (f.business_logic) out += std::string(" readonly trigger=") + to_string(*f.business_logic);
    out += '\n';
  }
  return out;
}

std::filesystem::path form_template_path(const FormSpec& form) {
  return fs::path("templates") / (form.category + "_form.tpl.txt");
}

std::vector<std::filesystem::path> write_phase1(const SiteScaffold& scaffold,
                                                const std::filesystem::path& dir,
                                                const WriteOptions& options) {
  return write_all(dir, {{"install_data.json", render_install_data(scaffold, options.flavor)}},
                   options);
}

std::vector<std::filesystem::path> write_phase2(const SiteScaffold& scaffold,
                                                const std::filesystem::path& dir,
                                                const WriteOptions& options) {
  std::vector<PendingFile> files;
  files.reserve(scaffold.forms.size());
  for (const FormSpec& form : scaffold.forms) {
    files.push_back({form_template_path(form), render_form_template(form, options.flavor)});
  }
  return write_all(dir, files, options);
}

}  // namespace fmc::scaffold
