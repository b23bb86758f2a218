#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plie/errors.hpp"
#include "plie/io.hpp"

namespace {

using namespace plie;

// Greek parameter names are accepted on the command line as a convenience;
// the catalog itself uses the spelled-out ASCII names.
std::string normalize_param_name(const std::string& name) {
  if (name == "λ") return "lambda";
  if (name == "α") return "alpha";
  if (name == "β") return "beta";
  if (name == "γ") return "gamma";
  return name;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Params parse_params(const std::string& text) {
  Params params;
  if (text.empty()) return params;
  for (const std::string& piece : split(text, ',')) {
    auto eq = piece.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("parameter assignment \"" + piece +
                       "\" is not of the form name=value");
    std::string name = normalize_param_name(piece.substr(0, eq));
    params[name] = scalar_from_string(piece.substr(eq + 1));
  }
  return params;
}

// Axis spec "name=lo..hi/step". lo is everything before "..", so it may be a
// rational like -1/2. After ".." the '/'-separated tokens give hi and step:
// one token "2" means hi=2 step=1; two "2/1" mean hi=2 step=1; three
// "2/1/2" mean hi=2 step=1/2; four "3/2/1/4" mean hi=3/2 step=1/4.
GridAxis parse_axis(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw InputError("grid axis \"" + text + "\" is not of the form name=lo..hi/step");
  GridAxis axis;
  axis.name = normalize_param_name(text.substr(0, eq));
  std::string range = text.substr(eq + 1);
  auto dots = range.find("..");
  if (dots == std::string::npos)
    throw InputError("grid axis \"" + text + "\" needs a lo..hi range");
  axis.lo = scalar_from_string(range.substr(0, dots));
  std::vector<std::string> tail = split(range.substr(dots + 2), '/');
  switch (tail.size()) {
    case 1:
      axis.hi = scalar_from_string(tail[0]);
      axis.step = 1;
      break;
    case 2:
      axis.hi = scalar_from_string(tail[0]);
      axis.step = scalar_from_string(tail[1]);
      break;
    case 3:
      axis.hi = scalar_from_string(tail[0]);
      axis.step = scalar_from_string(tail[1] + "/" + tail[2]);
      break;
    case 4:
      axis.hi = scalar_from_string(tail[0] + "/" + tail[1]);
      axis.step = scalar_from_string(tail[2] + "/" + tail[3]);
      break;
    default:
      throw InputError("grid axis \"" + text + "\" has too many '/' tokens");
  }
  return axis;
}

std::vector<GridAxis> parse_grid(const std::string& text) {
  std::vector<GridAxis> axes;
  for (const std::string& piece : split(text, ','))
    axes.push_back(parse_axis(piece));
  return axes;
}

std::string params_to_string(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += " ";
    out += name + "=" + scalar_to_string(value);
  }
  return out;
}

int run_check(const std::string& file, const std::string& format) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot read file " << file << "\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  InputDocument doc = parse_document(buffer.str());
  CatalogInstance inst = instance_from_document(doc);
  HawkinsReport report = analyze(inst.algebra, inst.cocycle, inst.metric);
  if (format == "json")
    std::cout << report_to_json(report, inst.algebra.basis_labels);
  else
    std::cout << report_to_text(report, inst.algebra.basis_labels);
  return 0;
}

int run_catalog_list() {
  for (const std::string& name : catalog_list()) std::cout << name << "\n";
  return 0;
}

// Returns true when the derived flags match the expected ones.
bool check_one(const CatalogEntry& entry, const Params& overrides, bool verbose) {
  Params params = fill_params(entry, overrides);
  CatalogInstance inst = entry.builder(params);
  HawkinsReport report = analyze(inst.algebra, inst.cocycle, inst.metric);
  ExpectedFlags expected = entry.expected(params);
  bool ok = flags_match(expected, report);
  if (verbose) std::cout << report_to_text(report, inst.algebra.basis_labels);
  std::cout << entry.name;
  if (!params.empty()) std::cout << " [" << params_to_string(params) << "]";
  std::cout << ": " << (ok ? "MATCHES EXPECTED" : "MISMATCH") << "\n";
  return ok;
}

int run_catalog_check(const std::string& name, const std::string& params_text,
                      bool all) {
  const CatalogEntry& entry = catalog_get(name);
  if (all) {
    bool ok = true;
    std::vector<Params> sets = entry.sample_sets;
    if (sets.empty()) sets.push_back({});
    for (const Params& set : sets) ok = check_one(entry, set, false) && ok;
    return ok ? 0 : 1;
  }
  return check_one(entry, parse_params(params_text), true) ? 0 : 1;
}

int run_classify(const std::string& family, const std::string& grid,
                 const std::string& format) {
  GridResult result = grid_classify(family, parse_grid(grid));
  if (format == "json") {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["points"] = static_cast<int>(result.points.size());
    j["admissible_count"] = result.admissible_count;
    nlohmann::ordered_json admissible = nlohmann::ordered_json::array();
    for (const GridPoint& p : result.points) {
      if (!p.admissible) continue;
      nlohmann::ordered_json point;
      for (const auto& [k, v] : p.params) point[k] = scalar_to_string(v);
      admissible.push_back(point);
    }
    j["admissible"] = admissible;
    j["has_predicate"] = result.has_predicate;
    nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
    for (const Params& p : result.mismatches) {
      nlohmann::ordered_json point;
      for (const auto& [k, v] : p) point[k] = scalar_to_string(v);
      mismatches.push_back(point);
    }
    j["mismatches"] = mismatches;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family: " << family << "\n";
    std::cout << "points: " << result.points.size()
              << ", admissible: " << result.admissible_count << "\n";
    for (const GridPoint& p : result.points)
      if (p.admissible) std::cout << "  " << params_to_string(p.params) << "\n";
    if (result.has_predicate) {
      if (result.mismatches.empty()) {
        std::cout << "predicate diff: empty\n";
      } else {
        std::cout << "predicate diff: " << result.mismatches.size() << " points\n";
        for (const Params& p : result.mismatches)
          std::cout << "  " << params_to_string(p) << "\n";
      }
    }
  }
  return result.has_predicate && !result.mismatches.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact deformability tests for Riemannian Poisson-Lie groups"};
  app.require_subcommand(1);

  std::string check_file, check_format = "text";
  CLI::App* check = app.add_subcommand("check", "Analyze a JSON input document");
  check->add_option("file", check_file, "input document")->required();
  check->add_option("--format", check_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* catalog = app.add_subcommand("catalog", "Built-in example families");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "List entry names");
  std::string entry_name, params_text;
  bool check_all = false;
  CLI::App* ccheck =
      catalog->add_subcommand("check", "Re-derive an entry's expected flags");
  ccheck->add_option("name", entry_name, "catalog entry")->required();
  ccheck->add_option("--params", params_text, "overrides k=v,...");
  ccheck->add_flag("--all", check_all, "run every stored sample set");

  std::string family, grid, classify_format = "text";
  CLI::App* classify =
      app.add_subcommand("classify", "Scan a parameter grid for admissible points");
  classify->add_option("--family", family, "grid family")->required();
  classify->add_option("--grid", grid, "axes name=lo..hi/step,...")->required();
  classify->add_option("--format", classify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage problems share exit code 2 with input validation errors;
    // --help goes through here too and keeps exit code 0.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) return run_check(check_file, check_format);
    if (app.got_subcommand(catalog)) {
      if (catalog->got_subcommand(list)) return run_catalog_list();
      return run_catalog_check(entry_name, params_text, check_all);
    }
    return run_classify(family, grid, classify_format);
  } catch (const UnknownEntryError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
