#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plie/hawkins.hpp"

namespace plie {

using Params = std::map<std::string, Scalar>;

struct ParamSpec {
  std::string name;
  Scalar default_value = 0;
  std::string doc;
};

struct CatalogInstance {
  LieAlgebra algebra;
  Cocycle cocycle;
  InnerProduct metric;
};

struct ExpectedFlags {
  bool jacobi_ok = true;
  bool cocycle_ok = true;
  bool dual_jacobi_ok = true;
  bool flat = true;
  bool metaflat = true;
  bool g_unimodular = true;
  bool dual_unimodular = true;
  bool modular_condition = true;
  StrongVerdict strongly_compatible = StrongVerdict::Yes;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<ParamSpec> parameters;
  std::function<CatalogInstance(const Params&)> builder;
  std::function<ExpectedFlags(const Params&)> expected;
  // Parameter sets exercised by `catalog check --all` and the test suite.
  std::vector<Params> sample_sets;
  // Domain constraints (e.g. lambda != 0, metric scale > 0). Violations are
  // rejected by fill_params with InputError.
  std::function<bool(const Params&)> constraints_ok;
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_list();
const CatalogEntry& catalog_get(const std::string& name);  // UnknownEntryError

bool flags_match(const ExpectedFlags& expected, const HawkinsReport& actual);

// Defaults merged with overrides; unknown names and constraint violations
// raise InputError.
Params fill_params(const CatalogEntry& entry, const Params& overrides);

struct GridPoint {
  Params params;
  bool admissible = false;      // analyze said deformable (ignoring primal
                                // unimodularity, which is not required)
  bool predicted = false;       // closed-form predicate, when the family has one
  HawkinsReport report;
};

struct GridAxis {
  std::string name;
  Scalar lo = 0, hi = 0, step = 1;
};

struct GridResult {
  std::vector<GridPoint> points;
  int admissible_count = 0;
  bool has_predicate = false;
  std::vector<Params> mismatches;  // admissible != predicted
};

// Families: "dim3" (a, b), "dim4" (a, b, c, d, e), "dim5.case2"
// (a1..a3, b1..b3, A..E). Parameters not named in axes stay at 0.
GridResult grid_classify(const std::string& family,
                         const std::vector<GridAxis>& axes);

}  // namespace plie
