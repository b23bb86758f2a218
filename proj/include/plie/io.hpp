#pragma once

#include <string>
#include <vector>

#include "plie/catalog.hpp"

namespace plie {

// On-disk description of one input: dimension, optional labels, sparse
// brackets (i < j), sparse cocycle terms (j < k), full Gram matrix.
struct BracketTerm {
  Scalar coeff;
  int k = 0;
  bool operator==(const BracketTerm&) const = default;
};
struct BracketEntry {
  int i = 0, j = 0;
  std::vector<BracketTerm> terms;
  bool operator==(const BracketEntry&) const = default;
};
struct CocycleTerm {
  Scalar coeff;
  int j = 0, k = 0;
  bool operator==(const CocycleTerm&) const = default;
};
struct CocycleEntry {
  int i = 0;
  std::vector<CocycleTerm> terms;
  bool operator==(const CocycleEntry&) const = default;
};

struct InputDocument {
  int dim = 0;
  std::vector<std::string> basis;          // optional; defaults e1..en
  std::vector<BracketEntry> brackets;
  std::vector<CocycleEntry> cocycle;
  std::vector<std::vector<Scalar>> metric; // n x n, entries like "3/2"

  bool operator==(const InputDocument&) const = default;
};

// Throws InputError with a field path ("metric not symmetric at (1,2)",
// "brackets[0].i out of range", ...). Structural validation only; Jacobi,
// cocycle and dual Jacobi failures are report flags, not parse errors.
InputDocument parse_document(const std::string& json_text);
std::string serialize_document(const InputDocument& doc);

InputDocument document_from_instance(const CatalogInstance& inst);
CatalogInstance instance_from_document(const InputDocument& doc);

std::string report_to_json(const HawkinsReport& report,
                           const std::vector<std::string>& labels = {});
std::string report_to_text(const HawkinsReport& report,
                           const std::vector<std::string>& labels = {});

}  // namespace plie
