#include "plie/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "plie/errors.hpp"

namespace plie {

namespace {

using Json = nlohmann::ordered_json;

std::string at(const std::string& field, size_t index) {
  return field + "[" + std::to_string(index) + "]";
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + " " + what);
}

int require_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "must be an integer");
  return j.get<int>();
}

Scalar require_rational(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "must be a rational written as a string");
  try {
    return scalar_from_string(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, std::string("is ") + e.what());
  }
}

int require_index(const Json& j, const std::string& path, int dim) {
  int v = require_int(j, path);
  if (v < 1 || v > dim) fail(path, "out of range");
  return v;
}

void reject_unknown_keys(const Json& j, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) fail(path.empty() ? "\"" + item.key() + "\""
                                  : path + ".\"" + item.key() + "\"",
                     "is not a recognized field");
  }
}

std::vector<std::string> default_labels(int dim) {
  std::vector<std::string> labels;
  for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

}  // namespace

InputDocument parse_document(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("top-level value must be an object");
  reject_unknown_keys(j, "", {"dim", "basis", "brackets", "cocycle", "metric"});

  InputDocument doc;
  if (!j.contains("dim")) throw InputError("\"dim\" is required");
  doc.dim = require_int(j["dim"], "dim");
  if (doc.dim < 1 || doc.dim > 32) fail("dim", "out of range (1..32)");
  const int n = doc.dim;

  if (j.contains("basis")) {
    const Json& b = j["basis"];
    if (!b.is_array()) fail("basis", "must be an array of strings");
    if (static_cast<int>(b.size()) != n) fail("basis", "must have dim entries");
    for (size_t t = 0; t < b.size(); ++t) {
      if (!b[t].is_string() || b[t].get<std::string>().empty())
        fail(at("basis", t), "must be a nonempty string");
      doc.basis.push_back(b[t].get<std::string>());
    }
  } else {
    doc.basis = default_labels(n);
  }

  if (j.contains("brackets")) {
    const Json& br = j["brackets"];
    if (!br.is_array()) fail("brackets", "must be an array");
    std::set<std::pair<int, int>> seen_pairs;
    for (size_t t = 0; t < br.size(); ++t) {
      const std::string path = at("brackets", t);
      const Json& e = br[t];
      if (!e.is_object()) fail(path, "must be an object");
      reject_unknown_keys(e, path, {"i", "j", "terms"});
      if (!e.contains("i") || !e.contains("j") || !e.contains("terms"))
        fail(path, "needs fields i, j, terms");
      BracketEntry entry;
      entry.i = require_index(e["i"], path + ".i", n);
      entry.j = require_index(e["j"], path + ".j", n);
      if (entry.i >= entry.j) fail(path, "requires i < j");
      if (!seen_pairs.insert({entry.i, entry.j}).second)
        fail(path, "duplicates pair (" + std::to_string(entry.i) + "," +
                       std::to_string(entry.j) + ")");
      const Json& terms = e["terms"];
      if (!terms.is_array()) fail(path + ".terms", "must be an array");
      for (size_t u = 0; u < terms.size(); ++u) {
        const std::string tpath = at(path + ".terms", u);
        const Json& term = terms[u];
        if (!term.is_object()) fail(tpath, "must be an object");
        reject_unknown_keys(term, tpath, {"coeff", "k"});
        if (!term.contains("coeff") || !term.contains("k"))
          fail(tpath, "needs fields coeff, k");
        BracketTerm bt;
        bt.coeff = require_rational(term["coeff"], tpath + ".coeff");
        bt.k = require_index(term["k"], tpath + ".k", n);
        for (const auto& other : entry.terms)
          if (other.k == bt.k) fail(tpath, "duplicates index k");
        if (bt.coeff != 0) entry.terms.push_back(bt);
      }
      std::sort(entry.terms.begin(), entry.terms.end(),
                [](const BracketTerm& a, const BracketTerm& b) { return a.k < b.k; });
      if (!entry.terms.empty()) doc.brackets.push_back(entry);
    }
    std::sort(doc.brackets.begin(), doc.brackets.end(),
              [](const BracketEntry& a, const BracketEntry& b) {
                return a.i != b.i ? a.i < b.i : a.j < b.j;
              });
  }

  if (j.contains("cocycle")) {
    const Json& co = j["cocycle"];
    if (!co.is_array()) fail("cocycle", "must be an array");
    std::set<int> seen_images;
    for (size_t t = 0; t < co.size(); ++t) {
      const std::string path = at("cocycle", t);
      const Json& e = co[t];
      if (!e.is_object()) fail(path, "must be an object");
      reject_unknown_keys(e, path, {"i", "terms"});
      if (!e.contains("i") || !e.contains("terms"))
        fail(path, "needs fields i, terms");
      CocycleEntry entry;
      entry.i = require_index(e["i"], path + ".i", n);
      if (!seen_images.insert(entry.i).second)
        fail(path, "duplicates index " + std::to_string(entry.i));
      const Json& terms = e["terms"];
      if (!terms.is_array()) fail(path + ".terms", "must be an array");
      for (size_t u = 0; u < terms.size(); ++u) {
        const std::string tpath = at(path + ".terms", u);
        const Json& term = terms[u];
        if (!term.is_object()) fail(tpath, "must be an object");
        reject_unknown_keys(term, tpath, {"coeff", "j", "k"});
        if (!term.contains("coeff") || !term.contains("j") || !term.contains("k"))
          fail(tpath, "needs fields coeff, j, k");
        CocycleTerm ct;
        ct.coeff = require_rational(term["coeff"], tpath + ".coeff");
        ct.j = require_index(term["j"], tpath + ".j", n);
        ct.k = require_index(term["k"], tpath + ".k", n);
        if (ct.j >= ct.k) fail(tpath, "requires j < k");
        for (const auto& other : entry.terms)
          if (other.j == ct.j && other.k == ct.k)
            fail(tpath, "duplicates pair (" + std::to_string(ct.j) + "," +
                            std::to_string(ct.k) + ")");
        if (ct.coeff != 0) entry.terms.push_back(ct);
      }
      std::sort(entry.terms.begin(), entry.terms.end(),
                [](const CocycleTerm& a, const CocycleTerm& b) {
                  return a.j != b.j ? a.j < b.j : a.k < b.k;
                });
      if (!entry.terms.empty()) doc.cocycle.push_back(entry);
    }
    std::sort(doc.cocycle.begin(), doc.cocycle.end(),
              [](const CocycleEntry& a, const CocycleEntry& b) { return a.i < b.i; });
  }

  if (!j.contains("metric")) throw InputError("\"metric\" is required");
  const Json& mm = j["metric"];
  if (!mm.is_array() || static_cast<int>(mm.size()) != n)
    fail("metric", "must be a dim x dim array");
  for (size_t r = 0; r < mm.size(); ++r) {
    const Json& row = mm[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(at("metric", r), "must have dim entries");
    std::vector<Scalar> parsed;
    for (size_t c = 0; c < row.size(); ++c)
      parsed.push_back(require_rational(row[c], at(at("metric", r), c)));
    doc.metric.push_back(parsed);
  }
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (doc.metric[static_cast<size_t>(r)][static_cast<size_t>(c)] !=
          doc.metric[static_cast<size_t>(c)][static_cast<size_t>(r)])
        throw InputError("metric not symmetric at (" + std::to_string(r + 1) +
                         "," + std::to_string(c + 1) + ")");
  return doc;
}

std::string serialize_document(const InputDocument& doc) {
  Json j;
  j["dim"] = doc.dim;
  j["basis"] = doc.basis.empty() ? default_labels(doc.dim) : doc.basis;
  Json brackets = Json::array();
  for (const auto& entry : doc.brackets) {
    if (entry.terms.empty()) continue;
    Json e;
    e["i"] = entry.i;
    e["j"] = entry.j;
    Json terms = Json::array();
    for (const auto& t : entry.terms) {
      Json term;
      term["coeff"] = scalar_to_string(t.coeff);
      term["k"] = t.k;
      terms.push_back(term);
    }
    e["terms"] = terms;
    brackets.push_back(e);
  }
  j["brackets"] = brackets;
  Json cocycle = Json::array();
  for (const auto& entry : doc.cocycle) {
    if (entry.terms.empty()) continue;
    Json e;
    e["i"] = entry.i;
    Json terms = Json::array();
    for (const auto& t : entry.terms) {
      Json term;
      term["coeff"] = scalar_to_string(t.coeff);
      term["j"] = t.j;
      term["k"] = t.k;
      terms.push_back(term);
    }
    e["terms"] = terms;
    cocycle.push_back(e);
  }
  j["cocycle"] = cocycle;
  Json metric = Json::array();
  for (const auto& row : doc.metric) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(scalar_to_string(v));
    metric.push_back(r);
  }
  j["metric"] = metric;
  return j.dump(2) + "\n";
}

InputDocument document_from_instance(const CatalogInstance& inst) {
  const LieAlgebra& L = inst.algebra;
  InputDocument doc;
  doc.dim = L.dim;
  doc.basis = L.basis_labels.empty() ? default_labels(L.dim) : L.basis_labels;
  for (int i = 1; i <= L.dim; ++i)
    for (int j = i + 1; j <= L.dim; ++j) {
      const Vec& v = L.bracket_basis(i, j);
      BracketEntry entry;
      entry.i = i;
      entry.j = j;
      for (int k = 1; k <= L.dim; ++k)
        if (v[static_cast<size_t>(k - 1)] != 0)
          entry.terms.push_back({v[static_cast<size_t>(k - 1)], k});
      if (!entry.terms.empty()) doc.brackets.push_back(entry);
    }
  for (int i = 1; i <= L.dim; ++i) {
    const MultiVector& w = inst.cocycle.images[static_cast<size_t>(i - 1)];
    CocycleEntry entry;
    entry.i = i;
    for (const auto& [key, coeff] : w.coords())
      entry.terms.push_back({coeff, key[0], key[1]});
    if (!entry.terms.empty()) doc.cocycle.push_back(entry);
  }
  for (int r = 0; r < L.dim; ++r) {
    std::vector<Scalar> row;
    for (int c = 0; c < L.dim; ++c) row.push_back(inst.metric.gram(r, c));
    doc.metric.push_back(row);
  }
  return doc;
}

CatalogInstance instance_from_document(const InputDocument& doc) {
  CatalogInstance inst;
  inst.algebra = LieAlgebra::abelian(doc.dim, Space::Primal, doc.basis);
  for (const auto& entry : doc.brackets)
    for (const auto& t : entry.terms)
      inst.algebra.add_bracket_term(entry.i, entry.j, t.k, t.coeff);
  inst.cocycle.base = inst.algebra;
  inst.cocycle.images.assign(static_cast<size_t>(doc.dim),
                             MultiVector(doc.dim, 2, Space::Primal));
  for (const auto& entry : doc.cocycle)
    for (const auto& t : entry.terms)
      inst.cocycle.images[static_cast<size_t>(entry.i - 1)].add_term({t.j, t.k},
                                                                     t.coeff);
  Matrix g(doc.dim, doc.dim);
  for (int r = 0; r < doc.dim; ++r)
    for (int c = 0; c < doc.dim; ++c)
      g(r, c) = doc.metric[static_cast<size_t>(r)][static_cast<size_t>(c)];
  inst.metric = make_inner_product(g);
  return inst;
}

namespace {

struct FlagRow {
  const char* display;
  const char* key;  // witness map key
  bool value;
};

std::vector<FlagRow> flag_rows(const HawkinsReport& r) {
  return {
      {"jacobi", "jacobi", r.jacobi_ok},
      {"cocycle", "cocycle", r.cocycle_ok},
      {"dual jacobi", "dual_jacobi", r.dual_jacobi_ok},
      {"flat", "flat", r.flat},
      {"metaflat", "metaflat", r.metaflat},
      {"unimodular", "g_unimodular", r.g_unimodular},
      {"dual unimodular", "dual_unimodular", r.dual_unimodular},
      {"modular condition", "modular_condition", r.modular_condition},
  };
}

}  // namespace

std::string report_to_json(const HawkinsReport& report,
                           const std::vector<std::string>& labels) {
  Json j;
  j["jacobi_ok"] = report.jacobi_ok;
  j["cocycle_ok"] = report.cocycle_ok;
  j["dual_jacobi_ok"] = report.dual_jacobi_ok;
  j["flat"] = report.flat;
  j["metaflat"] = report.metaflat;
  j["g_unimodular"] = report.g_unimodular;
  j["dual_unimodular"] = report.dual_unimodular;
  j["modular_condition"] = report.modular_condition;
  j["compatible"] = report.compatible;
  j["strongly_compatible"] = to_string(report.strongly_compatible);
  Json witnesses = Json::object();
  for (const auto& [key, text] : report.witnesses) witnesses[key] = text;
  j["witnesses"] = witnesses;
  if (report.modular_witness) {
    Json w;
    w["index"] = report.modular_witness_index;
    w["value"] = to_string(*report.modular_witness, labels);
    j["modular_witness"] = w;
  } else {
    j["modular_witness"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const HawkinsReport& report,
                           const std::vector<std::string>& labels) {
  (void)labels;  // witness strings arrive already rendered with labels
  std::ostringstream out;
  for (const FlagRow& row : flag_rows(report)) {
    out << row.display << ": " << (row.value ? "OK" : "FAIL");
    auto it = report.witnesses.find(row.key);
    if (!row.value && it != report.witnesses.end()) {
      if (!it->second.empty() && it->second.front() == '(')
        out << ", witness " << it->second;
      else
        out << " (" << it->second << ")";
    }
    out << "\n";
  }
  out << "compatible: " << (report.compatible ? "YES" : "NO") << "\n";
  out << "strongly compatible: ";
  switch (report.strongly_compatible) {
    case StrongVerdict::Yes:
      out << "YES";
      break;
    case StrongVerdict::NecessaryConditionsHoldOnly:
      out << "NECESSARY-ONLY";
      break;
    case StrongVerdict::No:
      out << "NO";
      break;
  }
  out << "\n";
  return out.str();
}

}  // namespace plie
