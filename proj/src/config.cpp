#include "tqdha/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tqdha {

namespace {

[[noreturn]] void schema(const std::string& pointer, const std::string& what) {
  throw SchemaError(pointer + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.contains(key)) schema(ptr + "/" + key, "missing required field");
  return obj.at(key);
}

int as_int(const json& v, const std::string& ptr) {
  if (!v.is_number_integer()) schema(ptr, "expected an integer");
  const auto x = v.get<long long>();
  if (x < INT32_MIN || x > INT32_MAX) schema(ptr, "integer out of range");
  return static_cast<int>(x);
}

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& ptr) {
  if (!obj.is_object()) schema(ptr.empty() ? "/" : ptr, "expected an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) schema(ptr + "/" + k, "unknown field");
}

FieldElement scalar(const json& v, const Field& f, const std::string& ptr) {
  if (!v.is_string()) schema(ptr, "expected a scalar expression string");
  try {
    return f.parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(ptr + ": " + e.what());
  } catch (const ExtensionUnavailable& e) {
    throw ExtensionUnavailable(ptr + ": " + e.what());
  }
}

std::vector<int> int_list(const json& v, const std::string& ptr) {
  if (!v.is_array()) schema(ptr, "expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], ptr + "/" + std::to_string(i)));
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

ProblemConfig parse_config(const json& doc) {
  only_keys(doc, {"field", "dimension", "q", "generators", "options"}, "");

  const json& fj = require(doc, "field", "");
  only_keys(fj, {"cyclotomic_order", "extension_radicand"}, "/field");
  const int order = as_int(require(fj, "cyclotomic_order", "/field"), "/field/cyclotomic_order");
  if (order < 1) schema("/field/cyclotomic_order", "must be >= 1");
  std::optional<Field> field;
  if (fj.contains("extension_radicand")) {
    const json& r = fj.at("extension_radicand");
    if (!r.is_string()) schema("/field/extension_radicand", "expected a scalar expression string");
    try {
      field.emplace(order, r.get<std::string>());
    } catch (const Error& e) {
      throw ParseError("/field/extension_radicand: " + std::string(e.what()));
    }
  } else {
    field.emplace(order);
  }

  const int n = as_int(require(doc, "dimension", ""), "/dimension");
  if (n < 1 || n > kMaxDimension) schema("/dimension", "must be between 1 and " + std::to_string(kMaxDimension));

  const json& qj = require(doc, "q", "");
  if (!qj.is_array() || static_cast<int>(qj.size()) != n) schema("/q", "expected an n x n array");
  std::vector<Vector> q;
  for (int i = 0; i < n; ++i) {
    const std::string rp = "/q/" + std::to_string(i);
    const json& row = qj[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) schema(rp, "expected a row of length n");
    Vector r;
    for (int j = 0; j < n; ++j) r.push_back(scalar(row[static_cast<size_t>(j)], *field, rp + "/" + std::to_string(j)));
    q.push_back(std::move(r));
  }
  QuantumSystem qs(*field, std::move(q));

  std::vector<ExactMatrix> gens;
  if (doc.contains("generators")) {
    const json& gj = doc.at("generators");
    if (!gj.is_array()) schema("/generators", "expected an array of matrices");
    for (size_t k = 0; k < gj.size(); ++k) {
      const std::string gp = "/generators/" + std::to_string(k);
      const json& m = gj[k];
      if (!m.is_array() || static_cast<int>(m.size()) != n) schema(gp, "expected an n x n matrix");
      ExactMatrix mat(*field, n, n);
      for (int i = 0; i < n; ++i) {
        const json& row = m[static_cast<size_t>(i)];
        const std::string rp = gp + "/" + std::to_string(i);
        if (!row.is_array() || static_cast<int>(row.size()) != n) schema(rp, "expected a row of length n");
        for (int j = 0; j < n; ++j) mat.set(i, j, scalar(row[static_cast<size_t>(j)], *field, rp + "/" + std::to_string(j)));
      }
      if (mat.determinant().is_zero()) throw SingularGenerator(gp + ": generator is singular");
      gens.push_back(std::move(mat));
    }
  }

  ProblemConfig cfg{*field, n, std::move(qs), std::move(gens)};
  if (doc.contains("options")) {
    const json& oj = doc.at("options");
    only_keys(oj, {"closure_cap", "degree_bound"}, "/options");
    if (oj.contains("closure_cap")) {
      cfg.closure_cap = as_int(oj.at("closure_cap"), "/options/closure_cap");
      if (cfg.closure_cap < 1) schema("/options/closure_cap", "must be >= 1");
    }
    if (oj.contains("degree_bound")) {
      cfg.degree_bound = as_int(oj.at("degree_bound"), "/options/degree_bound");
      if (cfg.degree_bound < 0) schema("/options/degree_bound", "must be >= 0");
    }
  }
  return cfg;
}

ProblemConfig load_config(const std::string& path) { return parse_config(read_json_file(path)); }

FiniteGroup config_group(const ProblemConfig& cfg) {
  if (cfg.generators.empty()) return close_group({ExactMatrix::identity(cfg.field, cfg.n)}, cfg.closure_cap);
  return close_group(cfg.generators, cfg.closure_cap);
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json config_to_json(const ProblemConfig& cfg) {
  json doc;
  doc["field"]["cyclotomic_order"] = cfg.field.cyclotomic_order();
  if (cfg.field.has_extension()) doc["field"]["extension_radicand"] = cfg.field.radicand_text();
  doc["dimension"] = cfg.n;
  json q = json::array();
  for (int i = 0; i < cfg.n; ++i) {
    json row = json::array();
    for (int j = 0; j < cfg.n; ++j) row.push_back(cfg.q(i, j).to_string());
    q.push_back(std::move(row));
  }
  doc["q"] = std::move(q);
  doc["generators"] = json::array();
  for (const auto& g : cfg.generators) doc["generators"].push_back(matrix_to_json(g));
  doc["options"] = {{"closure_cap", cfg.closure_cap}, {"degree_bound", cfg.degree_bound}};
  return doc;
}

KappaParameter parse_kappa(const json& doc, const Field& field, int group_order, int n) {
  only_keys(doc, {"entries"}, "");
  const json& entries = require(doc, "entries", "");
  if (!entries.is_array()) schema("/entries", "expected an array");
  KappaParameter k;
  std::set<KappaParameter::Key> seen;
  for (size_t e = 0; e < entries.size(); ++e) {
    const std::string p = "/entries/" + std::to_string(e);
    const json& ej = entries[e];
    only_keys(ej, {"g", "i", "j", "value"}, p);
    const int g = as_int(require(ej, "g", p), p + "/g");
    const int i = as_int(require(ej, "i", p), p + "/i");
    const int j = as_int(require(ej, "j", p), p + "/j");
    if (g < 0 || g >= group_order) schema(p + "/g", "group index out of range 0.." + std::to_string(group_order - 1));
    if (i < 1 || i > n) schema(p + "/i", "index out of range 1.." + std::to_string(n));
    if (j < 1 || j > n) schema(p + "/j", "index out of range 1.." + std::to_string(n));
    if (i >= j) schema(p, "entries need i < j");
    if (!seen.insert({g, i - 1, j - 1}).second) schema(p, "duplicate entry");
    k.set(g, i - 1, j - 1, scalar(require(ej, "value", p), field, p + "/value"));
  }
  return k;
}

KappaParameter load_kappa(const std::string& path, const Field& field, int group_order, int n) {
  return parse_kappa(read_json_file(path), field, group_order, n);
}

json kappa_to_json(const KappaParameter& k) {
  json entries = json::array();
  for (const auto& [key, v] : k.entries()) {
    const auto [g, i, j] = key;
    entries.push_back({{"g", g}, {"i", i + 1}, {"j", j + 1}, {"value", v.to_string()}});
  }
  return json{{"entries", std::move(entries)}};
}

json generator_to_json(const CochainGenerator& gen, int n) {
  return json{{"alpha", mask_to_alpha(gen.alpha, n)}, {"beta", gen.beta}, {"g", gen.g}};
}

json cochain_to_json(const Cochain& c, int n) {
  json terms = json::array();
  for (const auto& [gen, v] : c.terms()) {
    json t = generator_to_json(gen, n);
    t["coefficient"] = v.to_string();
    terms.push_back(std::move(t));
  }
  return terms;
}

Cochain cochain_from_json(const json& doc, const Field& field, int n) {
  if (!doc.is_array()) schema("/", "expected an array of cochain terms");
  Cochain c;
  for (size_t t = 0; t < doc.size(); ++t) {
    const std::string p = "/" + std::to_string(t);
    const json& tj = doc[t];
    only_keys(tj, {"alpha", "beta", "g", "coefficient"}, p);
    const auto alpha = int_list(require(tj, "alpha", p), p + "/alpha");
    const auto beta = int_list(require(tj, "beta", p), p + "/beta");
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n) schema(p, "alpha and beta need n entries");
    for (int b : beta)
      if (b < 0) schema(p + "/beta", "entries must be non-negative");
    Mask m;
    try {
      m = alpha_to_mask(alpha);
    } catch (const Error&) {
      schema(p + "/alpha", "entries must be 0 or 1");
    }
    c.add(CochainGenerator{m, beta, as_int(require(tj, "g", p), p + "/g")},
          scalar(require(tj, "coefficient", p), field, p + "/coefficient"));
  }
  return c;
}

json algebra_element_to_json(const AlgebraElement& a, int n) {
  json terms = json::array();
  for (const auto& [key, v] : a.terms())
    terms.push_back({{"alpha", mask_to_alpha(key.first, n)}, {"g", key.second}, {"coefficient", v.to_string()}});
  return terms;
}

AlgebraElement algebra_element_from_json(const json& doc, const Field& field, int n) {
  if (!doc.is_array()) schema("/", "expected an array of terms");
  AlgebraElement a;
  for (size_t t = 0; t < doc.size(); ++t) {
    const std::string p = "/" + std::to_string(t);
    const json& tj = doc[t];
    only_keys(tj, {"alpha", "g", "coefficient"}, p);
    const auto alpha = int_list(require(tj, "alpha", p), p + "/alpha");
    if (static_cast<int>(alpha.size()) != n) schema(p + "/alpha", "expected n entries");
    Mask m;
    try {
      m = alpha_to_mask(alpha);
    } catch (const Error&) {
      schema(p + "/alpha", "entries must be 0 or 1");
    }
    a.add(m, as_int(require(tj, "g", p), p + "/g"), scalar(require(tj, "coefficient", p), field, p + "/coefficient"));
  }
  return a;
}

}  // namespace tqdha
