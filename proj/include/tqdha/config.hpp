#pragma once

// Problem configuration files, kappa files and JSON (de)serialization of
// the objects that appear in reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "tqdha/hochschild.hpp"
#include "tqdha/rewriting.hpp"

namespace tqdha {

using json = nlohmann::ordered_json;

struct ProblemConfig {
  Field field;
  int n;
  QuantumSystem q;
  std::vector<ExactMatrix> generators;
  int closure_cap = kDefaultClosureCap;
  int degree_bound = 4;
};

/// Validates against the schema; throws SchemaError (message starts with the
/// JSON pointer of the offending value), ParseError, QInvariantViolation.
ProblemConfig parse_config(const json& doc);
ProblemConfig load_config(const std::string& path);

/// Closure of the configured generators (identity group when there are none).
FiniteGroup config_group(const ProblemConfig& cfg);

/// The config document describing the given data (inverse of parse_config).
json config_to_json(const ProblemConfig& cfg);

/// kappa file: {"entries": [{"g": int, "i": int, "j": int, "value": expr}]},
/// 1-based i < j, 0-based g.
KappaParameter parse_kappa(const json& doc, const Field& field, int group_order, int n);
KappaParameter load_kappa(const std::string& path, const Field& field, int group_order, int n);
json kappa_to_json(const KappaParameter& k);

json cochain_to_json(const Cochain& c, int n);
Cochain cochain_from_json(const json& doc, const Field& field, int n);
json generator_to_json(const CochainGenerator& gen, int n);
json algebra_element_to_json(const AlgebraElement& a, int n);
AlgebraElement algebra_element_from_json(const json& doc, const Field& field, int n);
json matrix_to_json(const ExactMatrix& m);

/// Reads a whole file as JSON; SchemaError on I/O or syntax problems.
json read_json_file(const std::string& path);

}  // namespace tqdha
