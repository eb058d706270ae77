#include "tqdha/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

#include "tqdha/config.hpp"

namespace tqdha {

namespace {

const std::vector<std::string> kCommands = {"check-action", "param-space", "verify-pbw", "normal-form",
                                            "hochschild",   "cocycles",    "grpn"};

struct Options {
  int jobs = 1;
  std::string output = "json";
  std::string config;
  std::string kappa;
  std::string word;
  std::string strategy = "leftmost";
  int degree = 2;
  bool bruteforce = false;
  bool truncated = false;
  int r = 1, p = 1, n = 1;
  std::optional<int> cyclotomic_order;
  std::string q = "-1";
  bool emit_config = false;
  bool with_param_space = false;
};

struct Outcome {
  int code = kExitOk;
  json report = json::object();
};

json kappa_basis_json(const std::vector<KappaParameter>& basis) {
  json out = json::array();
  for (const auto& k : basis) out.push_back(kappa_to_json(k)["entries"]);
  return out;
}

Outcome check_action(const Options& o) {
  const ProblemConfig cfg = load_config(o.config);
  const FiniteGroup G = config_group(cfg);
  Outcome res;
  bool all = true;
  json elems = json::array();
  for (const auto& g : G.elements()) {
    const bool lam = acts_on_lambda(cfg.q, g);
    all = all && lam;
    elems.push_back({{"index", g.index},
                     {"matrix", matrix_to_json(g.matrix)},
                     {"diagonal", is_diagonal(g)},
                     {"acts_on_lambda", lam},
                     {"resolution_compatible", resolution_compatible(cfg.q, g)},
                     {"acts_on_quantum_polynomial", acts_on_quantum_polynomial(cfg.q, g)}});
  }
  res.report["group_order"] = G.order();
  res.report["acts_on_lambda"] = all;
  res.report["elements"] = std::move(elems);
  res.code = all ? kExitOk : kExitNo;
  return res;
}

Outcome param_space_cmd(const Options& o) {
  const ProblemConfig cfg = load_config(o.config);
  const FiniteGroup G = config_group(cfg);
  const ConstraintSystem sys = build_constraint_system(cfg.q, G, o.jobs);
  const ParameterSpace ps = parameter_space(cfg.q, G, sys);
  json cands = json::array();
  for (const auto& [g, i, j] : kappa_support_candidates(cfg.q, G)) cands.push_back({{"g", g}, {"i", i + 1}, {"j", j + 1}});
  Outcome res;
  res.report["group_order"] = G.order();
  res.report["unknowns"] = sys.matrix.cols();
  res.report["equations"] = sys.matrix.rows();
  res.report["dimension"] = ps.dimension;
  res.report["dimension_bound"] = pair_count(cfg.n);
  res.report["support_candidates"] = std::move(cands);
  res.report["basis"] = kappa_basis_json(ps.basis);
  return res;
}

json ambiguity_json(const Ambiguity& a, int n) {
  return {{"family", a.family},
          {"word", word_to_string(a.word, n)},
          {"left", algebra_element_to_json(a.left, n)},
          {"right", algebra_element_to_json(a.right, n)},
          {"left_text", a.left.to_string()},
          {"right_text", a.right.to_string()}};
}

Outcome verify_pbw(const Options& o) {
  const ProblemConfig cfg = load_config(o.config);
  const FiniteGroup G = config_group(cfg);
  const KappaParameter kappa = load_kappa(o.kappa, cfg.field, G.order(), cfg.n);
  const ConstraintSystem sys = build_constraint_system(cfg.q, G, o.jobs);
  const auto witness = admissibility_witness(sys, kappa, G.order(), cfg.n);
  const DiamondResult diamond = diamond_oracle(cfg.q, G, kappa, o.jobs);

  Outcome res;
  res.report["admissible"] = !witness.has_value();
  if (witness) res.report["violated_condition"] = witness->to_string();
  res.report["diamond_resolvable"] = diamond.resolvable;
  res.report["ambiguities_checked"] = diamond.checked;
  if (diamond.witness) res.report["ambiguity_witness"] = ambiguity_json(*diamond.witness, cfg.n);
  res.report["routes_agree"] = witness.has_value() != diamond.resolvable;
  res.code = (!witness && diamond.resolvable) ? kExitOk : kExitNo;
  return res;
}

Outcome normal_form_cmd(const Options& o) {
  const ProblemConfig cfg = load_config(o.config);
  const FiniteGroup G = config_group(cfg);
  const KappaParameter kappa = o.kappa.empty() ? KappaParameter{} : load_kappa(o.kappa, cfg.field, G.order(), cfg.n);
  const Word w = parse_word(o.word, cfg.n, G.order());
  RewritingSystem rs(cfg.q, G, kappa,
                     o.strategy == "rightmost" ? RewritingSystem::Strategy::Rightmost
                                               : RewritingSystem::Strategy::Leftmost);
  const AlgebraElement nf = rs.normal_form(w);
  Outcome res;
  res.report["word"] = word_to_string(w, cfg.n);
  res.report["normal_form"] = algebra_element_to_json(nf, cfg.n);
  res.report["normal_form_text"] = nf.to_string();
  res.report["steps"] = rs.steps();
  return res;
}

Outcome hochschild_cmd(const Options& o) {
  const ProblemConfig cfg = load_config(o.config);
  const FiniteGroup G = config_group(cfg);
  if (o.degree < 0) throw PreconditionFailed("--degree must be >= 0");
  const auto gens = hochschild_basis_diagonal(cfg.q, G, o.degree);
  Outcome res;
  res.report["group_order"] = G.order();
  res.report["degree"] = o.degree;
  json gj = json::array();
  for (const auto& g : gens) gj.push_back(generator_to_json(g, cfg.n));
  res.report["count"] = gens.size();
  res.report["generators"] = std::move(gj);
  if (o.bruteforce) {
    BruteforceLimits limits;
    limits.max_degree = cfg.degree_bound;
    const BruteforceResult bf = cohomology_bruteforce(cfg.q, G, o.degree, limits);
    json reps = json::array();
    for (const auto& c : bf.representatives) reps.push_back(cochain_to_json(c, cfg.n));
    const bool agrees = bf.dimension == static_cast<int>(gens.size());
    res.report["bruteforce"] = {{"dimension", bf.dimension},
                                {"full_dimension", bf.full_dimension},
                                {"space_dimensions", bf.space_dimensions},
                                {"agrees", agrees},
                                {"representatives", std::move(reps)}};
    if (!agrees) res.code = kExitNo;
  }
  return res;
}

Outcome cocycles_cmd(const Options& o) {
  const ProblemConfig cfg = load_config(o.config);
  const FiniteGroup G = config_group(cfg);
  const auto basis = o.truncated ? tqdha_cocycles(cfg.q, G) : constant_2cocycles(cfg.q, G);
  Outcome res;
  res.report["group_order"] = G.order();
  res.report["truncated"] = o.truncated;
  res.report["dimension"] = basis.size();
  json bj = json::array();
  for (const auto& c : basis) bj.push_back(cochain_to_json(c, cfg.n));
  res.report["basis"] = std::move(bj);
  if (o.truncated) {
    std::vector<KappaParameter> ks;
    bool all = true;
    const ConstraintSystem sys = build_constraint_system(cfg.q, G, o.jobs);
    for (const auto& c : basis) {
      ks.push_back(kappa_from_cocycle(cfg.q, c));
      all = all && !admissibility_witness(sys, ks.back(), G.order(), cfg.n);
    }
    res.report["kappa"] = kappa_basis_json(ks);
    res.report["kappa_admissible"] = all;
    if (!all) res.code = kExitNo;
  }
  return res;
}

Outcome grpn_cmd(const Options& o) {
  if (o.r < 1 || o.p < 1 || o.n < 1) throw PreconditionFailed("--r, --p, --n must be positive");
  if (o.n > kMaxDimension) throw PreconditionFailed("--n above " + std::to_string(kMaxDimension));
  const Field field(o.cyclotomic_order.value_or(o.r));
  const auto gens = build_grpn(field, o.r, o.p, o.n);
  const FieldElement qv = field.parse(o.q);
  ProblemConfig cfg{field, o.n, QuantumSystem::uniform(field, o.n, qv), gens};
  Outcome res;
  if (o.emit_config) {
    res.report = config_to_json(cfg);
    return res;
  }
  const FiniteGroup G = config_group(cfg);
  long long expected = 1;
  for (int i = 0; i < o.n; ++i) expected *= o.r * (i + 1);
  expected /= o.p;
  json gj = json::array();
  for (const auto& g : gens) gj.push_back(matrix_to_json(g));
  res.report["r"] = o.r;
  res.report["p"] = o.p;
  res.report["n"] = o.n;
  res.report["generators"] = std::move(gj);
  res.report["group_order"] = G.order();
  res.report["expected_order"] = expected;
  if (o.with_param_space) res.report["dimension"] = parameter_space(cfg.q, G, o.jobs).dimension;
  return res;
}

void write_text(std::ostream& out, const json& report) {
  for (const auto& [k, v] : report.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Truncated quantum Drinfeld Hecke algebras: parameter spaces and Hochschild data", "tqdha"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "report format")->check(CLI::IsMember({"json", "text"}));

  auto* check = app.add_subcommand("check-action", "automorphism checks for every group element");
  check->add_option("--config", o.config)->required();
  auto* param = app.add_subcommand("param-space", "dimension and basis of the parameter space");
  param->add_option("--config", o.config)->required();
  auto* verify = app.add_subcommand("verify-pbw", "admissibility and Diamond Lemma check of a kappa file");
  verify->add_option("--config", o.config)->required();
  verify->add_option("--kappa", o.kappa)->required();
  auto* nf = app.add_subcommand("normal-form", "reduce a word to the PBW basis");
  nf->add_option("--config", o.config)->required();
  nf->add_option("--kappa", o.kappa);
  nf->add_option("--word", o.word)->required();
  nf->add_option("--strategy", o.strategy)->check(CLI::IsMember({"leftmost", "rightmost"}));
  auto* hh = app.add_subcommand("hochschild", "diagonal-action HH^m basis");
  hh->add_option("--config", o.config)->required();
  hh->add_option("--degree", o.degree)->required();
  hh->add_flag("--bruteforce", o.bruteforce, "also compute the cohomology from the cochain complex");
  auto* co = app.add_subcommand("cocycles", "constant G-invariant 2-cocycles");
  co->add_option("--config", o.config)->required();
  co->add_flag("--truncated", o.truncated, "only cocycles vanishing on eps_{2[i]}");
  auto* gr = app.add_subcommand("grpn", "generators of G(r,p,n)");
  gr->add_option("--r", o.r)->required();
  gr->add_option("--p", o.p)->required();
  gr->add_option("--n", o.n)->required();
  gr->add_option("--cyclotomic-order", o.cyclotomic_order, "N for the field (default r)");
  gr->add_option("--q", o.q, "uniform q_ij for i < j (default -1)");
  gr->add_flag("--emit-config", o.emit_config, "print a config document instead of a report");
  gr->add_flag("--param-space", o.with_param_space, "also compute the parameter space dimension");

  auto fail = [&](const std::string& command, const std::string& kind, const std::string& message) {
    json report;
    report["command"] = command;
    report["error"] = {{"kind", kind}, {"message", message}};
    if (o.output == "text") write_text(out, report);
    else out << report.dump(2) << "\n";
    err << kind << ": " << message << "\n";
    return kExitInputError;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    for (const auto& a : args) {
      if (!a.empty() && a[0] == '-') continue;
      if (std::find(kCommands.begin(), kCommands.end(), a) == kCommands.end())
        return fail(a, "UnknownCommand", "unknown command '" + a + "'");
      break;
    }
    return fail("", "UsageError", e.what());
  }

  if (app.get_subcommands().empty()) return fail("", "UnknownCommand", "expected a command");
  const std::string command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  try {
    if (command == "check-action") res = check_action(o);
    else if (command == "param-space") res = param_space_cmd(o);
    else if (command == "verify-pbw") res = verify_pbw(o);
    else if (command == "normal-form") res = normal_form_cmd(o);
    else if (command == "hochschild") res = hochschild_cmd(o);
    else if (command == "cocycles") res = cocycles_cmd(o);
    else res = grpn_cmd(o);
  } catch (const Error& e) {
    return fail(command, e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail(command, "InternalError", e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json report;
  if (!(command == "grpn" && o.emit_config)) {
    report["command"] = command;
    if (!o.config.empty()) report["config"] = o.config;
    for (auto& [k, v] : res.report.items()) report[k] = v;
    report["timing_ms"] = ms;
  } else {
    report = std::move(res.report);
  }
  if (o.output == "text") write_text(out, report);
  else out << report.dump(2) << "\n";
  return res.code;
}

}  // namespace tqdha
