// Acceptance run: one PASS/FAIL line per criterion, with indented detail lines
// underneath.  Every comparison is exact; the only numeric knobs are the sample
// sizes and the allowed disagreement count pinned below.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tqdha/config.hpp"

using namespace tqdha;

namespace {

constexpr int kAllowedDisagreements = 0;
constexpr int kRandomConfigs = 50;
constexpr int kKappaPerConfig = 50;
constexpr int kMaxRandomGroupOrder = 6;
constexpr int kMaxRandomDimension = 3;
constexpr int kFieldTriples = 200;
constexpr int kNullspaceMatrices = 50;
constexpr int kConfluenceWords = 100;
constexpr int kConfluenceWordLength = 6;
constexpr int kAssociativityTriples = 50;
constexpr int kGrpnMaxR = 3;
constexpr int kGrpnMaxN = 3;
constexpr int kGrpnCyclotomicOrder = 6;
constexpr unsigned kSeed = 20240611;

using Key = KappaParameter::Key;

struct Config {
  std::string name;
  QuantumSystem q;
  FiniteGroup G;
};

struct Criterion {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

// Every parameter space computed during the run passes through here so that the
// dimension bound can be reported as its own criterion.
struct BoundLog {
  int runs = 0;
  std::vector<std::string> violations;
} bound_log;

ParameterSpace param_space(const std::string& name, const QuantumSystem& q, const FiniteGroup& G) {
  auto ps = parameter_space(q, G, 4);
  ++bound_log.runs;
  if (ps.dimension > pair_count(q.n()))
    bound_log.violations.push_back(name + ": dim " + std::to_string(ps.dimension) + " > C(n,2)");
  return ps;
}

Config load(const std::string& file) {
  const ProblemConfig cfg = load_config(std::string(TQDHA_CONFIG_DIR) + "/" + file);
  return Config{file, cfg.q, config_group(cfg)};
}

std::set<Key> support_of(const ParameterSpace& ps) {
  std::set<Key> s;
  for (const auto& k : ps.basis)
    for (const auto& key : k.support()) s.insert(key);
  return s;
}

std::string key_text(const Key& k) {
  const auto [g, i, j] = k;
  return "(g" + std::to_string(g) + "," + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string keys_text(const std::set<Key>& ks) {
  std::string s = "{";
  for (const auto& k : ks) s += (s.size() > 1 ? " " : "") + key_text(k);
  return s + "}";
}

ExactMatrix power(const ExactMatrix& m, int k) {
  ExactMatrix out = ExactMatrix::identity(m.field(), m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

// Index of g^k where g is the configured generator.
int power_index(const Config& c, const ExactMatrix& g, int k) {
  auto i = c.G.find(power(g, k));
  return i ? *i : -1;
}

CochainGenerator gen(Mask alpha, Beta beta, int g) { return CochainGenerator{alpha, std::move(beta), g}; }

std::set<std::string> gen_names(const std::vector<CochainGenerator>& gs) {
  std::set<std::string> s;
  for (const auto& g : gs) s.insert(g.to_string());
  return s;
}

void compare_lists(Criterion& c, const std::string& label, const std::set<std::string>& got,
                   const std::set<std::string>& want) {
  std::vector<std::string> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  const bool ok = missing.empty() && extra.empty();
  c.require(ok, label + ": computed " + std::to_string(got.size()) + ", listed " + std::to_string(want.size()));
  for (const auto& m : missing) c.note("  listed but not computed: " + m);
  for (const auto& e : extra) c.note("  computed but not listed: " + e);
}

Vector constant_vector(const Cochain& c, const Field& f, int n, int order) {
  Vector x(static_cast<size_t>(order * upper_pair_count(n)), f.zero());
  for (const auto& [g, v] : c.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < g.beta[static_cast<size_t>(i)]; ++k) idx.push_back(i);
    x[static_cast<size_t>(constant_column(n, g.g, idx[0], idx[1]))] = v;
  }
  return x;
}

bool same_constant_span(const Config& c, const std::vector<Cochain>& got, const std::vector<CochainGenerator>& want) {
  const int n = c.q.n(), order = c.G.order();
  std::vector<Vector> a, b;
  for (const auto& x : got) a.push_back(constant_vector(x, c.q.field(), n, order));
  for (const auto& g : want) {
    Cochain x;
    x.add(g, c.q.field().one());
    b.push_back(constant_vector(x, c.q.field(), n, order));
  }
  return got.size() == want.size() && same_span(c.q.field(), a, b, order * upper_pair_count(n));
}

std::string cochains_text(const std::vector<Cochain>& cs) {
  std::string s = "{";
  for (const auto& c : cs) s += (s.size() > 1 ? "; " : "") + c.to_string();
  return s + "}";
}

// ---------------------------------------------------------------------------

Criterion criterion1(const Config& ex53) {
  Criterion c;
  const auto ps = param_space(ex53.name, ex53.q, ex53.G);
  const Field& f = ex53.q.field();
  Vector minus(3, -f.one());
  const int neg = *ex53.G.find(diagonal_matrix(f, minus));
  const std::set<Key> want{{0, 0, 1}, {neg, 0, 2}, {neg, 1, 2}};
  c.note("dimension " + std::to_string(ps.dimension) + ", support " + keys_text(support_of(ps)));
  c.require(ps.dimension == 3, "dimension 3");
  c.require(support_of(ps) == want, "support " + keys_text(want));
  return c;
}

Criterion criterion2(const Config& ex55, const ExactMatrix& g) {
  Criterion c;
  const int g0 = 0, g2 = power_index(ex55, g, 2), g3 = power_index(ex55, g, 3), g4 = power_index(ex55, g, 4),
            g5 = power_index(ex55, g, 5);
  c.require(ex55.G.order() == 6, "group order 6 (got " + std::to_string(ex55.G.order()) + ")");
  const auto ps = param_space(ex55.name, ex55.q, ex55.G);
  c.note("dimension " + std::to_string(ps.dimension) + ", support " + keys_text(support_of(ps)));
  c.require(ps.dimension == 1 && support_of(ps) == std::set<Key>{{0, 0, 1}}, "parameter space 1-dim on (I,1,2)");

  const std::vector<CochainGenerator> listed{
      gen(0b011, {0, 0, 2}, g2), gen(0b000, {0, 0, 2}, g2), gen(0b011, {0, 0, 2}, g3), gen(0b010, {2, 0, 0}, g3),
      gen(0b001, {0, 2, 0}, g3), gen(0b011, {0, 0, 2}, g4), gen(0b011, {0, 0, 2}, g0), gen(0b011, {1, 1, 0}, g0),
      gen(0b101, {1, 0, 1}, g0), gen(0b110, {0, 1, 1}, g0), gen(0b000, {1, 1, 0}, g0), gen(0b011, {0, 0, 2}, g5)};
  compare_lists(c, "HH^2 generator list", gen_names(hochschild_basis_diagonal(ex55.q, ex55.G, 2)), gen_names(listed));

  const auto co = constant_2cocycles(ex55.q, ex55.G);
  const auto tr = tqdha_cocycles(ex55.q, ex55.G);
  c.note("constant cocycles " + cochains_text(co) + ", truncated " + cochains_text(tr));
  c.require(same_constant_span(ex55, co, {gen(0, {1, 1, 0}, g0), gen(0, {0, 0, 2}, g2)}),
            "constant cocycles = span{(I)e110, (g^2)e002}");
  c.require(same_constant_span(ex55, tr, {gen(0, {1, 1, 0}, g0)}), "truncated cocycles = span{(I)e110}");
  return c;
}

Criterion criterion3(const Config& ex56, const ExactMatrix& g) {
  Criterion c;
  const int g1 = power_index(ex56, g, 1), g2 = power_index(ex56, g, 2);
  const auto ps = param_space(ex56.name, ex56.q, ex56.G);
  c.note("dimension " + std::to_string(ps.dimension) + ", support " + keys_text(support_of(ps)));
  c.require(ps.dimension == 1 && support_of(ps) == std::set<Key>{{g1, 0, 1}}, "parameter space 1-dim on (g,1,2)");

  const std::vector<CochainGenerator> listed{gen(0b011, {0, 0, 2}, g1), gen(0b000, {1, 1, 0}, g1),
                                             gen(0b000, {0, 0, 2}, g1), gen(0b001, {0, 2, 0}, g2),
                                             gen(0b011, {1, 1, 0}, 0),  gen(0b101, {1, 0, 1}, 0),
                                             gen(0b110, {0, 1, 1}, 0)};
  compare_lists(c, "HH^2 generator list", gen_names(hochschild_basis_diagonal(ex56.q, ex56.G, 2)), gen_names(listed));

  const auto tr = tqdha_cocycles(ex56.q, ex56.G);
  c.note("truncated cocycles " + cochains_text(tr));
  c.require(same_constant_span(ex56, tr, {gen(0, {1, 1, 0}, g1)}), "truncated cocycles = span{(g)e110}");
  return c;
}

Criterion criterion4(const Config& ex58) {
  Criterion c;
  const auto ps = param_space(ex58.name, ex58.q, ex58.G);
  c.require(ps.dimension == 1, "dimension 1 (got " + std::to_string(ps.dimension) + ")");
  if (ps.dimension == 1) {
    const auto& k = ps.basis[0];
    c.note("basis " + kappa_to_json(k).dump());
    c.require(k.support() == std::set<Key>{{0, 0, 1}, {0, 0, 2}, {0, 1, 2}}, "supported on the identity only");
    c.require(k.get(0, 0, 1) == k.get(0, 0, 2) && k.get(0, 0, 1) == k.get(0, 1, 2),
              "kappa_I(v1,v2) = kappa_I(v1,v3) = kappa_I(v2,v3)");
  }
  return c;
}

struct GrpnRun {
  int r, p, n;
  bool q_minus_one;
  Config config;
  int dimension;
};

Criterion criterion5(std::vector<GrpnRun>& runs) {
  Criterion c;
  const Field f(kGrpnCyclotomicOrder);
  for (bool minus : {true, false})
    for (int r = 1; r <= kGrpnMaxR; ++r)
      for (int p = 1; p <= r; ++p) {
        if (r % p) continue;
        for (int n = 1; n <= kGrpnMaxN; ++n) {
          const std::string name = "G(" + std::to_string(r) + "," + std::to_string(p) + "," + std::to_string(n) +
                                   ") q=" + (minus ? "-1" : "1");
          try {
            const auto q = QuantumSystem::uniform(f, n, minus ? -f.one() : f.one());
            FiniteGroup G = close_group(build_grpn(f, r, p, n));
            const int dim = param_space(name, q, G).dimension;
            const bool nontrivial = minus && ((r == 1 && p == 1) || (r == 2 && p == 2 && n == 2));
            const int want = nontrivial ? 1 : 0;
            c.require(dim == want, name + ": dimension " + std::to_string(dim) + ", expected " + std::to_string(want));
            runs.push_back({r, p, n, minus, Config{name, q, std::move(G)}, dim});
          } catch (const Error& e) {
            c.require(false, name + ": " + e.kind() + " " + e.what());
          }
        }
      }
  c.note(std::to_string(runs.size()) + " groups checked");
  return c;
}

Criterion criterion6(const Config& ex57, const Config& ex57p) {
  Criterion c;
  const Field& f = ex57.q.field();
  for (const auto& g : ex57.G.elements())
    c.require(acts_on_lambda(ex57.q, g), "acts_on_lambda for g" + std::to_string(g.index));
  c.require(ex57.G.order() == 2, "group order 2");
  c.require(!acts_on_quantum_polynomial(ex57.q, ex57.G[1]), "non-identity element does not act on S_q' with q = -1");
  c.require(acts_on_quantum_polynomial(ex57p.q, ex57p.G[1]), "acts on S_q' with q12 = 1, q23 = q31 = -1");
  const auto ps = param_space(ex57.name, ex57.q, ex57.G);
  c.require(ps.dimension == 1, "dimension 1 (got " + std::to_string(ps.dimension) + ")");
  if (ps.dimension == 1) {
    const auto& k = ps.basis[0];
    c.note("basis " + kappa_to_json(k).dump());
    const FieldElement ratio_target = f.zeta(3) * (f.one() - f.root());
    c.require(k.support() == std::set<Key>{{0, 0, 2}, {0, 1, 2}}, "supported on (I,1,3), (I,2,3)");
    c.require(k.get(0, 1, 2) == ratio_target * k.get(0, 0, 2), "kappa_I(v2,v3) = z^3 (1 - y) kappa_I(v1,v3)");
  }
  return c;
}

// Random (q, G) with n <= 3, |G| <= 6, scalars from the sixth roots of unity.
std::optional<Config> random_config(std::mt19937& rng, int index) {
  const Field f(6);
  std::vector<FieldElement> roots;
  for (int k = 0; k < 6; ++k) roots.push_back(f.zeta(k));
  auto root = [&] { return roots[std::uniform_int_distribution<size_t>(0, 5)(rng)]; };
  const int n = std::uniform_int_distribution<int>(2, kMaxRandomDimension)(rng);

  std::vector<Vector> qm(static_cast<size_t>(n), Vector(static_cast<size_t>(n), f.one()));
  const bool uniform_minus = std::bernoulli_distribution(0.4)(rng);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const FieldElement v = uniform_minus ? -f.one() : root();
      qm[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      qm[static_cast<size_t>(j)][static_cast<size_t>(i)] = v.inverse();
    }
  const QuantumSystem q(f, qm);

  const int gens = std::uniform_int_distribution<int>(1, 2)(rng);
  std::vector<ExactMatrix> ms;
  for (int k = 0; k < gens; ++k) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    if (std::bernoulli_distribution(0.3)(rng)) std::shuffle(perm.begin(), perm.end(), rng);
    ExactMatrix m(f, n, n);
    for (int j = 0; j < n; ++j) m.set(perm[static_cast<size_t>(j)], j, std::bernoulli_distribution(0.5)(rng) ? root() : (std::bernoulli_distribution(0.5)(rng) ? -f.one() : f.one()));
    ms.push_back(std::move(m));
  }
  try {
    FiniteGroup G = close_group(ms, kMaxRandomGroupOrder);
    for (const auto& g : G.elements())
      if (!acts_on_lambda(q, g)) return std::nullopt;
    return Config{"random#" + std::to_string(index), q, std::move(G)};
  } catch (const GroupTooLarge&) {
    return std::nullopt;
  }
}

struct RouteStats {
  int samples = 0, admissible = 0, disagreements = 0;
  std::vector<std::string> first;
};

void compare_routes(const Config& c, std::mt19937& rng, int samples, RouteStats& st) {
  const Field& f = c.q.field();
  const int n = c.q.n(), order = c.G.order();
  if (n < 2) return;
  const auto sys = build_constraint_system(c.q, c.G, 4);
  const auto ps = param_space(c.name, c.q, c.G);
  const auto cands = kappa_support_candidates(c.q, c.G);
  const std::vector<FieldElement> pool{f.zero(), f.one(), -f.one(), f.zeta(1), -f.zeta(1), f.zeta(2), -f.zeta(2)};
  auto pick = [&] { return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)]; };
  std::uniform_int_distribution<int> gi(0, order - 1), ii(0, n - 1);

  for (int t = 0; t < samples; ++t) {
    KappaParameter k;
    const int mode = t % 4;
    if (mode == 0 || mode == 3)
      for (const auto& b : ps.basis) {
        const FieldElement s = pick();
        for (const auto& [key, v] : b.entries()) {
          const auto [g, i, j] = key;
          k.set(g, i, j, k.get(g, i, j) + s * v);
        }
      }
    if (mode == 1)
      for (const auto& [g, i, j] : cands) k.set(g, i, j, pick());
    if (mode == 2 || mode == 3) {
      const int entries = std::uniform_int_distribution<int>(1, 2)(rng);
      for (int e = 0; e < entries; ++e) {
        int i = ii(rng), j = ii(rng);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        k.set(gi(rng), i, j, pick());
      }
    }
    const bool adm = !admissibility_witness(sys, k, order, n).has_value();
    const bool diamond = diamond_oracle(c.q, c.G, k).resolvable;
    ++st.samples;
    st.admissible += adm;
    if (adm != diamond) {
      ++st.disagreements;
      if (st.first.size() < 3)
        st.first.push_back(c.name + ": kappa " + kappa_to_json(k).dump() + " admissible=" + (adm ? "yes" : "no") +
                           " diamond=" + (diamond ? "yes" : "no"));
    }
  }
}

Criterion criterion7(const std::vector<Config>& corpus, std::mt19937& rng) {
  Criterion c;
  RouteStats st;
  for (const auto& cfg : corpus) compare_routes(cfg, rng, kKappaPerConfig, st);
  int made = 0, tries = 0, nontrivial = 0;
  while (made < kRandomConfigs) {
    ++tries;
    auto cfg = random_config(rng, made);
    if (!cfg) continue;
    ++made;
    nontrivial += !parameter_space(cfg->q, cfg->G).basis.empty();
    compare_routes(*cfg, rng, kKappaPerConfig, st);
  }
  c.note(std::to_string(corpus.size()) + " corpus configurations, " + std::to_string(made) + " random ones (" +
         std::to_string(tries) + " drawn, " + std::to_string(nontrivial) + " with nonzero P_G)");
  c.note(std::to_string(st.samples) + " kappa samples, " + std::to_string(st.admissible) + " admissible, " +
         std::to_string(st.disagreements) + " disagreements");
  for (const auto& s : st.first) c.note(s);
  c.require(st.disagreements <= kAllowedDisagreements, "zero disagreements between the two routes");
  return c;
}

Criterion criterion8(const std::vector<Config>& corpus) {
  Criterion c;
  int checked = 0;
  for (const auto& cfg : corpus) {
    const auto cocycles = tqdha_cocycles(cfg.q, cfg.G);
    const auto ps = param_space(cfg.name, cfg.q, cfg.G);
    const int n = cfg.q.n(), order = cfg.G.order();
    std::vector<Vector> vs;
    for (const auto& x : cocycles) vs.push_back(constant_vector(x, cfg.q.field(), n, order));
    const int dim = rank_of_vectors(cfg.q.field(), vs, order * upper_pair_count(n));
    c.require(dim == ps.dimension, cfg.name + ": dim span(cocycles) " + std::to_string(dim) + " vs dim P_G " +
                                       std::to_string(ps.dimension));
    std::vector<Vector> images, basis;
    for (const auto& x : cocycles) {
      const auto k = kappa_from_cocycle(cfg.q, x);
      c.require(is_admissible(cfg.q, cfg.G, k), cfg.name + ": kappa_from_cocycle image admissible");
      images.push_back(k.to_vector(cfg.q.field(), order, n));
    }
    for (const auto& k : ps.basis) basis.push_back(k.to_vector(cfg.q.field(), order, n));
    c.require(same_span(cfg.q.field(), images, basis, order * pair_count(n)),
              cfg.name + ": cocycle images span P_G");
    ++checked;
  }
  c.note(std::to_string(checked) + " configurations");
  return c;
}

Criterion criterion9(const std::vector<const Config*>& diagonal, const Config& ex55, const Config& ex56) {
  Criterion c;
  int cochains = 0;
  for (const Config* cfg : diagonal) {
    const int n = cfg->q.n();
    for (int m = 0; m <= 3; ++m)
      for (const auto& beta : compositions(n, m))
        for (Mask a = 0; a < bit(n); ++a)
          for (int g = 0; g < cfg->G.order(); ++g) {
            Cochain x;
            x.add(CochainGenerator{a, beta, g}, cfg->q.field().one());
            const bool ok = cochain_differential(cfg->q, cfg->G, cochain_differential(cfg->q, cfg->G, x)).is_zero();
            c.require(ok, cfg->name + ": d(d(" + x.to_string() + ")) = 0");
            ++cochains;
          }
  }
  c.note(std::to_string(cochains) + " generator cochains with d o d = 0 checked");
  for (const Config* cfg : {&ex55, &ex56})
    for (int m = 0; m <= 3; ++m) {
      const int formula = static_cast<int>(hochschild_basis_diagonal(cfg->q, cfg->G, m).size());
      const int brute = cohomology_bruteforce(cfg->q, cfg->G, m).dimension;
      c.note(cfg->name + " m=" + std::to_string(m) + ": basis " + std::to_string(formula) + ", complex " +
             std::to_string(brute));
      c.require(formula == brute, cfg->name + " m=" + std::to_string(m) + " counts agree");
    }
  return c;
}

FieldElement random_element(std::mt19937& rng, const Field& f) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  FieldElement x = f.zero();
  for (int k = 0; k < f.degree(); ++k) x = x + f.from_rational(Rational(num(rng), den(rng))) * f.zeta(k);
  if (f.has_extension())
    for (int k = 0; k < f.degree(); ++k) x = x + f.from_rational(Rational(num(rng), den(rng))) * f.zeta(k) * f.root();
  return x;
}

Criterion criterion10(const Config& ex53, const Config& ex57, const Config& ex58, std::mt19937& rng) {
  Criterion c;
  // scalar field axioms
  int axiom_failures = 0;
  const std::vector<Field> fields{Field(3), Field(5, "1 - z^3"), Field(12)};
  for (int t = 0; t < kFieldTriples; ++t) {
    const Field& f = fields[static_cast<size_t>(t) % fields.size()];
    const auto a = random_element(rng, f), b = random_element(rng, f), x = random_element(rng, f);
    bool ok = (a + (-a)).is_zero() && a * f.one() == a && (a * b) * x == a * (b * x);
    if (!a.is_zero()) ok = ok && (a.inverse() * a).is_one();
    axiom_failures += !ok;
  }
  c.note(std::to_string(kFieldTriples) + " field triples, " + std::to_string(axiom_failures) + " failures");
  c.require(axiom_failures == 0, "field axioms");

  // nullspace exactness
  int ns_failures = 0;
  const Field f3(3);
  const std::vector<FieldElement> pool{f3.zero(), f3.one(), -f3.one(), f3.zeta(1), -f3.zeta(1), f3.zeta(2), -f3.zeta(2)};
  for (int t = 0; t < kNullspaceMatrices; ++t) {
    const int r = std::uniform_int_distribution<int>(1, 8)(rng), cols = std::uniform_int_distribution<int>(1, 12)(rng);
    ExactMatrix m(f3, r, cols);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cols; ++j) m.set(i, j, pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)]);
    const auto ns = nullspace(m);
    bool ok = rank(m) + static_cast<int>(ns.size()) == cols;
    for (const auto& x : ns)
      for (const auto& y : m.apply(x)) ok = ok && y.is_zero();
    ns_failures += !ok;
  }
  c.note(std::to_string(kNullspaceMatrices) + " random matrices, " + std::to_string(ns_failures) + " nullspace failures");
  c.require(ns_failures == 0, "nullspace exactness");

  // confluence and associativity for admissible kappa
  int conf_failures = 0, assoc_failures = 0, words = 0, triples = 0;
  for (const Config* cfg : {&ex53, &ex57, &ex58}) {
    const int n = cfg->q.n(), order = cfg->G.order();
    KappaParameter k;
    for (const auto& b : param_space(cfg->name, cfg->q, cfg->G).basis)
      for (const auto& [key, v] : b.entries()) {
        const auto [g, i, j] = key;
        k.set(g, i, j, k.get(g, i, j) + v);
      }
    if (!is_admissible(cfg->q, cfg->G, k)) {
      c.require(false, cfg->name + ": combined basis kappa admissible");
      continue;
    }
    RewritingSystem left(cfg->q, cfg->G, k, RewritingSystem::Strategy::Leftmost);
    RewritingSystem right(cfg->q, cfg->G, k, RewritingSystem::Strategy::Rightmost);
    std::uniform_int_distribution<int> letter(0, n + order - 2), len(1, kConfluenceWordLength);
    for (int t = 0; t < kConfluenceWords; ++t, ++words) {
      Word w;
      for (int i = len(rng); i > 0; --i) w.letters.push_back(letter(rng));
      conf_failures += left.normal_form(w) != right.normal_form(w);
    }
    auto mono = [&] {
      return AlgebraElement::monomial(std::uniform_int_distribution<Mask>(0, bit(n) - 1)(rng),
                                      std::uniform_int_distribution<int>(0, order - 1)(rng), cfg->q.field().one());
    };
    for (int t = 0; t < kAssociativityTriples; ++t, ++triples) {
      const auto a = mono(), b = mono(), x = mono();
      assoc_failures += multiply(cfg->q, cfg->G, k, multiply(cfg->q, cfg->G, k, a, b), x) !=
                        multiply(cfg->q, cfg->G, k, a, multiply(cfg->q, cfg->G, k, b, x));
    }
  }
  c.note(std::to_string(words) + " words, " + std::to_string(conf_failures) + " confluence failures; " +
         std::to_string(triples) + " triples, " + std::to_string(assoc_failures) + " associativity failures");
  c.require(conf_failures == 0, "confluence");
  c.require(assoc_failures == 0, "associativity");

  c.note(std::to_string(bound_log.runs) + " parameter spaces computed, " + std::to_string(bound_log.violations.size()) +
         " above C(n,2)");
  for (const auto& v : bound_log.violations) c.note(v);
  c.require(bound_log.violations.empty(), "dim P_G <= C(n,2) on every run");
  return c;
}

}  // namespace

int main() {
  std::mt19937 rng(kSeed);
  const auto t0 = std::chrono::steady_clock::now();

  const Config ex53 = load("ex53.json"), ex55 = load("ex55.json"), ex56 = load("ex56.json"), ex57 = load("ex57.json"),
               ex57p = load("ex57_polynomial.json"), ex58 = load("ex58.json");
  const ProblemConfig raw55 = load_config(std::string(TQDHA_CONFIG_DIR) + "/ex55.json");
  const ProblemConfig raw56 = load_config(std::string(TQDHA_CONFIG_DIR) + "/ex56.json");

  std::vector<GrpnRun> grpn;
  struct Entry {
    int id;
    std::string title;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> entries{
      {1, "ex53 parameter space", [&] { return criterion1(ex53); }},
      {2, "ex55 parameter space, HH^2 list, cocycles", [&] { return criterion2(ex55, raw55.generators[0]); }},
      {3, "ex56 parameter space, HH^2 list, cocycles", [&] { return criterion3(ex56, raw56.generators[0]); }},
      {4, "ex58 symmetric group", [&] { return criterion4(ex58); }},
      {5, "G(r,p,n) parameter spaces for q = -1 and q = 1", [&] { return criterion5(grpn); }},
      {6, "ex57 non-monomial group", [&] { return criterion6(ex57, ex57p); }},
      {7, "admissibility vs Diamond Lemma",
       [&] {
         std::vector<Config> corpus{ex53, ex55, ex56, ex57, ex58};
         for (const auto& g : grpn) corpus.push_back(g.config);
         return criterion7(corpus, rng);
       }},
      {8, "cocycle route vs parameter space",
       [&] {
         std::vector<Config> corpus{ex53, ex55, ex56, ex57, ex58};
         for (const auto& g : grpn) corpus.push_back(g.config);
         return criterion8(corpus);
       }},
      {9, "d o d = 0 and HH^m counts vs cochain complex",
       [&] { return criterion9({&ex53, &ex55, &ex56}, ex55, ex56); }},
      {10, "property suites", [&] { return criterion10(ex53, ex57, ex58, rng); }},
  };

  int failed = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = e.run();
    } catch (const Error& err) {
      c.require(false, std::string("unexpected ") + err.kind() + ": " + err.what());
    } catch (const std::exception& err) {
      c.require(false, std::string("unexpected exception: ") + err.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !c.pass;
    std::ostringstream line;
    line << (c.pass ? "PASS" : "FAIL") << " [" << e.id << "] " << e.title << " (" << std::fixed;
    line.precision(2);
    line << secs << "s)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (10 - failed) << "/10 criteria passed in " << total << "s\n";
  return failed == 0 ? 0 : 1;
}
