#include "tqdha/hochschild.hpp"

#include <numeric>

namespace tqdha {

namespace {

int total(const Beta& b) { return std::accumulate(b.begin(), b.end(), 0); }

FieldElement sign(const Field& f, int exponent) { return exponent % 2 == 0 ? f.one() : -f.one(); }

// (-1)^{sum_{l<j} beta_l}
FieldElement koszul_sign(const Field& f, const Beta& beta, int j) {
  int s = 0;
  for (int l = 0; l < j; ++l) s += beta[static_cast<size_t>(l)];
  return sign(f, s);
}

// prod_{l<j} q_jl^{beta_l}
FieldElement left_factor(const QuantumSystem& q, const Beta& beta, int j) {
  FieldElement c = q.field().one();
  for (int l = 0; l < j; ++l) c = c * q(j, l).pow(beta[static_cast<size_t>(l)]);
  return c;
}

// prod_{l>j} q_lj^{beta_l}
FieldElement right_factor(const QuantumSystem& q, const Beta& beta, int j) {
  FieldElement c = q.field().one();
  for (int l = j + 1; l < q.n(); ++l) c = c * q(l, j).pow(beta[static_cast<size_t>(l)]);
  return c;
}

void check_beta(const QuantumSystem& q, const Beta& beta) {
  if (static_cast<int>(beta.size()) != q.n()) throw DimensionMismatch("beta must have n entries");
  for (int b : beta)
    if (b < 0) throw DimensionMismatch("beta entries must be non-negative");
}

}  // namespace

std::vector<TensorWord> f_beta(const QuantumSystem& q, const Beta& beta) {
  check_beta(q, beta);
  const int n = q.n();
  std::map<Beta, std::map<std::vector<int>, FieldElement>> memo;
  auto rec = [&](auto&& self, const Beta& b) -> const std::map<std::vector<int>, FieldElement>& {
    if (auto it = memo.find(b); it != memo.end()) return it->second;
    std::map<std::vector<int>, FieldElement> out;
    if (total(b) == 0) {
      out[{}] = q.field().one();
    } else {
      for (int j = 0; j < n; ++j) {
        if (b[static_cast<size_t>(j)] == 0) continue;
        FieldElement c = q.field().one();
        for (int k = j + 1; k < n; ++k) c = c * (-q(k, j)).pow(b[static_cast<size_t>(k)]);
        Beta smaller = b;
        --smaller[static_cast<size_t>(j)];
        for (const auto& [word, coef] : self(self, smaller)) {
          std::vector<int> w = word;
          w.push_back(j);
          FieldElement& slot = out[w];
          slot = slot + coef * c;
        }
      }
      std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    }
    return memo.emplace(b, std::move(out)).first->second;
  };
  std::vector<TensorWord> words;
  for (const auto& [w, c] : rec(rec, beta)) words.push_back(TensorWord{w, c});
  return words;
}

std::vector<ChainTerm> chain_differential(const QuantumSystem& q, const Beta& beta) {
  check_beta(q, beta);
  if (total(beta) < 1) throw PreconditionFailed("the chain differential needs |beta| >= 1");
  const Field& F = q.field();
  std::vector<ChainTerm> out;
  for (int j = 0; j < q.n(); ++j) {
    if (beta[static_cast<size_t>(j)] == 0) continue;
    Beta smaller = beta;
    --smaller[static_cast<size_t>(j)];
    const FieldElement s = koszul_sign(F, beta, j);
    out.push_back({ChainTerm::Side::Left, j, smaller, s * left_factor(q, beta, j)});
    out.push_back({ChainTerm::Side::Right, j, smaller,
                   s * sign(F, beta[static_cast<size_t>(j)]) * right_factor(q, beta, j)});
  }
  return out;
}

BimoduleElement bimodule_differential(const QuantumSystem& q, const BimoduleElement& x) {
  BimoduleElement out;
  for (const auto& [key, c] : x) {
    if (total(key.beta) == 0) continue;
    for (const auto& t : chain_differential(q, key.beta)) {
      Mask left = key.left, right = key.right;
      std::optional<FieldElement> p;
      if (t.side == ChainTerm::Side::Left) {
        p = lambda_product(q, key.left, bit(t.letter));
        left |= bit(t.letter);
      } else {
        p = lambda_product(q, bit(t.letter), key.right);
        right |= bit(t.letter);
      }
      if (!p) continue;
      FieldElement& slot = out[BimoduleKey{left, t.beta, right}];
      slot = slot + c * t.coefficient * *p;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

int CochainGenerator::homological_degree() const { return total(beta); }
int CochainGenerator::internal_degree() const { return degree(alpha) - total(beta); }

std::string CochainGenerator::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < beta.size(); ++i)
    if (has(alpha, static_cast<int>(i))) s += "v" + std::to_string(i + 1) + " ";
  s += "g" + std::to_string(g) + ") e[";
  for (size_t i = 0; i < beta.size(); ++i) s += (i ? "," : "") + std::to_string(beta[i]);
  return s + "]";
}

void Cochain::add(const CochainGenerator& gen, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(gen, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Cochain::add(const Cochain& other, const FieldElement& scale) {
  for (const auto& [gen, c] : other.terms_) add(gen, c * scale);
}

bool Cochain::operator==(const Cochain& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (!(a->first == b->first) || a->second != b->second) return false;
  return true;
}

std::string Cochain::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [gen, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.is_one() ? gen.to_string() : "(" + c.to_string() + ") " + gen.to_string();
  }
  return s;
}

Cochain cochain_differential(const QuantumSystem& q, const FiniteGroup& G, const Cochain& c) {
  const Field& F = q.field();
  const int n = q.n();
  Cochain out;
  for (const auto& [gen, coef] : c.terms()) {
    check_beta(q, gen.beta);
    const GroupElement& g = G[gen.g];
    if (!is_diagonal(g) && gen.homological_degree() > 2)
      throw UnsupportedRegime("non-diagonal g" + std::to_string(gen.g) + " in cochain degree " +
                              std::to_string(gen.homological_degree()));
    for (int j = 0; j < n; ++j) {
      Beta next = gen.beta;
      ++next[static_cast<size_t>(j)];
      const FieldElement s = koszul_sign(F, gen.beta, j);
      // v_j v^alpha g
      if (auto p = lambda_product(q, bit(j), gen.alpha))
        out.add({gen.alpha | bit(j), next, gen.g}, coef * s * left_factor(q, gen.beta, j) * *p);
      // v^alpha (g.v_j) g
      const FieldElement r = -coef * s * sign(F, gen.beta[static_cast<size_t>(j)]) * right_factor(q, gen.beta, j);
      for (int i = 0; i < n; ++i) {
        const FieldElement gij = g.coef(i, j);
        if (gij.is_zero()) continue;
        if (auto p = lambda_product(q, gen.alpha, bit(i))) out.add({gen.alpha | bit(i), next, gen.g}, r * gij * *p);
      }
    }
  }
  return out;
}

int upper_pair_count(int n) { return n * (n + 1) / 2; }

int constant_column(int n, int g, int r, int s) {
  return g * upper_pair_count(n) + r * n - r * (r - 1) / 2 + (s - r);
}

CochainGenerator constant_generator(int n, int g, int r, int s) {
  Beta b(static_cast<size_t>(n), 0);
  ++b[static_cast<size_t>(r)];
  ++b[static_cast<size_t>(s)];
  return CochainGenerator{0, b, g};
}

void check_cocycle_preconditions(const QuantumSystem& q, const FiniteGroup& G) {
  if (G.dimension() != q.n()) throw DimensionMismatch("group and q disagree on n");
  for (const auto& g : G.elements())
    if (!resolution_compatible(q, g))
      throw PreconditionFailed("g" + std::to_string(g.index) + " does not act compatibly on the resolution");
}

ExactMatrix constant_cocycle_system(const QuantumSystem& q, const FiniteGroup& G, bool truncated) {
  check_cocycle_preconditions(q, G);
  const Field& F = q.field();
  const int n = q.n();
  const int order = G.order();
  auto col = [n](int g, int r, int s) { return constant_column(n, g, r, s); };
  auto d = [&F](int a, int b) { return a == b ? F.one() : F.zero(); };
  ExactMatrix M(F, 0, order * upper_pair_count(n));

  for (int gi = 0; gi < order; ++gi) {
    const GroupElement& g = G[gi];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int t = 0; t < n; ++t)
            M.append_row({{col(gi, j, k), d(t, i) - q(j, i) * q(k, i) * g.coef(t, i)},
                          {col(gi, i, k), -(q(j, i) * d(t, j) - q(k, j) * g.coef(t, j))},
                          {col(gi, i, j), q(k, i) * q(k, j) * d(t, k) - g.coef(t, k)}});
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int t = 0; t < n; ++t)
          M.append_row({{col(gi, j, j), q(k, j) * q(k, j) * d(t, k) - g.coef(t, k)},
                        {col(gi, j, k), d(t, j) + q(k, j) * g.coef(t, j)}});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int t = 0; t < n; ++t)
          M.append_row({{col(gi, j, j), d(t, i) - q(j, i) * q(j, i) * g.coef(t, i)},
                        {col(gi, i, j), -(q(j, i) * d(t, j) + g.coef(t, j))}});
    for (int k = 0; k < n; ++k)
      for (int t = 0; t < n; ++t) M.append_row({{col(gi, k, k), d(t, k) - g.coef(t, k)}});
  }

  // h eta(h^{-1}. eps_{[r]+[s]}) h^{-1} = eta(eps_{[r]+[s]}), component hgh^{-1}
  for (int h = 0; h < order; ++h) {
    const GroupElement& hi = G[G.inverse(h)];
    for (int gi = 0; gi < order; ++gi)
      for (int r = 0; r < n; ++r)
        for (int s = r; s < n; ++s) {
          std::vector<std::pair<int, FieldElement>> row;
          for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
              FieldElement c;
              if (r == s) c = hi.coef(i, r) * hi.coef(j, r);
              else if (i == j) c = (F.one() - q(s, r)) * hi.coef(i, r) * hi.coef(i, s);
              else c = hi.coef(i, r) * hi.coef(j, s) - q(s, r) * hi.coef(i, s) * hi.coef(j, r);
              row.emplace_back(col(gi, i, j), c);
            }
          row.emplace_back(col(G.conjugate(h, gi), r, s), -F.one());
          M.append_row(std::move(row));
        }
  }

  if (truncated)
    for (int gi = 0; gi < order; ++gi)
      for (int i = 0; i < n; ++i) M.append_row({{col(gi, i, i), F.one()}});
  return M;
}

namespace {

std::vector<Cochain> cocycle_basis(const QuantumSystem& q, const FiniteGroup& G, bool truncated) {
  const int n = q.n();
  std::vector<Cochain> out;
  for (const auto& x : nullspace(constant_cocycle_system(q, G, truncated))) {
    Cochain c;
    for (int g = 0; g < G.order(); ++g)
      for (int r = 0; r < n; ++r)
        for (int s = r; s < n; ++s) c.add(constant_generator(n, g, r, s), x[static_cast<size_t>(constant_column(n, g, r, s))]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Cochain> constant_2cocycles(const QuantumSystem& q, const FiniteGroup& G) {
  return cocycle_basis(q, G, false);
}

std::vector<Cochain> tqdha_cocycles(const QuantumSystem& q, const FiniteGroup& G) {
  return cocycle_basis(q, G, true);
}

KappaParameter kappa_from_cocycle(const QuantumSystem& q, const Cochain& c) {
  KappaParameter k;
  for (const auto& [gen, coef] : c.terms()) {
    if (gen.alpha != 0 || gen.homological_degree() != 2)
      throw NotConstant("term " + gen.to_string() + " is not a constant 2-cochain");
    std::vector<int> idx;
    for (int i = 0; i < q.n(); ++i)
      for (int r = 0; r < gen.beta[static_cast<size_t>(i)]; ++r) idx.push_back(i);
    if (idx[0] == idx[1]) throw DiagonalNonzero("term " + gen.to_string() + " is nonzero on eps_{2[i]}");
    k.set(gen.g, idx[0], idx[1], -q(idx[0], idx[1]) * coef);
  }
  return k;
}

std::set<std::vector<int>> cg_set(const QuantumSystem& q, const GroupElement& g, int m) {
  if (!is_diagonal(g)) throw NotDiagonal("g" + std::to_string(g.index) + " is not diagonal");
  if (m < 0) throw PreconditionFailed("degree bound must be >= 0");
  const int n = q.n();
  std::set<std::vector<int>> out;
  std::vector<int> gamma(static_cast<size_t>(n), -1);
  while (true) {
    bool member = true;
    for (int i = 0; i < n && member; ++i) {
      if (gamma[static_cast<size_t>(i)] == -1) continue;
      FieldElement v = sign(q.field(), gamma[static_cast<size_t>(i)] + 2);
      for (int j = 0; j < n; ++j)
        if (j != i) v = v * q(i, j).pow(gamma[static_cast<size_t>(j)]);
      member = v == g.coef(i, i);
    }
    if (member) out.insert(gamma);
    int pos = 0;
    while (pos < n && gamma[static_cast<size_t>(pos)] == m) gamma[static_cast<size_t>(pos++)] = -1;
    if (pos == n) break;
    ++gamma[static_cast<size_t>(pos)];
  }
  return out;
}

std::vector<Beta> compositions(int n, int m) {
  std::vector<Beta> out;
  Beta b(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      b[static_cast<size_t>(pos)] = left;
      out.push_back(b);
      return;
    }
    for (int v = left; v >= 0; --v) {
      b[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (n == 0) {
    if (m == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, m);
  return out;
}

FieldElement diagonal_character(const GroupElement& h, const GroupElement& h_inverse, const CochainGenerator& gen) {
  FieldElement c = h.coef(0, 0).field().one();
  for (size_t i = 0; i < gen.beta.size(); ++i) {
    const int ii = static_cast<int>(i);
    if (has(gen.alpha, ii)) c = c * h.coef(ii, ii);
    c = c * h_inverse.coef(ii, ii).pow(gen.beta[i]);
  }
  return c;
}

std::vector<CochainGenerator> hochschild_basis_diagonal(const QuantumSystem& q, const FiniteGroup& G, int m,
                                                        bool invariant_only) {
  if (G.dimension() != q.n()) throw DimensionMismatch("group and q disagree on n");
  const int n = q.n();
  for (const auto& g : G.elements())
    if (!is_diagonal(g)) throw NotDiagonal("g" + std::to_string(g.index) + " is not diagonal");
  std::vector<CochainGenerator> out;
  for (const auto& g : G.elements()) {
    const auto cg = cg_set(q, g, m);
    for (const auto& beta : compositions(n, m))
      for (Mask alpha = 0; alpha < bit(n); ++alpha) {
        std::vector<int> gamma(beta);
        for (int i = 0; i < n; ++i) gamma[static_cast<size_t>(i)] -= has(alpha, i) ? 1 : 0;
        if (!cg.count(gamma)) continue;
        CochainGenerator gen{alpha, beta, g.index};
        bool fixed = true;
        for (int h = 0; invariant_only && fixed && h < G.order(); ++h)
          fixed = diagonal_character(G[h], G[G.inverse(h)], gen).is_one();
        if (fixed) out.push_back(gen);
      }
  }
  return out;
}

namespace {

// Scalar by which h scales (v^alpha g) eps_beta^*, computed from the action on
// the tensor words of f_beta and the product h (v^alpha g) h^{-1}.
FieldElement action_scalar(const QuantumSystem& q, const FiniteGroup& G, int h, const CochainGenerator& gen) {
  const GroupElement& hi = G[G.inverse(h)];
  const auto words = f_beta(q, gen.beta);
  FieldElement lambda = q.field().one();
  if (!words.empty())
    for (int f : words.front().factors) lambda = lambda * hi.coef(f, f);
  const AlgebraElement conj = skew_product(
      q, G, skew_product(q, G, AlgebraElement::monomial(0, h, q.field().one()),
                         AlgebraElement::monomial(gen.alpha, gen.g, q.field().one())),
      AlgebraElement::monomial(0, G.inverse(h), q.field().one()));
  if (conj.terms().size() != 1 || conj.terms().begin()->first != AlgebraElement::Key{gen.alpha, gen.g})
    throw PreconditionFailed("diagonal action expected to fix each cochain generator up to scalar");
  return lambda * conj.terms().begin()->second;
}

struct Block {
  std::vector<CochainGenerator> gens;
  std::map<CochainGenerator, int> index;
};

Block generators(const QuantumSystem& q, const FiniteGroup& G, int g, int k, bool invariant_only) {
  Block b;
  if (k < 0) return b;
  for (const auto& beta : compositions(q.n(), k))
    for (Mask alpha = 0; alpha < bit(q.n()); ++alpha) {
      CochainGenerator gen{alpha, beta, g};
      bool keep = true;
      for (int h = 0; invariant_only && keep && h < G.order(); ++h) keep = action_scalar(q, G, h, gen).is_one();
      if (keep) {
        b.index.emplace(gen, static_cast<int>(b.gens.size()));
        b.gens.push_back(gen);
      }
    }
  return b;
}

ExactMatrix differential_matrix(const QuantumSystem& q, const FiniteGroup& G, const Block& from, const Block& to) {
  ExactMatrix D(q.field(), static_cast<int>(to.gens.size()), static_cast<int>(from.gens.size()));
  for (size_t c = 0; c < from.gens.size(); ++c) {
    Cochain x;
    x.add(from.gens[c], q.field().one());
    const Cochain dx = cochain_differential(q, G, x);
    for (const auto& [gen, v] : dx.terms()) {
      auto it = to.index.find(gen);
      if (it == to.index.end()) throw PreconditionFailed("differential left the invariant subcomplex");
      D.set(it->second, static_cast<int>(c), v);
    }
  }
  return D;
}

struct BlockCohomology {
  int dimension = 0;
  std::vector<Cochain> representatives;
};

BlockCohomology block_cohomology(const QuantumSystem& q, const FiniteGroup& G, int g, int m, bool invariant_only,
                                 std::vector<int>* sizes) {
  const Block below = generators(q, G, g, m - 1, invariant_only);
  const Block here = generators(q, G, g, m, invariant_only);
  const Block above = generators(q, G, g, m + 1, invariant_only);
  if (sizes) {
    (*sizes)[0] += static_cast<int>(below.gens.size());
    (*sizes)[1] += static_cast<int>(here.gens.size());
    (*sizes)[2] += static_cast<int>(above.gens.size());
  }
  const ExactMatrix in = differential_matrix(q, G, below, here);
  const ExactMatrix out = differential_matrix(q, G, here, above);
  const int len = static_cast<int>(here.gens.size());

  BlockCohomology r;
  std::vector<Vector> span;
  for (int c = 0; c < in.cols(); ++c) {
    Vector v(static_cast<size_t>(len), q.field().zero());
    for (int row = 0; row < in.rows(); ++row) v[static_cast<size_t>(row)] = in.at(row, c);
    span.push_back(std::move(v));
  }
  int current = rank_of_vectors(q.field(), span, len);
  const int image_rank = current;
  const auto kernel = nullspace(out);
  for (const auto& k : kernel) {
    span.push_back(k);
    const int next = rank_of_vectors(q.field(), span, len);
    if (next == current) {
      span.pop_back();
      continue;
    }
    current = next;
    Cochain c;
    for (int i = 0; i < len; ++i) c.add(here.gens[static_cast<size_t>(i)], k[static_cast<size_t>(i)]);
    r.representatives.push_back(std::move(c));
  }
  r.dimension = static_cast<int>(kernel.size()) - image_rank;
  return r;
}

}  // namespace

BruteforceResult cohomology_bruteforce(const QuantumSystem& q, const FiniteGroup& G, int m,
                                       const BruteforceLimits& limits) {
  if (G.dimension() != q.n()) throw DimensionMismatch("group and q disagree on n");
  if (m < 0) throw PreconditionFailed("degree must be >= 0");
  if (m > limits.max_degree)
    throw DegreeTooLarge("degree " + std::to_string(m) + " exceeds the bound " + std::to_string(limits.max_degree));
  if (q.n() > limits.max_dimension || G.order() > limits.max_group_order)
    throw DegreeTooLarge("n = " + std::to_string(q.n()) + ", |G| = " + std::to_string(G.order()) +
                         " exceed the brute-force limits");
  for (const auto& g : G.elements())
    if (!is_diagonal(g)) throw NotDiagonal("g" + std::to_string(g.index) + " is not diagonal");

  BruteforceResult res;
  res.space_dimensions.assign(3, 0);
  for (int g = 0; g < G.order(); ++g) {
    auto inv = block_cohomology(q, G, g, m, true, nullptr);
    res.dimension += inv.dimension;
    for (auto& c : inv.representatives) res.representatives.push_back(std::move(c));
    res.full_dimension += block_cohomology(q, G, g, m, false, &res.space_dimensions).dimension;
  }
  return res;
}

}  // namespace tqdha
