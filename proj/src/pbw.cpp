#include "tqdha/pbw.hpp"

#include "tqdha/parallel.hpp"

namespace tqdha {

namespace {

using Entries = std::vector<std::pair<int, FieldElement>>;

FieldElement delta(const Field& f, int a, int b) { return a == b ? f.one() : f.zero(); }

struct Block {
  std::vector<RowTag> tags;
  std::vector<Entries> rows;
};

}  // namespace

void KappaParameter::set(int g, int i, int j, const FieldElement& value) {
  if (g < 0 || i < 0 || i >= j) throw DimensionMismatch("kappa entries need g >= 0 and i < j");
  if (value.is_zero()) table_.erase(Key{g, i, j});
  else table_[Key{g, i, j}] = value;
}

FieldElement KappaParameter::get(int g, int i, int j) const {
  auto it = table_.find(Key{g, i, j});
  return it == table_.end() ? FieldElement{} : it->second;
}

FieldElement KappaParameter::value(const QuantumSystem& q, int g, int a, int b) const {
  if (a == b) return q.field().zero();
  if (a < b) return q.field().zero() + get(g, a, b);
  // kappa(v_a, v_b) with a > b: -q_ba^{-1} kappa(v_b, v_a) = -q_ab kappa(v_b, v_a)
  return -q(a, b) * get(g, b, a);
}

std::set<KappaParameter::Key> KappaParameter::support() const {
  std::set<Key> s;
  for (const auto& [k, v] : table_) s.insert(k);
  return s;
}

Vector KappaParameter::to_vector(const Field& field, int group_order, int n) const {
  Vector x(static_cast<size_t>(group_order * pair_count(n)), field.zero());
  for (const auto& [k, v] : table_) {
    const auto [g, i, j] = k;
    if (g >= group_order || j >= n)
      throw DimensionMismatch("kappa entry (g=" + std::to_string(g) + ", i=" + std::to_string(i + 1) +
                              ", j=" + std::to_string(j + 1) + ") is out of range");
    x[static_cast<size_t>(kappa_column(n, g, i, j))] = v;
  }
  return x;
}

KappaParameter KappaParameter::from_vector(const Vector& x, int group_order, int n) {
  KappaParameter k;
  for (int g = 0; g < group_order; ++g)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const FieldElement& v = x[static_cast<size_t>(kappa_column(n, g, i, j))];
        if (!v.is_zero()) k.set(g, i, j, v);
      }
  return k;
}

bool KappaParameter::operator==(const KappaParameter& o) const {
  if (table_.size() != o.table_.size()) return false;
  for (const auto& [k, v] : table_) {
    auto it = o.table_.find(k);
    if (it == o.table_.end() || it->second != v) return false;
  }
  return true;
}

int pair_count(int n) { return n * (n - 1) / 2; }

int kappa_column(int n, int g, int i, int j) {
  // pairs (i, j) with i < j in lexicographic order
  const int before = i * n - i * (i + 1) / 2;
  return g * pair_count(n) + before + (j - i - 1);
}

std::set<KappaParameter::Key> kappa_support_candidates(const QuantumSystem& q, const FiniteGroup& G) {
  std::set<KappaParameter::Key> out;
  const int n = q.n();
  for (const auto& g : G.elements()) {
    if (!is_diagonal(g)) continue;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool ok = g.coef(i, i) == -q(i, j) && g.coef(j, j) == -q(j, i);
        for (int k = 0; ok && k < n; ++k)
          if (k != i && k != j && g.coef(k, k) != q(k, i) * q(k, j)) ok = false;
        if (ok) out.insert({g.index, i, j});
      }
  }
  return out;
}

std::string RowTag::to_string() const {
  auto v = [](int x) { return std::to_string(x + 1); };
  switch (kind) {
    case Kind::Braid:
      return "braid h=g" + std::to_string(h) + " (i,j,k)=(" + v(a) + "," + v(b) + "," + v(c) + ") coefficient of v" +
             v(component);
    case Kind::Conjugation:
      return "conjugation g=g" + std::to_string(g) + " h=g" + std::to_string(h) + " (r,s)=(" + v(a) + "," + v(b) + ")";
    case Kind::Square:
      return std::string("square ") + (twin == 0 ? "v_i" : "v_j") + " h=g" + std::to_string(h) + " (i,j)=(" + v(a) +
             "," + v(b) + ") coefficient of v" + v(component);
    case Kind::Truncation:
      return "truncation g=g" + std::to_string(g) + " h=g" + std::to_string(h) + " r=" + v(a);
  }
  return "?";
}

void check_pbw_preconditions(const QuantumSystem& q, const FiniteGroup& G) {
  if (G.dimension() != q.n())
    throw DimensionMismatch("group acts on dimension " + std::to_string(G.dimension()) + " but q has n = " +
                            std::to_string(q.n()));
  if (q.n() > kMaxDimension) throw DimensionMismatch("dimension above " + std::to_string(kMaxDimension));
  for (const auto& g : G.elements())
    if (!acts_on_lambda(q, g))
      throw PreconditionFailed("condition (i) fails: g" + std::to_string(g.index) +
                               " does not act on the quantum exterior algebra by an automorphism");
}

ConstraintSystem build_constraint_system(const QuantumSystem& q, const FiniteGroup& G, int jobs) {
  check_pbw_preconditions(q, G);
  const Field& F = q.field();
  const int n = q.n();
  const int order = G.order();
  auto col = [n](int g, int i, int j) { return kappa_column(n, g, i, j); };

  // Blocks indexed by the outer loop variable so the merge order is fixed.
  std::vector<Block> braid(static_cast<size_t>(order)), conj(static_cast<size_t>(order)),
      square(static_cast<size_t>(order)), trunc(static_cast<size_t>(order));

  parallel_for(order, jobs, [&](int h) {
    const GroupElement& H = G[h];
    Block& out = braid[static_cast<size_t>(h)];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int t = 0; t < n; ++t) {
            Entries e;
            e.emplace_back(col(h, i, j), q(i, k) * q(j, k) * H.coef(t, k) - delta(F, t, k));
            e.emplace_back(col(h, i, k), q(j, k) * delta(F, t, j) - q(i, j) * H.coef(t, j));
            e.emplace_back(col(h, j, k), H.coef(t, i) - q(i, j) * q(i, k) * delta(F, t, i));
            out.tags.push_back({RowTag::Kind::Braid, h, -1, i, j, k, t, 0});
            out.rows.push_back(std::move(e));
          }
  });

  parallel_for(order, jobs, [&](int g) {
    Block& out = conj[static_cast<size_t>(g)];
    for (int h = 0; h < order; ++h) {
      const GroupElement& H = G[h];
      const int target = G.conjugate_by_inverse(h, g);
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) {
          Entries e;
          e.emplace_back(col(target, r, s), F.one());
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(col(g, i, j), -quantum_minor(q, H, r, s, i, j));
          out.tags.push_back({RowTag::Kind::Conjugation, h, g, r, s, -1, -1, 0});
          out.rows.push_back(std::move(e));
        }
    }
  });

  parallel_for(order, jobs, [&](int h) {
    const GroupElement& H = G[h];
    Block& out = square[static_cast<size_t>(h)];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int twin = 0; twin < 2; ++twin)
          for (int t = 0; t < n; ++t) {
            FieldElement c = twin == 0 ? q(i, j) * delta(F, t, i) + H.coef(t, i)
                                       : q(i, j) * H.coef(t, j) + delta(F, t, j);
            out.tags.push_back({RowTag::Kind::Square, h, -1, i, j, -1, t, twin});
            out.rows.push_back(Entries{{col(h, i, j), c}});
          }
  });

  parallel_for(order, jobs, [&](int g) {
    const GroupElement& Gg = G[g];
    Block& out = trunc[static_cast<size_t>(g)];
    for (int h = 0; h < order; ++h)
      for (int r = 0; r < n; ++r) {
        Entries e;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) e.emplace_back(col(h, i, j), Gg.coef(i, r) * Gg.coef(j, r));
        out.tags.push_back({RowTag::Kind::Truncation, h, g, r, -1, -1, -1, 0});
        out.rows.push_back(std::move(e));
      }
  });

  ConstraintSystem sys{ExactMatrix(F, 0, order * pair_count(n)), {}};
  for (auto* family : {&braid, &conj, &square, &trunc})
    for (auto& block : *family)
      for (size_t r = 0; r < block.rows.size(); ++r) {
        sys.matrix.append_row(std::move(block.rows[r]));
        sys.rows.push_back(block.tags[r]);
      }
  return sys;
}

ParameterSpace parameter_space(const QuantumSystem& q, const FiniteGroup& G, const ConstraintSystem& system) {
  ParameterSpace ps;
  for (const auto& x : nullspace(system.matrix)) ps.basis.push_back(KappaParameter::from_vector(x, G.order(), q.n()));
  ps.dimension = static_cast<int>(ps.basis.size());
  return ps;
}

ParameterSpace parameter_space(const QuantumSystem& q, const FiniteGroup& G, int jobs) {
  return parameter_space(q, G, build_constraint_system(q, G, jobs));
}

std::optional<RowTag> admissibility_witness(const ConstraintSystem& system, const KappaParameter& kappa,
                                            int group_order, int n) {
  const Vector x = kappa.to_vector(system.matrix.field(), group_order, n);
  auto r = system.matrix.first_violated_row(x);
  if (!r) return std::nullopt;
  return system.rows[static_cast<size_t>(*r)];
}

bool is_admissible(const QuantumSystem& q, const FiniteGroup& G, const KappaParameter& kappa) {
  return !admissibility_witness(build_constraint_system(q, G), kappa, G.order(), q.n());
}

}  // namespace tqdha
