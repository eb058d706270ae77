#include "tqdha/group.hpp"


namespace tqdha {

namespace {

std::string pair_name(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

}  // namespace

QuantumSystem::QuantumSystem(Field field, std::vector<Vector> q)
    : field_(std::move(field)), n_(static_cast<int>(q.size())), q_(std::move(q)) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(q_[static_cast<size_t>(i)].size()) != n_)
      throw DimensionMismatch("q must be an n x n grid");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if ((*this)(i, j).is_zero()) throw QInvariantViolation("q" + pair_name(i, j) + " is zero");
      if (i < j && !((*this)(i, j) * (*this)(j, i)).is_one())
        throw QInvariantViolation("q" + pair_name(i, j) + " * q" + pair_name(j, i) + " != 1");
    }
  }
}

QuantumSystem QuantumSystem::uniform(const Field& field, int n, const FieldElement& value) {
  std::vector<Vector> q(static_cast<size_t>(n), Vector(static_cast<size_t>(n), field.one()));
  const FieldElement inv = value.inverse();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) q[static_cast<size_t>(i)][static_cast<size_t>(j)] = value;
      if (i > j) q[static_cast<size_t>(i)][static_cast<size_t>(j)] = inv;
    }
  return QuantumSystem(field, std::move(q));
}

std::string matrix_key(const ExactMatrix& m) {
  std::string key;
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) key += std::to_string(c) + ":" + v.key() + ";";
    key += "/";
  }
  return key;
}

std::optional<int> FiniteGroup::find(const ExactMatrix& m) const {
  auto it = lookup_.find(matrix_key(m));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup close_group(const std::vector<ExactMatrix>& generators, int cap) {
  if (generators.empty()) throw PreconditionFailed("close_group needs at least one generator");
  if (cap < 1) throw PreconditionFailed("closure cap must be >= 1");
  const Field field = generators.front().field();
  const int n = generators.front().rows();
  for (size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator " + std::to_string(k) + " is not n x n");
    if (g.determinant().is_zero()) throw SingularGenerator("generator " + std::to_string(k) + " is singular");
  }

  FiniteGroup grp;
  grp.field_ = field;
  grp.dimension_ = n;
  auto add = [&](ExactMatrix m) {
    const int id = grp.order();
    if (id >= cap)
      throw GroupTooLarge("closure exceeds the cap of " + std::to_string(cap) + " elements");
    grp.lookup_.emplace(matrix_key(m), id);
    grp.elements_.push_back(GroupElement{std::move(m), id});
    return id;
  };
  // right[x][s] = index of x * s; parent/via record how each element was reached
  const size_t gens = generators.size();
  std::vector<int> right, parent{-1}, via{-1};
  add(ExactMatrix::identity(field, n));
  for (size_t x = 0; x < grp.elements_.size(); ++x)
    for (size_t s = 0; s < gens; ++s) {
      ExactMatrix y = grp.elements_[x].matrix * generators[s];
      auto id = grp.find(y);
      if (!id) {
        id = add(std::move(y));
        parent.push_back(static_cast<int>(x));
        via.push_back(static_cast<int>(s));
      }
      right.push_back(*id);
    }

  // Elements appear in BFS order, so a * b = (a * parent(b)) * via(b) is
  // already known when b is reached.
  const size_t order = grp.elements_.size();
  grp.mult_.assign(order * order, -1);
  grp.inverse_.assign(order, -1);
  for (size_t a = 0; a < order; ++a) {
    int* row = &grp.mult_[a * order];
    row[0] = static_cast<int>(a);
    for (size_t b = 1; b < order; ++b)
      row[b] = right[static_cast<size_t>(row[parent[b]]) * gens + static_cast<size_t>(via[b])];
    for (size_t b = 0; b < order; ++b)
      if (row[b] == 0) grp.inverse_[a] = static_cast<int>(b);
  }
  grp.conj_.resize(order * order);
  grp.conj_inv_.resize(order * order);
  for (size_t h = 0; h < order; ++h) {
    const int hi = grp.inverse_[h];
    for (size_t g = 0; g < order; ++g) {
      grp.conj_[h * order + g] = grp.multiply(grp.multiply(static_cast<int>(h), static_cast<int>(g)), hi);
      grp.conj_inv_[h * order + g] = grp.multiply(grp.multiply(hi, static_cast<int>(g)), static_cast<int>(h));
    }
  }
  return grp;
}

FieldElement quantum_minor(const QuantumSystem& q, const GroupElement& g, int i, int j, int k, int l) {
  return g.coef(k, i) * g.coef(l, j) - q(i, j) * g.coef(l, i) * g.coef(k, j);
}

bool acts_on_lambda(const QuantumSystem& q, const GroupElement& g) {
  const int n = q.n();
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r) {
      if (s == r) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          if (quantum_minor(q, g, s, r, j, i) != -q(i, j) * quantum_minor(q, g, s, r, i, j)) return false;
        }
    }
  for (int r = 0; r < n; ++r)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!(g.coef(i, r) * g.coef(j, r) * (q.field().one() + q(i, j))).is_zero()) return false;
  return true;
}

bool resolution_compatible(const QuantumSystem& q, const GroupElement& g) {
  // g.eps_{[r]+[s]} has coefficient c_lk on v_l (x) v_k.  It lies in the span of
  // eps_{[l]+[k]} = v_l (x) v_k - q_kl v_k (x) v_l (l < k) and eps_{2[l]} exactly
  // when c_kl = -q_kl c_lk for every l < k.
  const int n = q.n();
  for (int r = 0; r < n; ++r)
    for (int s = r; s < n; ++s) {
      auto c = [&](int l, int k) {
        if (r == s) return g.coef(l, r) * g.coef(k, r);
        return g.coef(l, r) * g.coef(k, s) - q(s, r) * g.coef(l, s) * g.coef(k, r);
      };
      for (int l = 0; l < n; ++l)
        for (int k = l + 1; k < n; ++k)
          if (!(c(k, l) + q(k, l) * c(l, k)).is_zero()) return false;
    }
  return true;
}

bool acts_on_quantum_polynomial(const QuantumSystem& q, const GroupElement& g) {
  const int n = q.n();
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      // coefficient of v_a v_b in g(v_s) g(v_r) - q_rs g(v_r) g(v_s)
      auto c = [&](int a, int b) { return g.coef(a, s) * g.coef(b, r) - q(r, s) * g.coef(a, r) * g.coef(b, s); };
      for (int a = 0; a < n; ++a) {
        if (!c(a, a).is_zero()) return false;
        // v_b v_a = q_ab v_a v_b for b > a
        for (int b = a + 1; b < n; ++b)
          if (!(c(a, b) + q(a, b) * c(b, a)).is_zero()) return false;
      }
    }
  return true;
}

bool is_diagonal(const ExactMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      if (c != r) return false;
  return true;
}

bool is_diagonal(const GroupElement& g) { return is_diagonal(g.matrix); }

ExactMatrix permutation_matrix(const Field& field, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  ExactMatrix m(field, n, n);
  for (int j = 0; j < n; ++j) m.set(perm[static_cast<size_t>(j)], j, field.one());
  return m;
}

ExactMatrix diagonal_matrix(const Field& field, const Vector& entries) {
  const int n = static_cast<int>(entries.size());
  ExactMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, entries[static_cast<size_t>(i)]);
  return m;
}

std::vector<ExactMatrix> build_grpn(const Field& field, int r, int p, int n) {
  if (r < 1 || p < 1 || n < 1) throw PreconditionFailed("G(r,p,n) needs positive r, p, n");
  if (r % p != 0) throw PreconditionFailed("G(r,p,n) needs p | r");
  const FieldElement zr = field.root_of_unity(r);
  std::vector<ExactMatrix> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) perm[static_cast<size_t>(j)] = j;
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]);
    gens.push_back(permutation_matrix(field, perm));
  }
  Vector d(static_cast<size_t>(n), field.one());
  d[0] = zr.pow(p);
  gens.push_back(diagonal_matrix(field, d));
  if (n >= 2) {
    Vector e(static_cast<size_t>(n), field.one());
    e[0] = zr;
    e[1] = zr.inverse();
    gens.push_back(diagonal_matrix(field, e));
  }
  return gens;
}

}  // namespace tqdha
