#pragma once

// Quantum scalars, finite matrix groups over K and the compatibility checks
// between a group action and the quantum exterior / polynomial algebras.
//
// Index conventions: generators v_1..v_n are indexed 0..n-1.  A group
// element's matrix has entry (i, j) = g_i^j, the coefficient of v_i in g.v_j,
// so column j is the image of v_j and composition is the matrix product.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tqdha/matrix.hpp"

namespace tqdha {

/// The scalar matrix (q_ij).  Off-diagonal entries satisfy q_ij q_ji = 1;
/// diagonal entries are stored but never consulted.
class QuantumSystem {
 public:
  /// Validates that every q_ij is nonzero and q_ij q_ji = 1 for i != j;
  /// throws QInvariantViolation naming the offending pair (1-based).
  QuantumSystem(Field field, std::vector<Vector> q);

  /// q_ij = value for i < j, q_ji = value^{-1}, q_ii = 1.
  static QuantumSystem uniform(const Field& field, int n, const FieldElement& value);

  int n() const { return n_; }
  const Field& field() const { return field_; }
  const FieldElement& operator()(int i, int j) const {
    return q_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  const std::vector<Vector>& matrix() const { return q_; }

 private:
  Field field_;
  int n_;
  std::vector<Vector> q_;
};

struct GroupElement {
  ExactMatrix matrix;
  int index = 0;

  /// g_i^j: coefficient of v_i in g.v_j.
  FieldElement coef(int i, int j) const { return matrix.at(i, j); }
  int dimension() const { return matrix.rows(); }
};

/// A finite group of invertible matrices with precomputed tables.  Element 0
/// is the identity; the rest appear in breadth-first discovery order.
class FiniteGroup {
 public:
  int order() const { return static_cast<int>(elements_.size()); }
  int dimension() const { return dimension_; }
  const Field& field() const { return field_; }
  const GroupElement& operator[](int i) const { return elements_[static_cast<size_t>(i)]; }
  const std::vector<GroupElement>& elements() const { return elements_; }

  int multiply(int a, int b) const { return mult_[idx(a, b)]; }
  int inverse(int a) const { return inverse_[static_cast<size_t>(a)]; }
  /// Index of h g h^{-1}.
  int conjugate(int h, int g) const { return conj_[idx(h, g)]; }
  /// Index of h^{-1} g h.
  int conjugate_by_inverse(int h, int g) const { return conj_inv_[idx(h, g)]; }
  std::optional<int> find(const ExactMatrix& m) const;

 private:
  friend FiniteGroup close_group(const std::vector<ExactMatrix>& generators, int cap);
  size_t idx(int a, int b) const { return static_cast<size_t>(a) * elements_.size() + static_cast<size_t>(b); }

  Field field_{1};
  int dimension_ = 0;
  std::vector<GroupElement> elements_;
  std::unordered_map<std::string, int> lookup_;
  std::vector<int> mult_, inverse_, conj_, conj_inv_;
};

inline constexpr int kDefaultClosureCap = 10000;

/// Breadth-first closure under right multiplication by the generators.
/// Throws SingularGenerator, DimensionMismatch, GroupTooLarge.
FiniteGroup close_group(const std::vector<ExactMatrix>& generators, int cap = kDefaultClosureCap);

/// Stable text key of a matrix (used for deduplication).
std::string matrix_key(const ExactMatrix& m);

/// det_{ijkl}(g) = g_k^i g_l^j - q_ij g_l^i g_k^j.
FieldElement quantum_minor(const QuantumSystem& q, const GroupElement& g, int i, int j, int k, int l);

/// Whether g acts on the quantum exterior algebra by an automorphism: the
/// minor identities det_{srji} = -q_ij det_{srij} (s != r, i != j) and
/// g_i^r g_j^r (1 + q_ij) = 0 (i < j).
bool acts_on_lambda(const QuantumSystem& q, const GroupElement& g);

/// Whether g maps every degree-2 resolution generator eps_{[r]+[s]} (r <= s)
/// back into the span of such generators.
bool resolution_compatible(const QuantumSystem& q, const GroupElement& g);

/// Whether g preserves the relations v_s v_r = q_rs v_r v_s of the quantum
/// polynomial algebra (no truncation; q_ii taken to be 1).
bool acts_on_quantum_polynomial(const QuantumSystem& q, const GroupElement& g);

bool is_diagonal(const GroupElement& g);
bool is_diagonal(const ExactMatrix& m);

/// Matrix sending v_j to v_{perm[j]}.
ExactMatrix permutation_matrix(const Field& field, const std::vector<int>& perm);
ExactMatrix diagonal_matrix(const Field& field, const Vector& entries);

/// Generators of the Shephard-Todd group G(r, p, n): adjacent transpositions,
/// diag(zeta_r^p, 1, ..., 1) and diag(zeta_r, zeta_r^{-1}, 1, ..., 1).
std::vector<ExactMatrix> build_grpn(const Field& field, int r, int p, int n);

}  // namespace tqdha
