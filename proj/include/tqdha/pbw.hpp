#pragma once

// Parameters kappa: V x V -> KG, the linear system cutting out the admissible
// ones, and the parameter space.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tqdha/exterior.hpp"

namespace tqdha {

/// kappa_g(v_i, v_j) for i < j (0-based), absent entries zero.  The remaining
/// values follow the quantum 2-form rule kappa(v_i, v_i) = 0 and
/// kappa(v_j, v_i) = -q_ij^{-1} kappa(v_i, v_j).
class KappaParameter {
 public:
  using Key = std::tuple<int, int, int>;  // (g, i, j), i < j

  KappaParameter() = default;

  /// Stores kappa_g(v_i, v_j); requires i < j.
  void set(int g, int i, int j, const FieldElement& value);
  /// Stored value for i < j.
  FieldElement get(int g, int i, int j) const;
  /// kappa_g(v_a, v_b) for any a, b via the 2-form rule.
  FieldElement value(const QuantumSystem& q, int g, int a, int b) const;

  bool is_zero() const { return table_.empty(); }
  const std::map<Key, FieldElement>& entries() const& { return table_; }
  std::map<Key, FieldElement> entries() && { return std::move(table_); }
  std::set<Key> support() const;

  /// Flattens to the unknown vector of the constraint system.
  Vector to_vector(const Field& field, int group_order, int n) const;
  static KappaParameter from_vector(const Vector& x, int group_order, int n);

  bool operator==(const KappaParameter& o) const;

 private:
  std::map<Key, FieldElement> table_;
};

int pair_count(int n);
/// Column of kappa_g(v_i, v_j) (i < j): group index major, pairs lexicographic.
int kappa_column(int n, int g, int i, int j);

struct ParameterSpace {
  int dimension = 0;
  std::vector<KappaParameter> basis;
};

/// Triples (g, i, j), i < j, with g diagonal, g_i^i = -q_ij, g_j^j = -q_ji and
/// g_k^k = q_ki q_kj for k != i, j.
std::set<KappaParameter::Key> kappa_support_candidates(const QuantumSystem& q, const FiniteGroup& G);

/// One row of the constraint system.
struct RowTag {
  enum class Kind { Braid, Conjugation, Square, Truncation };
  Kind kind;
  int h = 0;      // group element the row is about
  int g = -1;     // second group element (conjugation / truncation rows)
  int a = 0, b = 0, c = -1;  // index tuple (i<j<k, r<s, or r)
  int component = -1;        // coefficient of v_{component} for vector conditions
  int twin = 0;              // square rows: 0 for the v_i equation, 1 for v_j

  std::string to_string() const;
};

struct ConstraintSystem {
  ExactMatrix matrix;
  std::vector<RowTag> rows;
};

/// Throws PreconditionFailed unless every element of G acts on the quantum
/// exterior algebra (q_ij q_ji = 1 is a QuantumSystem invariant).
void check_pbw_preconditions(const QuantumSystem& q, const FiniteGroup& G);

/// Rows in order: braid (i<j<k, n rows each), conjugation (g, h, r<s),
/// square (i<j, two families of n rows), truncation (g, h, r).
ConstraintSystem build_constraint_system(const QuantumSystem& q, const FiniteGroup& G, int jobs = 1);

ParameterSpace parameter_space(const QuantumSystem& q, const FiniteGroup& G, int jobs = 1);
ParameterSpace parameter_space(const QuantumSystem& q, const FiniteGroup& G, const ConstraintSystem& system);

/// First violated row, if any.
std::optional<RowTag> admissibility_witness(const ConstraintSystem& system, const KappaParameter& kappa,
                                            int group_order, int n);
bool is_admissible(const QuantumSystem& q, const FiniteGroup& G, const KappaParameter& kappa);

}  // namespace tqdha
