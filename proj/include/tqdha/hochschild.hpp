#pragma once

// The resolution generators eps_beta = 1 (x) f_beta (x) 1, their differential,
// the cochain complex Hom(C, Lambda_q(V) g), constant 2-cocycles and the
// diagonal-action cohomology bases.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tqdha/pbw.hpp"

namespace tqdha {

using Beta = std::vector<int>;

/// c (x) v_{i1} (x) ... (x) v_{im} (x) 1.
struct TensorWord {
  std::vector<int> factors;
  FieldElement coefficient;
};

/// Expansion of f_beta by the recursion on the last tensor factor.  Terms
/// with the same factor sequence are merged; the order is lexicographic.
std::vector<TensorWord> f_beta(const QuantumSystem& q, const Beta& beta);

/// One summand c * (v_letter eps_beta) or c * (eps_beta v_letter) of d(eps).
struct ChainTerm {
  enum class Side { Left, Right };
  Side side;
  int letter;
  Beta beta;
  FieldElement coefficient;
};

std::vector<ChainTerm> chain_differential(const QuantumSystem& q, const Beta& beta);

/// Elements of the free bimodule on the eps_beta: sums of c v^a eps_beta v^b.
struct BimoduleKey {
  Mask left;
  Beta beta;
  Mask right;
  auto operator<=>(const BimoduleKey&) const = default;
};
using BimoduleElement = std::map<BimoduleKey, FieldElement>;

/// The chain differential extended bimodule-linearly.
BimoduleElement bimodule_differential(const QuantumSystem& q, const BimoduleElement& x);

/// (v^alpha g) eps_beta^*.
struct CochainGenerator {
  Mask alpha = 0;
  Beta beta;
  int g = 0;

  int homological_degree() const;
  int internal_degree() const;
  auto operator<=>(const CochainGenerator& o) const {
    if (auto c = g <=> o.g; c != 0) return c;
    if (auto c = beta <=> o.beta; c != 0) return c;
    return alpha <=> o.alpha;
  }
  bool operator==(const CochainGenerator&) const = default;
  std::string to_string() const;  // e.g. "(v1 v2 g2) e[0,0,2]"
};

class Cochain {
 public:
  void add(const CochainGenerator& gen, const FieldElement& c);
  void add(const Cochain& other, const FieldElement& scale);
  bool is_zero() const { return terms_.empty(); }
  const std::map<CochainGenerator, FieldElement>& terms() const& { return terms_; }
  std::map<CochainGenerator, FieldElement> terms() && { return std::move(terms_); }
  bool operator==(const Cochain& o) const;
  std::string to_string() const;

 private:
  std::map<CochainGenerator, FieldElement> terms_;
};

/// d((v^alpha g) eps_beta^*) = sum_j s_j [L_j v_j v^alpha g - (-1)^{beta_j} R_j v^alpha (g.v_j) g]
/// eps_{beta+[j]}^* with s_j = (-1)^{sum_{l<j} beta_l}, L_j = prod_{l<j} q_jl^{beta_l},
/// R_j = prod_{l>j} q_lj^{beta_l}.  Non-diagonal g is accepted only up to
/// source degree 2; above that UnsupportedRegime.
Cochain cochain_differential(const QuantumSystem& q, const FiniteGroup& G, const Cochain& c);

/// Unknown layout for constant 2-cochains: kappa_rs^g (r <= s), group major.
int upper_pair_count(int n);
int constant_column(int n, int g, int r, int s);
CochainGenerator constant_generator(int n, int g, int r, int s);

/// Linear system on constant 2-cochains: the cocycle equations for
/// eps_{[i]+[j]+[k]} (i<j<k), eps_{2[j]+[k]}, eps_{[i]+2[j]}, eps_{3[k]}
/// (n rows each), then G-invariance for every (h, g, r <= s).
ExactMatrix constant_cocycle_system(const QuantumSystem& q, const FiniteGroup& G, bool truncated);

/// Throws PreconditionFailed unless every g maps the degree-2 generators into
/// their span.
void check_cocycle_preconditions(const QuantumSystem& q, const FiniteGroup& G);

/// Basis (nullspace convention) of G-invariant constant 2-cocycles.
std::vector<Cochain> constant_2cocycles(const QuantumSystem& q, const FiniteGroup& G);
/// Those with every eps_{2[i]} coefficient zero.
std::vector<Cochain> tqdha_cocycles(const QuantumSystem& q, const FiniteGroup& G);

/// kappa_g(v_i, v_j) = -q_ij kappa_ij^g for i < j, where kappa_ij^g is the
/// coefficient of (g) eps_{[i]+[j]}^*.  Throws NotConstant, DiagonalNonzero.
KappaParameter kappa_from_cocycle(const QuantumSystem& q, const Cochain& c);

/// gamma in [-1, m]^n with gamma_i = -1 or (-1)^{gamma_i} prod_{j != i} q_ij^{gamma_j} = g_i^i.
std::set<std::vector<int>> cg_set(const QuantumSystem& q, const GroupElement& g, int m);

/// All beta in N^n with |beta| = m, lexicographically decreasing.
std::vector<Beta> compositions(int n, int m);

/// Character by which h scales (v^alpha g) eps_beta^* for diagonal G.
FieldElement diagonal_character(const GroupElement& h, const GroupElement& h_inverse, const CochainGenerator& gen);

/// Generators (v^alpha g) eps_beta^*, |beta| = m, beta - alpha in C_g, fixed by G.
/// With invariant_only = false the G-invariance filter is skipped.
std::vector<CochainGenerator> hochschild_basis_diagonal(const QuantumSystem& q, const FiniteGroup& G, int m,
                                                        bool invariant_only = true);

struct BruteforceLimits {
  int max_degree = 4;
  int max_dimension = 4;
  int max_group_order = 12;
};

struct BruteforceResult {
  int dimension = 0;                   // G-invariant cohomology
  std::vector<Cochain> representatives;
  int full_dimension = 0;              // before taking invariants
  std::vector<int> space_dimensions;   // full cochain spaces in degrees m-1, m, m+1
};

/// Builds the cochain spaces in degrees m-1, m, m+1, the two differentials and
/// computes dim ker d^{m+1} - rank d^m.  Throws NotDiagonal, DegreeTooLarge.
BruteforceResult cohomology_bruteforce(const QuantumSystem& q, const FiniteGroup& G, int m,
                                       const BruteforceLimits& limits = {});

}  // namespace tqdha
