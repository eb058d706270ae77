#pragma once

// Monomials of the quantum exterior algebra and elements of its skew group
// algebra.  A monomial v^alpha (alpha in {0,1}^n) is a bitmask with bit i
// standing for v_{i+1}; the generators appear in increasing order.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tqdha/group.hpp"

namespace tqdha {

using Mask = std::uint32_t;

inline constexpr int kMaxDimension = 16;

inline int degree(Mask m) { return std::popcount(m); }
inline bool has(Mask m, int i) { return (m >> i) & 1U; }
inline Mask bit(int i) { return Mask{1} << i; }

std::vector<int> mask_to_alpha(Mask m, int n);
Mask alpha_to_mask(const std::vector<int>& alpha);

/// c with v^a v^b = c v^{a|b} in the quantum exterior algebra, or nullopt
/// when the product vanishes (a and b share a generator).
std::optional<FieldElement> lambda_product(const QuantumSystem& q, Mask a, Mask b);

/// Linear combination of exterior monomials.
using LambdaVector = std::map<Mask, FieldElement>;

/// g applied to v^a, expanded in the monomial basis.
LambdaVector act_on_monomial(const QuantumSystem& q, const GroupElement& g, Mask a);

/// Sum of c v^alpha g in the PBW basis; no stored zeros.
class AlgebraElement {
 public:
  using Key = std::pair<Mask, int>;  // (alpha, group index)

  AlgebraElement() = default;
  static AlgebraElement monomial(Mask alpha, int g, const FieldElement& c);

  void add(Mask alpha, int g, const FieldElement& c);
  void add(const AlgebraElement& other, const FieldElement& scale);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const FieldElement& c) const;
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  bool is_zero() const { return terms_.empty(); }
  FieldElement coefficient(Mask alpha, int g) const;
  const std::map<Key, FieldElement>& terms() const& { return terms_; }
  std::map<Key, FieldElement> terms() && { return std::move(terms_); }
  /// Largest |alpha| among the terms (-1 for zero).
  int max_degree() const;

  /// e.g. "-v1 v2 + g0"; the identity letter is written g0.
  std::string to_string() const;

 private:
  std::map<Key, FieldElement> terms_;
};

/// Product in the skew group algebra: (v^a g)(v^b h) = v^a (g.v^b) gh.
AlgebraElement skew_product(const QuantumSystem& q, const FiniteGroup& G, const AlgebraElement& x,
                            const AlgebraElement& y);

}  // namespace tqdha
