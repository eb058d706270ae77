#pragma once

// Reduction system for the algebra generated by V and G subject to
//   v_j v_i -> q_ij v_i v_j + kappa(v_i, v_j)   (j > i)
//   v_i v_i -> 0
//   g v_j   -> sum_i g_i^j v_i g
//   g h     -> gh
// Normal words are strictly increasing v's followed by at most one group
// letter.  The identity element is the empty word, so it never appears as a
// letter.
//
// Termination: order words by length, then by the number of pairs (group
// letter, later v), then by the number of inversions among the v's.  The
// first rule either shortens the word or removes one inversion, the third
// moves a group letter right past one v, the other two shorten.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tqdha/pbw.hpp"

namespace tqdha {

/// Letters 0..n-1 are v_1..v_n; letter n + g is the group element g (g >= 1).
struct Word {
  std::vector<int> letters;
  bool operator<(const Word& o) const { return letters < o.letters; }
  bool operator==(const Word& o) const { return letters == o.letters; }
};

using WordCombination = std::vector<std::pair<Word, FieldElement>>;

/// Parses whitespace-separated tokens v<k> (1-based) and g<k> (0-based group
/// index, g0 the identity).  Throws ParseError.
Word parse_word(const std::string& text, int n, int group_order);
std::string word_to_string(const Word& w, int n);
/// The word v^alpha g.
Word monomial_word(Mask alpha, int g, int n);

class RewritingSystem {
 public:
  enum class Strategy { Leftmost, Rightmost };

  RewritingSystem(const QuantumSystem& q, const FiniteGroup& G, const KappaParameter& kappa,
                  Strategy strategy = Strategy::Leftmost);

  int n() const { return q_.n(); }
  Word v(int i) const { return Word{{i}}; }

  /// Rewrites the pair at positions (p, p+1); nullopt if no rule applies there.
  std::optional<WordCombination> reduce_at(const Word& w, size_t p) const;
  /// Position chosen by the strategy, if the word is reducible.
  std::optional<size_t> reducible_position(const Word& w) const;

  AlgebraElement normal_form(const Word& w);
  AlgebraElement normal_form(const WordCombination& c);
  /// Concatenate and reduce, with no admissibility check.
  AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);

  /// Rule applications performed so far (cache hits cost nothing).
  long long steps() const { return steps_; }

 private:
  const QuantumSystem& q_;
  const FiniteGroup& G_;
  const KappaParameter& kappa_;
  Strategy strategy_;
  std::map<std::vector<int>, AlgebraElement> memo_;
  long long steps_ = 0;
};

struct Ambiguity {
  std::string family;  // "vk vj vi", "vj vi vi", "vj vj vi", "g vi vi", "g vj vi"
  Word word;
  AlgebraElement left;   // reduce the first pair, then normalize
  AlgebraElement right;  // reduce the second pair, then normalize
};

struct DiamondResult {
  bool resolvable = true;
  int checked = 0;
  std::optional<Ambiguity> witness;  // first failing ambiguity in enumeration order
};

/// All overlap ambiguities of the five families, in a fixed order.
std::vector<std::pair<std::string, Word>> ambiguity_words(int n, int group_order);

/// Checks every ambiguity.  Throws PreconditionFailed like the constraint system.
DiamondResult diamond_oracle(const QuantumSystem& q, const FiniteGroup& G, const KappaParameter& kappa,
                             int jobs = 1);

/// Product in the deformed algebra; throws NotAdmissible unless kappa is admissible.
AlgebraElement multiply(const QuantumSystem& q, const FiniteGroup& G, const KappaParameter& kappa,
                        const AlgebraElement& a, const AlgebraElement& b);

}  // namespace tqdha
