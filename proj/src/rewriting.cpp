#include "tqdha/rewriting.hpp"

#include <sstream>

#include "tqdha/parallel.hpp"

namespace tqdha {

Word parse_word(const std::string& text, int n, int group_order) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'v' && tok[0] != 'g')) throw ParseError("bad word token '" + tok + "'");
    long k = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9' || k > 1000000) throw ParseError("bad word token '" + tok + "'");
      k = k * 10 + (tok[i] - '0');
    }
    if (tok[0] == 'v') {
      if (k < 1 || k > n) throw ParseError("generator '" + tok + "' out of range 1.." + std::to_string(n));
      w.letters.push_back(static_cast<int>(k - 1));
    } else {
      if (k >= group_order) throw ParseError("group element '" + tok + "' out of range 0.." + std::to_string(group_order - 1));
      if (k != 0) w.letters.push_back(n + static_cast<int>(k));
    }
  }
  return w;
}

std::string word_to_string(const Word& w, int n) {
  if (w.letters.empty()) return "g0";
  std::string s;
  for (int l : w.letters) {
    if (!s.empty()) s += ' ';
    s += l < n ? "v" + std::to_string(l + 1) : "g" + std::to_string(l - n);
  }
  return s;
}

Word monomial_word(Mask alpha, int g, int n) {
  Word w;
  for (int i = 0; i < n; ++i)
    if (has(alpha, i)) w.letters.push_back(i);
  if (g != 0) w.letters.push_back(n + g);
  return w;
}

RewritingSystem::RewritingSystem(const QuantumSystem& q, const FiniteGroup& G, const KappaParameter& kappa,
                                 Strategy strategy)
    : q_(q), G_(G), kappa_(kappa), strategy_(strategy) {
  if (G.dimension() != q.n()) throw DimensionMismatch("group and q disagree on n");
  if (q.n() > kMaxDimension) throw DimensionMismatch("dimension above " + std::to_string(kMaxDimension));
}

std::optional<WordCombination> RewritingSystem::reduce_at(const Word& w, size_t p) const {
  if (p + 1 >= w.letters.size()) return std::nullopt;
  const int n = q_.n();
  const int a = w.letters[p], b = w.letters[p + 1];
  auto splice = [&](std::vector<int> middle) {
    Word out;
    out.letters.reserve(w.letters.size() + 1);
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(p));
    out.letters.insert(out.letters.end(), middle.begin(), middle.end());
    out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<long>(p) + 2, w.letters.end());
    return out;
  };

  WordCombination out;
  if (a < n && b < n) {
    if (a < b) return std::nullopt;
    if (a == b) return out;  // v_i v_i -> 0
    // a = j > i = b
    out.emplace_back(splice({b, a}), q_(b, a));
    for (const auto& [key, value] : kappa_.entries()) {
      const auto [g, i, j] = key;
      if (i != b || j != a) continue;
      out.emplace_back(splice(g == 0 ? std::vector<int>{} : std::vector<int>{n + g}), value);
    }
    return out;
  }
  if (a >= n && b < n) {
    const GroupElement& g = G_[a - n];
    for (int i = 0; i < n; ++i) {
      FieldElement c = g.coef(i, b);
      if (!c.is_zero()) out.emplace_back(splice({i, a}), c);
    }
    return out;
  }
  if (a >= n && b >= n) {
    const int gh = G_.multiply(a - n, b - n);
    out.emplace_back(splice(gh == 0 ? std::vector<int>{} : std::vector<int>{n + gh}), q_.field().one());
    return out;
  }
  return std::nullopt;
}

std::optional<size_t> RewritingSystem::reducible_position(const Word& w) const {
  const int n = q_.n();
  auto reducible = [&](size_t p) {
    const int a = w.letters[p], b = w.letters[p + 1];
    if (a >= n) return true;  // g v or g h
    return b < n && a >= b;
  };
  const size_t len = w.letters.size();
  if (len < 2) return std::nullopt;
  if (strategy_ == Strategy::Leftmost) {
    for (size_t p = 0; p + 1 < len; ++p)
      if (reducible(p)) return p;
  } else {
    for (size_t p = len - 1; p-- > 0;)
      if (reducible(p)) return p;
  }
  return std::nullopt;
}

AlgebraElement RewritingSystem::normal_form(const Word& w) {
  if (auto it = memo_.find(w.letters); it != memo_.end()) return it->second;
  AlgebraElement result;
  if (auto p = reducible_position(w)) {
    ++steps_;
    result = normal_form(*reduce_at(w, *p));
  } else {
    const int n = q_.n();
    Mask alpha = 0;
    int g = 0;
    for (int l : w.letters) {
      if (l < n) alpha |= bit(l);
      else g = l - n;
    }
    result.add(alpha, g, q_.field().one());
  }
  memo_.emplace(w.letters, result);
  return result;
}

AlgebraElement RewritingSystem::normal_form(const WordCombination& c) {
  AlgebraElement out;
  for (const auto& [w, coef] : c) out.add(normal_form(w), coef);
  return out;
}

AlgebraElement RewritingSystem::product(const AlgebraElement& a, const AlgebraElement& b) {
  const int n = q_.n();
  AlgebraElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Word w = monomial_word(ka.first, ka.second, n);
      const Word right = monomial_word(kb.first, kb.second, n);
      w.letters.insert(w.letters.end(), right.letters.begin(), right.letters.end());
      out.add(normal_form(w), ca * cb);
    }
  return out;
}

std::vector<std::pair<std::string, Word>> ambiguity_words(int n, int group_order) {
  std::vector<std::pair<std::string, Word>> out;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) out.push_back({"vk vj vi", Word{{k, j, i}}});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) out.push_back({"vj vi vi", Word{{j, i, i}}});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) out.push_back({"vj vj vi", Word{{j, j, i}}});
  for (int g = 1; g < group_order; ++g)
    for (int i = 0; i < n; ++i) out.push_back({"g vi vi", Word{{n + g, i, i}}});
  for (int g = 1; g < group_order; ++g)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i) out.push_back({"g vj vi", Word{{n + g, j, i}}});
  return out;
}

DiamondResult diamond_oracle(const QuantumSystem& q, const FiniteGroup& G, const KappaParameter& kappa, int jobs) {
  check_pbw_preconditions(q, G);
  const auto words = ambiguity_words(q.n(), G.order());
  const int count = static_cast<int>(words.size());
  const int chunks = std::max(1, std::min(jobs, count));
  std::vector<std::optional<Ambiguity>> failures(static_cast<size_t>(count));

  parallel_for(chunks, chunks, [&](int c) {
    RewritingSystem rs(q, G, kappa);
    for (int idx = c; idx < count; idx += chunks) {
      const auto& [family, w] = words[static_cast<size_t>(idx)];
      AlgebraElement left = rs.normal_form(*rs.reduce_at(w, 0));
      AlgebraElement right = rs.normal_form(*rs.reduce_at(w, 1));
      if (left != right) failures[static_cast<size_t>(idx)] = Ambiguity{family, w, std::move(left), std::move(right)};
    }
  });

  DiamondResult result;
  result.checked = count;
  for (auto& f : failures)
    if (f) {
      result.resolvable = false;
      result.witness = std::move(f);
      break;
    }
  return result;
}

AlgebraElement multiply(const QuantumSystem& q, const FiniteGroup& G, const KappaParameter& kappa,
                        const AlgebraElement& a, const AlgebraElement& b) {
  if (auto w = admissibility_witness(build_constraint_system(q, G), kappa, G.order(), q.n()))
    throw NotAdmissible("kappa is not admissible: violates " + w->to_string());
  RewritingSystem rs(q, G, kappa);
  return rs.product(a, b);
}

}  // namespace tqdha
