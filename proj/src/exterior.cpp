#include "tqdha/exterior.hpp"

namespace tqdha {

std::vector<int> mask_to_alpha(Mask m, int n) {
  std::vector<int> alpha(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) alpha[static_cast<size_t>(i)] = has(m, i) ? 1 : 0;
  return alpha;
}

Mask alpha_to_mask(const std::vector<int>& alpha) {
  Mask m = 0;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0 && alpha[i] != 1) throw DimensionMismatch("alpha entries must be 0 or 1");
    if (alpha[i]) m |= bit(static_cast<int>(i));
  }
  return m;
}

std::optional<FieldElement> lambda_product(const QuantumSystem& q, Mask a, Mask b) {
  if (a & b) return std::nullopt;
  // each v_j of b moves left past the v_l of a with l > j: v_l v_j = q_jl v_j v_l
  FieldElement c = q.field().one();
  const int n = q.n();
  for (int j = 0; j < n; ++j) {
    if (!has(b, j)) continue;
    for (int l = j + 1; l < n; ++l)
      if (has(a, l)) c = c * q(j, l);
  }
  return c;
}

LambdaVector act_on_monomial(const QuantumSystem& q, const GroupElement& g, Mask a) {
  LambdaVector acc{{0, q.field().one()}};
  const int n = q.n();
  for (int j = 0; j < n; ++j) {
    if (!has(a, j)) continue;
    LambdaVector next;
    for (const auto& [m, c] : acc) {
      for (int i = 0; i < n; ++i) {
        const FieldElement gij = g.coef(i, j);
        if (gij.is_zero()) continue;
        auto p = lambda_product(q, m, bit(i));
        if (!p) continue;
        FieldElement& slot = next[m | bit(i)];
        slot = slot + c * gij * *p;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    acc = std::move(next);
  }
  return acc;
}

AlgebraElement AlgebraElement::monomial(Mask alpha, int g, const FieldElement& c) {
  AlgebraElement e;
  e.add(alpha, g, c);
  return e;
}

void AlgebraElement::add(Mask alpha, int g, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{alpha, g}, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::add(const AlgebraElement& other, const FieldElement& scale) {
  if (scale.is_zero()) return;
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c * scale);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
  return r;
}

AlgebraElement AlgebraElement::operator*(const FieldElement& c) const {
  AlgebraElement r;
  r.add(*this, c);
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

FieldElement AlgebraElement::coefficient(Mask alpha, int g) const {
  auto it = terms_.find(Key{alpha, g});
  return it == terms_.end() ? FieldElement{} : it->second;
}

int AlgebraElement::max_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, degree(k.first));
  return d;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string word;
    for (int i = 0; i < kMaxDimension; ++i)
      if (has(k.first, i)) word += (word.empty() ? "" : " ") + std::string("v") + std::to_string(i + 1);
    if (k.second != 0 || word.empty()) word += (word.empty() ? "" : " ") + std::string("g") + std::to_string(k.second);

    std::string coef = c.to_string();
    bool negative = false;
    if (c.is_rational() && coef.front() == '-') {
      negative = true;
      coef.erase(0, 1);
    }
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    if (coef == "1") out += word;
    else if (c.is_rational()) out += coef + " " + word;
    else out += "(" + coef + ") " + word;
  }
  return out;
}

AlgebraElement skew_product(const QuantumSystem& q, const FiniteGroup& G, const AlgebraElement& x,
                            const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const LambdaVector moved = act_on_monomial(q, G[kx.second], ky.first);
      const int gh = G.multiply(kx.second, ky.second);
      for (const auto& [m, c] : moved) {
        auto p = lambda_product(q, kx.first, m);
        if (p) out.add(kx.first | m, gh, cx * cy * c * *p);
      }
    }
  }
  return out;
}

}  // namespace tqdha
