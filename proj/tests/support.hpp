#pragma once
// Shared fixtures for the test binaries: the example configs, scalar pools and
// small oracles that do not go through the library code under test.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tqdha/config.hpp"

namespace tqdha::test {

inline std::string config_path(const std::string& name) { return std::string(TQDHA_CONFIG_DIR) + "/" + name; }

struct Example {
  ProblemConfig cfg;
  FiniteGroup G;
};

inline Example load_example(const std::string& name) {
  ProblemConfig cfg = load_config(config_path(name));
  FiniteGroup G = config_group(cfg);
  return {std::move(cfg), std::move(G)};
}

// {0, +-1, +-z, +-z^2}
inline std::vector<FieldElement> scalar_pool(const Field& f) {
  return {f.zero(), f.one(), -f.one(), f.zeta(1), -f.zeta(1), f.zeta(2), -f.zeta(2)};
}

inline FieldElement pick(std::mt19937& rng, const std::vector<FieldElement>& pool) {
  return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
}

// Random element of Q(z) with small rational coefficients in every basis slot.
inline FieldElement random_element(std::mt19937& rng, const Field& f) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  FieldElement x = f.zero();
  for (int k = 0; k < f.degree(); ++k)
    x = x + f.from_rational(Rational(num(rng), den(rng))) * f.zeta(k);
  if (f.has_extension())
    for (int k = 0; k < f.degree(); ++k)
      x = x + f.from_rational(Rational(num(rng), den(rng))) * f.zeta(k) * f.root();
  return x;
}

// Group element index of a matrix, or -1.
inline int index_of(const FiniteGroup& G, const ExactMatrix& m) {
  auto i = G.find(m);
  return i ? *i : -1;
}

}  // namespace tqdha::test
