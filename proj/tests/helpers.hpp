#pragma once

#include <random>
#include <string>
#include <vector>

#include "workbench/algebra.hpp"
#include "workbench/catalog.hpp"
#include "workbench/term.hpp"

namespace wbtest {

inline const workbench::Catalog& catalog() {
  static workbench::Catalog cat = workbench::Catalog::load();
  return cat;
}

inline const workbench::FiniteAiSemiring& alg(const std::string& name) {
  return catalog().get(name).algebra;
}

// deterministic rng for the property-style tests
inline std::mt19937& rng() {
  static std::mt19937 gen(20250809);
  return gen;
}

inline workbench::Word random_word(int num_vars, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> var(0, num_vars - 1);
  workbench::Word w;
  int n = len(rng());
  for (int i = 0; i < n; ++i)
    w.letters.push_back(workbench::Var(var(rng())));
  return w;
}

// relabel by a permutation perm[old-1] = new (1-based)
inline workbench::FiniteAiSemiring relabel(const workbench::FiniteAiSemiring& a,
                                           const std::vector<workbench::Element>& perm) {
  const int n = a.order;
  std::vector<workbench::Element> inv(n + 1, 0);
  for (int o = 1; o <= n; ++o) inv[perm[o - 1]] = workbench::Element(o);
  std::vector<workbench::Element> add(n * n), mul(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      add[(i - 1) * n + (j - 1)] = perm[a.add(inv[i], inv[j]) - 1];
      mul[(i - 1) * n + (j - 1)] = perm[a.mul(inv[i], inv[j]) - 1];
    }
  return workbench::FiniteAiSemiring(a.name + "'", n, add, mul);
}

}  // namespace wbtest
