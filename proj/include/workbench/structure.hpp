#pragma once

// Isomorphism-class machinery: canonical forms by exhaustive relabelling,
// backtracking homomorphism / embedding / isomorphism search, congruence
// enumeration, subdirect-product witnesses, and multiplicative duals.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "workbench/algebra.hpp"

namespace workbench {

struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

constexpr int kCanonicalMaxOrder = 6;

template <typename F>
void for_each_permutation(int n, F&& fn) {
  std::vector<Element> perm(std::size_t(n), Element(0));
  std::iota(perm.begin(), perm.end(), Element(1));
  do {
    fn(perm);  // perm[old-1] = new
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::vector<std::uint8_t> relabelled_encoding(const FiniteAiSemiring& a,
                                                     const std::vector<Element>& perm) {
  const int n = a.order;
  std::vector<Element> inv(std::size_t(n) + 1);
  for (int o = 1; o <= n; ++o) inv[perm[o - 1]] = Element(o);
  std::vector<std::uint8_t> enc;
  enc.reserve(std::size_t(2) * n * n + 1);
  enc.push_back(std::uint8_t(n));
  for (int t = 0; t < 2; ++t)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Element x = inv[i], y = inv[j];
        Element r = t == 0 ? a.add(x, y) : a.mul(x, y);
        enc.push_back(perm[r - 1]);
      }
  return enc;
}

}  // namespace detail

// lexicographically least (add, mul) encoding over all n! relabellings;
// complete isomorphism invariant for small orders
inline CanonicalForm canonical_form(const FiniteAiSemiring& a) {
  if (a.order > detail::kCanonicalMaxOrder)
    throw BudgetError("canonical form is limited to order <= 6");
  CanonicalForm best;
  detail::for_each_permutation(a.order, [&](const std::vector<Element>& perm) {
    auto enc = detail::relabelled_encoding(a, perm);
    if (best.bytes.empty() || enc < best.bytes) best.bytes = std::move(enc);
  });
  return best;
}

// the representative algebra whose encoding is the canonical form
inline FiniteAiSemiring canonical_algebra(const FiniteAiSemiring& a,
                                          const std::string& name = "") {
  CanonicalForm f = canonical_form(a);
  const int n = f.bytes[0];
  std::vector<Element> add(f.bytes.begin() + 1, f.bytes.begin() + 1 + n * n);
  std::vector<Element> mul(f.bytes.begin() + 1 + n * n, f.bytes.end());
  return FiniteAiSemiring(name.empty() ? a.name : name, n, std::move(add),
                          std::move(mul));
}

// --------------------------------------------------------------------- maps

struct ElementMap {
  FiniteAiSemiring source, target;
  std::vector<Element> image;  // image[i-1] = image of source element i

  Element operator()(Element x) const { return image[x - 1]; }

  bool injective() const {
    std::vector<bool> seen(std::size_t(target.order) + 1, false);
    for (Element v : image) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
  bool preserves_ops() const {
    for (Element x = 1; x <= source.order; ++x)
      for (Element y = 1; y <= source.order; ++y) {
        if (image[source.add(x, y) - 1] != target.add(image[x - 1], image[y - 1]))
          return false;
        if (image[source.mul(x, y) - 1] != target.mul(image[x - 1], image[y - 1]))
          return false;
      }
    return true;
  }
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(i + 1) + "->" + std::to_string(int(image[i]));
    }
    return out;
  }
};

struct SearchOptions {
  std::uint64_t node_budget = 50'000'000;
};

namespace detail {

// backtracking over element images with incremental add/mul checks; calls
// visit(image) for every complete homomorphism in lexicographic order; visit
// returns false to stop the search
template <typename Visit>
void hom_search(const FiniteAiSemiring& a, const FiniteAiSemiring& b,
                bool injective, const SearchOptions& opts, Visit&& visit) {
  std::vector<Element> img(std::size_t(a.order) + 1, 0);
  std::vector<bool> used(std::size_t(b.order) + 1, false);
  std::uint64_t nodes = 0;
  auto consistent = [&](int k) {
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        Element s = a.add(Element(i), Element(j));
        if (s <= k && img[s] != b.add(img[i], img[j])) return false;
        Element p = a.mul(Element(i), Element(j));
        if (p <= k && img[p] != b.mul(img[i], img[j])) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int k) -> bool {
    if (k > a.order) return visit(img);
    for (Element v = 1; v <= b.order; ++v) {
      if (injective && used[v]) continue;
      if (++nodes > opts.node_budget)
        throw BudgetError("homomorphism search exceeded its node budget");
      img[k] = v;
      if (consistent(k)) {
        used[v] = true;
        if (!self(self, k + 1)) return false;
        used[v] = false;
      }
      img[k] = 0;
    }
    return true;
  };
  rec(rec, 1);
}

}  // namespace detail

// all maps preserving add and mul, in lexicographic order of the image tuple
inline std::vector<ElementMap> find_homomorphisms(const FiniteAiSemiring& a,
                                                  const FiniteAiSemiring& b,
                                                  const SearchOptions& opts = {}) {
  std::vector<ElementMap> out;
  detail::hom_search(a, b, false, opts, [&](const std::vector<Element>& img) {
    out.push_back(ElementMap{a, b, {img.begin() + 1, img.end()}});
    return true;
  });
  return out;
}

inline std::optional<ElementMap> find_embedding(const FiniteAiSemiring& a,
                                                const FiniteAiSemiring& b,
                                                const SearchOptions& opts = {}) {
  std::optional<ElementMap> out;
  detail::hom_search(a, b, true, opts, [&](const std::vector<Element>& img) {
    out = ElementMap{a, b, {img.begin() + 1, img.end()}};
    return false;
  });
  return out;
}

inline std::optional<ElementMap> find_isomorphism(const FiniteAiSemiring& a,
                                                  const FiniteAiSemiring& b,
                                                  const SearchOptions& opts = {}) {
  if (a.order != b.order) return std::nullopt;
  return find_embedding(a, b, opts);
}

inline bool isomorphic(const FiniteAiSemiring& a, const FiniteAiSemiring& b) {
  return find_isomorphism(a, b).has_value();
}

// all relabellings fixing both tables, as image vectors
inline std::vector<std::vector<Element>> automorphisms(const FiniteAiSemiring& a) {
  std::vector<std::vector<Element>> out;
  detail::for_each_permutation(a.order, [&](const std::vector<Element>& perm) {
    bool ok = true;
    for (Element x = 1; x <= a.order && ok; ++x)
      for (Element y = 1; y <= a.order && ok; ++y)
        ok = perm[a.add(x, y) - 1] == a.add(perm[x - 1], perm[y - 1]) &&
             perm[a.mul(x, y) - 1] == a.mul(perm[x - 1], perm[y - 1]);
    if (ok) out.push_back(perm);
  });
  return out;
}

// ------------------------------------------------------------- congruences

// all congruences, in restricted-growth-string order (all-in-one partition
// first, the diagonal last)
inline std::vector<Congruence> congruences(const FiniteAiSemiring& a,
                                           int max_order = 6) {
  if (a.order > max_order)
    throw BudgetError("congruence enumeration is limited to order <= " +
                      std::to_string(max_order));
  std::vector<Congruence> out;
  std::vector<int> rgs(std::size_t(a.order), 0);
  auto rec = [&](auto&& self, int k, int maxblk) -> void {
    if (k == a.order) {
      Congruence c;
      c.block_of.assign(std::size_t(a.order) + 1, 0);
      for (int e = 1; e <= a.order; ++e) c.block_of[e] = rgs[e - 1];
      c.num_blocks = maxblk + 1;
      if (is_congruence(a, c)) out.push_back(std::move(c));
      return;
    }
    for (int blk = 0; blk <= maxblk + 1; ++blk) {
      rgs[k] = blk;
      self(self, k + 1, std::max(maxblk, blk));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

// --------------------------------------------------------------- subdirect

// injective homomorphism into the direct product of the factors whose every
// coordinate projection is onto; first witness in lexicographic order
inline std::optional<ElementMap> is_subdirect_embedding(
    const FiniteAiSemiring& a, const std::vector<FiniteAiSemiring>& factors,
    const SearchOptions& opts = {}) {
  if (factors.empty()) return std::nullopt;
  FiniteAiSemiring prod = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    prod = direct_product(prod, factors[i]);
  std::vector<int> sizes;
  for (const auto& f : factors) sizes.push_back(f.order);

  auto coordinate = [&](Element v, std::size_t ci) {
    int rest = 1;
    for (std::size_t j = ci + 1; j < sizes.size(); ++j) rest *= sizes[j];
    return int((v - 1) / rest) % sizes[ci] + 1;
  };
  std::optional<ElementMap> out;
  detail::hom_search(a, prod, true, opts, [&](const std::vector<Element>& img) {
    for (std::size_t ci = 0; ci < sizes.size(); ++ci) {
      std::vector<bool> seen(static_cast<std::size_t>(sizes[ci]) + 1, false);
      int cnt = 0;
      for (int e = 1; e <= a.order; ++e) {
        int c = coordinate(img[e], ci);
        if (!seen[c]) {
          seen[c] = true;
          ++cnt;
        }
      }
      if (cnt != sizes[ci]) return true;  // not onto; keep searching
    }
    out = ElementMap{a, prod, {img.begin() + 1, img.end()}};
    return false;
  });
  return out;
}

// --------------------------------------------------------------------- dual

// same addition, opposite multiplication
inline FiniteAiSemiring dual(const FiniteAiSemiring& a,
                             const std::string& name = "") {
  std::vector<Element> mul(std::size_t(a.order) * a.order);
  for (Element x = 1; x <= a.order; ++x)
    for (Element y = 1; y <= a.order; ++y)
      mul[std::size_t(x - 1) * a.order + (y - 1)] = a.mul(y, x);
  std::string nm = name.empty() ? "dual(" + a.name + ")" : name;
  return FiniteAiSemiring(nm, a.order, a.add_table, std::move(mul));
}

}  // namespace workbench
