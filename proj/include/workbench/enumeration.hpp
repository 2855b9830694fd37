#pragma once

// Census machinery: generate all ai-semirings of a given order up to
// isomorphism, optionally with a fixed additive reduct.  Multiplication
// tables are filled cell by cell in row-major order; a partial table is
// rejected as soon as any fully determined associativity or distributivity
// instance fails.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "workbench/algebra.hpp"
#include "workbench/structure.hpp"

namespace workbench {

struct AddReduct {
  int order = 0;
  std::vector<Element> table;

  Element at(Element x, Element y) const {
    return table[std::size_t(x - 1) * order + (y - 1)];
  }
};

struct EnumerationResult {
  std::string reduct_label;  // "order-N" for a whole-order run
  long long count = 0;
  std::vector<FiniteAiSemiring> representatives;  // canonical form, sorted
};

// every commutative idempotent associative table on 1..n, up to relabelling
inline std::vector<AddReduct> all_join_semilattices(int n) {
  if (n < 1 || n > 4) throw StructureError("join-semilattice census needs 1 <= n <= 4");
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) cells.emplace_back(i, j);
  std::map<std::vector<std::uint8_t>, AddReduct> seen;
  std::vector<Element> t(std::size_t(n) * n, 0);
  auto at = [&](int i, int j) -> Element& {
    return t[std::size_t(i - 1) * n + (j - 1)];
  };
  for (int i = 1; i <= n; ++i) at(i, i) = Element(i);
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == cells.size()) {
      for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
          for (int z = 1; z <= n; ++z)
            if (at(at(x, y), z) != at(x, at(y, z))) return;
      // canonical form of the addition alone
      std::vector<std::uint8_t> best;
      detail::for_each_permutation(n, [&](const std::vector<Element>& perm) {
        std::vector<Element> inv(std::size_t(n) + 1);
        for (int o = 1; o <= n; ++o) inv[perm[o - 1]] = Element(o);
        std::vector<std::uint8_t> enc;
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            enc.push_back(perm[t[std::size_t(inv[i] - 1) * n + (inv[j] - 1)] - 1]);
        if (best.empty() || enc < best) best = std::move(enc);
      });
      seen.emplace(best, AddReduct{n, t});
      return;
    }
    auto [i, j] = cells[c];
    for (Element v = 1; v <= n; ++v) {
      at(i, j) = v;
      at(j, i) = v;
      self(self, c + 1);
    }
    at(i, j) = 0;
    at(j, i) = 0;
  };
  rec(rec, 0);
  std::vector<AddReduct> out;
  for (auto& [enc, red] : seen)
    out.push_back(AddReduct{n, std::vector<Element>(enc.begin(), enc.end())});
  return out;
}

namespace detail {

// backtracking generator of all multiplications over a fixed addition;
// calls sink(mul) for every complete row-major table
template <typename Sink>
void fill_multiplications(const AddReduct& add, Sink&& sink) {
  const int n = add.order;
  std::vector<Element> mul(std::size_t(n) * n, 0);
  auto get = [&](Element x, Element y) -> Element {
    return mul[std::size_t(x - 1) * n + (y - 1)];
  };
  // a partial-table check: every instance whose cells are all known must hold
  auto consistent = [&]() {
    for (Element x = 1; x <= n; ++x)
      for (Element y = 1; y <= n; ++y) {
        Element xy = get(x, y);
        if (!xy) continue;
        for (Element z = 1; z <= n; ++z) {
          Element yz = get(y, z);
          if (yz) {
            Element l = get(xy, z), r = get(x, yz);
            if (l && r && l != r) return false;
          }
          // x(y+z) = xy+xz and (y+z)x = yx+zx
          Element xz = get(x, z);
          if (xz) {
            Element xs = get(x, add.at(y, z));
            if (xs && xs != add.at(xy, xz)) return false;
          }
          Element yx = get(y, x), zx = get(z, x);
          if (yx && zx) {
            Element sx = get(add.at(y, z), x);
            if (sx && sx != add.at(yx, zx)) return false;
          }
        }
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == mul.size()) {
      sink(mul);
      return;
    }
    for (Element v = 1; v <= n; ++v) {
      mul[cell] = v;
      if (consistent()) self(self, cell + 1);
    }
    mul[cell] = 0;
  };
  rec(rec, 0);
}

}  // namespace detail

// all multiplications distributing over the given addition, up to the
// automorphisms of the addition; representatives are canonicalized
inline EnumerationResult enumerate_with_reduct(const AddReduct& add) {
  const int n = add.order;
  if (n < 1 || n > 4) throw StructureError("fixed-reduct census needs 1 <= n <= 4");
  FiniteAiSemiring addonly("", n, add.table, add.table);
  {
    ValidationReport rep = validate(addonly);
    if (!rep.ok())
      throw StructureError("the given reduct is not a join semilattice");
  }
  auto auts = automorphisms(addonly);  // automorphisms of (S,+) since mul=add

  std::map<std::vector<Element>, std::vector<Element>> classes;
  detail::fill_multiplications(add, [&](const std::vector<Element>& mul) {
    std::vector<Element> best = mul;
    for (const auto& perm : auts) {
      std::vector<Element> inv(std::size_t(n) + 1);
      for (int o = 1; o <= n; ++o) inv[perm[o - 1]] = Element(o);
      std::vector<Element> rel(std::size_t(n) * n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          rel[std::size_t(i - 1) * n + (j - 1)] =
              perm[mul[std::size_t(inv[i] - 1) * n + (inv[j] - 1)] - 1];
      if (rel < best) best = std::move(rel);
    }
    classes.emplace(best, mul);
  });

  EnumerationResult res;
  res.reduct_label = "reduct-" + std::to_string(n);
  std::vector<std::pair<CanonicalForm, FiniteAiSemiring>> reps;
  for (auto& [key, mul] : classes) {
    FiniteAiSemiring a("", n, add.table, mul);
    reps.emplace_back(canonical_form(a), canonical_algebra(a));
  }
  std::sort(reps.begin(), reps.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  for (auto& [f, a] : reps) res.representatives.push_back(std::move(a));
  res.count = (long long)res.representatives.size();
  return res;
}

// union over all additive reducts of order n, globally deduplicated by
// canonical form and sorted; the order-4 run requires the stretch flag
inline EnumerationResult enumerate_order(int n, bool stretch = false) {
  if (n < 1 || n > 4) throw StructureError("enumeration needs 1 <= n <= 4");
  if (n == 4 && !stretch)
    throw BudgetError("the order-4 census needs the stretch flag");
  std::map<CanonicalForm, FiniteAiSemiring> all;
  for (const AddReduct& red : all_join_semilattices(n)) {
    EnumerationResult part = enumerate_with_reduct(red);
    for (auto& a : part.representatives) all.emplace(canonical_form(a), a);
  }
  EnumerationResult res;
  res.reduct_label = "order-" + std::to_string(n);
  for (auto& [f, a] : all) res.representatives.push_back(a);
  res.count = (long long)res.representatives.size();
  return res;
}

}  // namespace workbench
