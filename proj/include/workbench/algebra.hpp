#pragma once

// Finite additively idempotent semirings given by Cayley tables, the axiom
// validator, and the structural constructors (subalgebra, quotient, product,
// zero adjunction / removal).  Elements are the 1-based indices 1..n.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace workbench {

using Element = std::uint8_t;

struct WorkbenchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed input or a construction precondition failure
struct StructureError : WorkbenchError {
  using WorkbenchError::WorkbenchError;
};

struct BudgetError : WorkbenchError {
  using WorkbenchError::WorkbenchError;
};

struct UnknownNameError : WorkbenchError {
  using WorkbenchError::WorkbenchError;
};

struct ParseError : WorkbenchError {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : WorkbenchError(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct FiniteAiSemiring {
  std::string name;
  int order = 0;
  std::vector<Element> add_table;  // row-major, order*order entries in 1..order
  std::vector<Element> mul_table;

  FiniteAiSemiring() = default;
  FiniteAiSemiring(std::string nm, int n, std::vector<Element> add,
                   std::vector<Element> mul)
      : name(std::move(nm)), order(n), add_table(std::move(add)),
        mul_table(std::move(mul)) {
    if (n <= 0 || add_table.size() != std::size_t(n) * n ||
        mul_table.size() != std::size_t(n) * n) {
      throw StructureError("table dimensions do not match order " +
                           std::to_string(n));
    }
  }

  Element add(Element x, Element y) const {
    return add_table[std::size_t(x - 1) * order + (y - 1)];
  }
  Element mul(Element x, Element y) const {
    return mul_table[std::size_t(x - 1) * order + (y - 1)];
  }

  bool same_tables(const FiniteAiSemiring& o) const {
    return order == o.order && add_table == o.add_table &&
           mul_table == o.mul_table;
  }
};

// ---------------------------------------------------------------- validation

enum class Axiom {
  AddAssociative,
  AddCommutative,
  AddIdempotent,
  MulAssociative,
  Distributive,
};

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::AddAssociative: return "add-associative";
    case Axiom::AddCommutative: return "add-commutative";
    case Axiom::AddIdempotent: return "add-idempotent";
    case Axiom::MulAssociative: return "mul-associative";
    case Axiom::Distributive: return "distributive";
  }
  return "?";
}

struct AxiomViolation {
  Axiom axiom;
  int x = 0, y = 0, z = 0;
  bool right_side = false;  // distributivity only

  std::string describe() const {
    std::ostringstream os;
    os << axiom_name(axiom);
    if (axiom == Axiom::Distributive) os << (right_side ? " (right)" : " (left)");
    os << " fails at (" << x << "," << y << "," << z << ")";
    return os.str();
  }
};

struct ValidationReport {
  std::vector<std::string> structural;
  std::vector<AxiomViolation> violations;
  bool ok() const { return structural.empty() && violations.empty(); }
};

inline ValidationReport validate(const FiniteAiSemiring& a) {
  ValidationReport rep;
  const int n = a.order;
  if (n <= 0 || a.add_table.size() != std::size_t(n) * n ||
      a.mul_table.size() != std::size_t(n) * n) {
    rep.structural.push_back("table dimensions do not match order");
    return rep;
  }
  for (Element v : a.add_table)
    if (v < 1 || v > n) {
      rep.structural.push_back("addition entry out of range 1..n");
      return rep;
    }
  for (Element v : a.mul_table)
    if (v < 1 || v > n) {
      rep.structural.push_back("multiplication entry out of range 1..n");
      return rep;
    }
  for (Element x = 1; x <= n; ++x) {
    if (a.add(x, x) != x)
      rep.violations.push_back({Axiom::AddIdempotent, x, x, 0});
    for (Element y = 1; y <= n; ++y) {
      if (a.add(x, y) != a.add(y, x))
        rep.violations.push_back({Axiom::AddCommutative, x, y, 0});
      for (Element z = 1; z <= n; ++z) {
        if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z)))
          rep.violations.push_back({Axiom::AddAssociative, x, y, z});
        if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z)))
          rep.violations.push_back({Axiom::MulAssociative, x, y, z});
        if (a.mul(x, a.add(y, z)) != a.add(a.mul(x, y), a.mul(x, z)))
          rep.violations.push_back({Axiom::Distributive, x, y, z, false});
        if (a.mul(a.add(y, z), x) != a.add(a.mul(y, x), a.mul(z, x)))
          rep.violations.push_back({Axiom::Distributive, x, y, z, true});
      }
    }
  }
  return rep;
}

// ------------------------------------------------------------ additive order

struct AdditiveOrder {
  int order = 0;
  std::vector<bool> leq_;  // row-major

  bool leq(Element x, Element y) const {
    return leq_[std::size_t(x - 1) * order + (y - 1)];
  }
  // the sum of all elements
  Element top() const {
    for (Element t = 1; t <= order; ++t) {
      bool all = true;
      for (Element x = 1; x <= order && all; ++x) all = leq(x, t);
      if (all) return t;
    }
    return 0;  // unreachable for a valid algebra
  }
  Element bottom_or_zero() const {
    for (Element b = 1; b <= order; ++b) {
      bool all = true;
      for (Element x = 1; x <= order && all; ++x) all = leq(b, x);
      if (all) return b;
    }
    return 0;  // no bottom
  }
};

// x <= y iff x + y = y
inline AdditiveOrder additive_order(const FiniteAiSemiring& a) {
  AdditiveOrder ord;
  ord.order = a.order;
  ord.leq_.resize(std::size_t(a.order) * a.order);
  for (Element x = 1; x <= a.order; ++x)
    for (Element y = 1; y <= a.order; ++y)
      ord.leq_[std::size_t(x - 1) * a.order + (y - 1)] = (a.add(x, y) == y);
  return ord;
}

// ---------------------------------------------------------------- congruence

struct Congruence {
  std::vector<int> block_of;  // index 0 unused; block ids 0..num_blocks-1
  int num_blocks = 0;

  static Congruence from_blocks(int order, const std::vector<std::vector<int>>& blocks) {
    Congruence c;
    c.block_of.assign(order + 1, -1);
    auto sorted = blocks;
    for (auto& b : sorted) std::sort(b.begin(), b.end());
    std::sort(sorted.begin(), sorted.end());
    c.num_blocks = int(sorted.size());
    for (int i = 0; i < c.num_blocks; ++i)
      for (int e : sorted[i]) {
        if (e < 1 || e > order || c.block_of[e] != -1)
          throw StructureError("partition does not cover 1..n exactly once");
        c.block_of[e] = i;
      }
    for (int e = 1; e <= order; ++e)
      if (c.block_of[e] == -1)
        throw StructureError("partition does not cover 1..n exactly once");
    return c;
  }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> bs(num_blocks);
    for (int e = 1; e < int(block_of.size()); ++e) bs[block_of[e]].push_back(e);
    return bs;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "{";
    auto bs = blocks();
    for (std::size_t i = 0; i < bs.size(); ++i) {
      os << (i ? "," : "") << "{";
      for (std::size_t j = 0; j < bs[i].size(); ++j)
        os << (j ? "," : "") << bs[i][j];
      os << "}";
    }
    os << "}";
    return os.str();
  }
};

// "{{1,3},{2},{4}}"
inline Congruence parse_partition(const std::string& text, int order) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip();
  if (i >= text.size() || text[i] != '{') throw ParseError("expected '{'", i);
  ++i;
  while (true) {
    skip();
    if (i < text.size() && text[i] == '}') { ++i; break; }
    if (i >= text.size() || text[i] != '{') throw ParseError("expected '{'", i);
    ++i;
    std::vector<int> block;
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      if (i == start) throw ParseError("expected element index", i);
      block.push_back(std::stoi(text.substr(start, i - start)));
      skip();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == '}') { ++i; break; }
      throw ParseError("expected ',' or '}'", i);
    }
    blocks.push_back(std::move(block));
    skip();
    if (i < text.size() && text[i] == ',') { ++i; continue; }
  }
  return Congruence::from_blocks(order, blocks);
}

inline bool is_congruence(const FiniteAiSemiring& a, const Congruence& c) {
  if (int(c.block_of.size()) != a.order + 1) return false;
  for (Element x = 1; x <= a.order; ++x)
    for (Element y = Element(x + 1); y <= a.order; ++y) {
      if (c.block_of[x] != c.block_of[y]) continue;
      for (Element z = 1; z <= a.order; ++z) {
        if (c.block_of[a.add(x, z)] != c.block_of[a.add(y, z)]) return false;
        if (c.block_of[a.mul(x, z)] != c.block_of[a.mul(y, z)]) return false;
        if (c.block_of[a.mul(z, x)] != c.block_of[a.mul(z, y)]) return false;
      }
    }
  return true;
}

// --------------------------------------------------------------- subalgebra

inline FiniteAiSemiring subalgebra(const FiniteAiSemiring& a,
                                   std::vector<int> subset,
                                   const std::string& name = "") {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw StructureError("empty subset");
  std::vector<int> idx(a.order + 1, 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > a.order)
      throw StructureError("subset element out of range");
    idx[subset[i]] = int(i) + 1;
  }
  for (int x : subset)
    for (int y : subset) {
      if (!idx[a.add(Element(x), Element(y))])
        throw StructureError("subset not closed under add at (" +
                             std::to_string(x) + "," + std::to_string(y) + ")");
      if (!idx[a.mul(Element(x), Element(y))])
        throw StructureError("subset not closed under mul at (" +
                             std::to_string(x) + "," + std::to_string(y) + ")");
    }
  const int n = int(subset.size());
  std::vector<Element> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[std::size_t(i) * n + j] =
          Element(idx[a.add(Element(subset[i]), Element(subset[j]))]);
      mul[std::size_t(i) * n + j] =
          Element(idx[a.mul(Element(subset[i]), Element(subset[j]))]);
    }
  return FiniteAiSemiring(name, n, std::move(add), std::move(mul));
}

// ----------------------------------------------------------------- quotient

// blocks are relabelled 1..k in order of their least element
inline FiniteAiSemiring quotient(const FiniteAiSemiring& a, const Congruence& c,
                                 const std::string& name = "") {
  if (!is_congruence(a, c))
    throw StructureError("partition is not a congruence of " + a.name);
  auto bs = c.blocks();
  std::sort(bs.begin(), bs.end(),
            [](const auto& l, const auto& r) { return l.front() < r.front(); });
  std::vector<int> newblk(a.order + 1, 0);
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (int e : bs[i]) newblk[e] = int(i) + 1;
  const int n = int(bs.size());
  std::vector<Element> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element x = Element(bs[i].front()), y = Element(bs[j].front());
      add[std::size_t(i) * n + j] = Element(newblk[a.add(x, y)]);
      mul[std::size_t(i) * n + j] = Element(newblk[a.mul(x, y)]);
    }
  return FiniteAiSemiring(name, n, std::move(add), std::move(mul));
}

// ------------------------------------------------------------------ product

inline FiniteAiSemiring direct_product(const FiniteAiSemiring& a,
                                       const FiniteAiSemiring& b,
                                       const std::string& name = "") {
  const int n = a.order * b.order;
  std::vector<Element> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  auto pack = [&](Element x, Element y) {
    return Element((x - 1) * b.order + y);
  };
  for (Element x1 = 1; x1 <= a.order; ++x1)
    for (Element y1 = 1; y1 <= b.order; ++y1)
      for (Element x2 = 1; x2 <= a.order; ++x2)
        for (Element y2 = 1; y2 <= b.order; ++y2) {
          Element p = pack(x1, y1), q = pack(x2, y2);
          add[std::size_t(p - 1) * n + (q - 1)] =
              pack(a.add(x1, x2), b.add(y1, y2));
          mul[std::size_t(p - 1) * n + (q - 1)] =
              pack(a.mul(x1, x2), b.mul(y1, y2));
        }
  std::string nm = name.empty() ? a.name + "*" + b.name : name;
  return FiniteAiSemiring(nm, n, std::move(add), std::move(mul));
}

// ----------------------------------------------------------- zero adjunction

// the fresh zero becomes element n+1: a+0=a, a0=0a=0
inline FiniteAiSemiring adjoin_zero(const FiniteAiSemiring& a,
                                    const std::string& name = "") {
  const int n = a.order + 1;
  std::vector<Element> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (Element x = 1; x <= n; ++x)
    for (Element y = 1; y <= n; ++y) {
      Element s, p;
      if (x == n && y == n) { s = Element(n); p = Element(n); }
      else if (x == n) { s = y; p = Element(n); }
      else if (y == n) { s = x; p = Element(n); }
      else { s = a.add(x, y); p = a.mul(x, y); }
      add[std::size_t(x - 1) * n + (y - 1)] = s;
      mul[std::size_t(x - 1) * n + (y - 1)] = p;
    }
  std::string nm = name.empty() ? a.name + "^0" : name;
  return FiniteAiSemiring(nm, n, std::move(add), std::move(mul));
}

inline std::optional<Element> find_zero(const FiniteAiSemiring& a) {
  for (Element z = 1; z <= a.order; ++z) {
    bool ok = true;
    for (Element x = 1; x <= a.order && ok; ++x)
      ok = a.add(z, x) == x && a.mul(z, x) == z && a.mul(x, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

// inverse of adjoin_zero: drop the element that is both the additive identity
// and a two-sided multiplicative zero
inline FiniteAiSemiring strip_zero(const FiniteAiSemiring& a,
                                   const std::string& name = "") {
  auto z = find_zero(a);
  if (!z) throw StructureError(a.name + " has no zero element to strip");
  if (a.order == 1) throw StructureError("cannot strip the only element");
  std::vector<int> rest;
  for (int e = 1; e <= a.order; ++e)
    if (e != *z) rest.push_back(e);
  return subalgebra(a, rest, name);  // throws if not closed
}

// -------------------------------------------------------------- text format

// line-oriented: `name <label>` (optional), `order <n>`, `add:` + n rows,
// `mul:` + n rows; '#' starts a comment
inline FiniteAiSemiring parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string line, name;
  int order = -1;
  std::vector<Element> add, mul;
  std::vector<Element>* current = nullptr;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "name") {
      std::string rest;
      std::getline(ls, rest);
      auto b = rest.find_first_not_of(" \t");
      name = b == std::string::npos ? "" : rest.substr(b);
    } else if (tok == "order") {
      if (!(ls >> order) || order <= 0)
        throw ParseError("bad order line", lineno);
    } else if (tok == "add:") {
      current = &add;
    } else if (tok == "mul:") {
      current = &mul;
    } else {
      if (!current || order <= 0)
        throw ParseError("row outside add:/mul: section", lineno);
      std::istringstream row(line);
      int v;
      while (row >> v) {
        if (v < 1 || v > order)
          throw ParseError("entry out of range 1..n", lineno);
        current->push_back(Element(v));
      }
    }
  }
  if (order <= 0) throw ParseError("missing order", 0);
  if (add.size() != std::size_t(order) * order)
    throw ParseError("addition table is not n x n", 0);
  if (mul.size() != std::size_t(order) * order)
    throw ParseError("multiplication table is not n x n", 0);
  return FiniteAiSemiring(name, order, std::move(add), std::move(mul));
}

inline std::string print_algebra(const FiniteAiSemiring& a) {
  std::ostringstream os;
  if (!a.name.empty()) os << "name " << a.name << "\n";
  os << "order " << a.order << "\n";
  for (int t = 0; t < 2; ++t) {
    os << (t == 0 ? "add:" : "mul:") << "\n";
    const auto& tab = t == 0 ? a.add_table : a.mul_table;
    for (int i = 0; i < a.order; ++i) {
      for (int j = 0; j < a.order; ++j)
        os << (j ? " " : "") << int(tab[std::size_t(i) * a.order + j]);
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace workbench
