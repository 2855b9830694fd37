#pragma once

// The syntactic layer: words (products of variables), term sums, identities,
// optional-variable schemes, the concrete grammar, and the word statistics the
// characterization predicates are built from.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "workbench/algebra.hpp"  // errors

namespace workbench {

using Var = std::uint8_t;        // index into an identity's variable list
using VarSet = std::uint32_t;    // bitmask over variable indices

constexpr int kMaxVars = 32;

struct Word {
  std::vector<Var> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  auto operator<=>(const Word&) const = default;
};

// a nonempty set of nonempty words; the additive idempotency and
// commutativity are baked into the representation
struct TermSum {
  std::vector<Word> words;  // sorted, duplicates collapsed

  static TermSum of(std::vector<Word> ws) {
    TermSum t;
    t.words = std::move(ws);
    std::sort(t.words.begin(), t.words.end());
    t.words.erase(std::unique(t.words.begin(), t.words.end()), t.words.end());
    return t;
  }
  bool contains(const Word& w) const {
    return std::binary_search(words.begin(), words.end(), w);
  }
  TermSum with(const Word& w) const {
    auto ws = words;
    ws.push_back(w);
    return of(std::move(ws));
  }
  auto operator<=>(const TermSum&) const = default;
};

struct Identity {
  std::vector<std::string> vars;  // names, indexed by Var
  TermSum lhs, rhs;
};

// optional variables may be erased (from every word) to produce the scheme's
// expansions; an empty optional set is a plain identity
struct IdentityScheme {
  Identity identity;
  std::vector<Var> optional_vars;  // sorted

  bool is_plain() const { return optional_vars.empty(); }
};

// the identity u ~ u + q over canonically named variables
struct UQPair {
  TermSum u;
  Word q;
  int num_vars = 0;
};

// ------------------------------------------------------------ word statistics

inline Var head(const Word& w) { return w.letters.front(); }
inline Var tail(const Word& w) { return w.letters.back(); }
inline int length(const Word& w) { return int(w.letters.size()); }

inline VarSet content(const Word& w) {
  VarSet s = 0;
  for (Var v : w.letters) s |= VarSet(1) << v;
  return s;
}

inline int multiplicity(Var x, const Word& w) {
  int m = 0;
  for (Var v : w.letters)
    if (v == x) ++m;
  return m;
}

// w minus its last letter; empty for a one-letter word
inline Word prefix(const Word& w) {
  return Word{{w.letters.begin(), w.letters.end() - 1}};
}

// w minus its first letter
inline Word suffix(const Word& w) {
  return Word{{w.letters.begin() + 1, w.letters.end()}};
}

// subword retaining the first occurrence of each variable
inline Word initial_part(const Word& w) {
  Word out;
  VarSet seen = 0;
  for (Var v : w.letters)
    if (!(seen & (VarSet(1) << v))) {
      seen |= VarSet(1) << v;
      out.letters.push_back(v);
    }
  return out;
}

// first letter of w after deleting the variables in ys; none if all deleted
inline std::optional<Var> head_excluding(VarSet ys, const Word& w) {
  for (Var v : w.letters)
    if (!(ys & (VarSet(1) << v))) return v;
  return std::nullopt;
}

inline VarSet content(const TermSum& u) {
  VarSet s = 0;
  for (const Word& w : u.words) s |= content(w);
  return s;
}

inline VarSet content(const std::vector<Word>& ws) {
  VarSet s = 0;
  for (const Word& w : ws) s |= content(w);
  return s;
}

// ------------------------------------------------------------ summand filters

inline std::vector<Word> sum_l_geq(int k, const TermSum& u) {
  std::vector<Word> out;
  for (const Word& w : u.words)
    if (length(w) >= k) out.push_back(w);
  return out;
}

inline std::vector<Word> sum_l_leq(int k, const TermSum& u) {
  std::vector<Word> out;
  for (const Word& w : u.words)
    if (length(w) <= k) out.push_back(w);
  return out;
}

inline std::vector<Word> sum_l_eq(int k, const TermSum& u) {
  std::vector<Word> out;
  for (const Word& w : u.words)
    if (length(w) == k) out.push_back(w);
  return out;
}

// summands with the same head as q
inline std::vector<Word> sum_h(const TermSum& u, const Word& q) {
  std::vector<Word> out;
  for (const Word& w : u.words)
    if (head(w) == head(q)) out.push_back(w);
  return out;
}

// summands whose content is inside c(q)
inline std::vector<Word> sum_d(const TermSum& u, const Word& q) {
  std::vector<Word> out;
  VarSet cq = content(q);
  for (const Word& w : u.words)
    if ((content(w) & ~cq) == 0) out.push_back(w);
  return out;
}

// variables occurring exactly once in q
inline VarSet m1(const Word& q) {
  VarSet s = 0;
  for (Var v : q.letters)
    if (multiplicity(v, q) == 1) s |= VarSet(1) << v;
  return s;
}

// every summand's tail occurs at most once in every summand, and a single
// occurrence forces equal tails
inline bool property_t(const TermSum& u) {
  for (const Word& wi : u.words)
    for (const Word& wj : u.words) {
      int m = multiplicity(tail(wi), wj);
      if (m > 1) return false;
      if (m == 1 && tail(wi) != tail(wj)) return false;
    }
  return true;
}

// q already a summand of u
inline bool is_trivial(const UQPair& p) { return p.u.contains(p.q); }

// ------------------------------------------------------------------- parsing
//
//   identity := sum ("≈"|"=") sum [";" "optional" var+]
//   sum      := word ("+" word)*
//   word     := factor+            ("*" optional between factors)
//   factor   := var ("^" int)?
//   var      := letter | letter digits | letter "_" digits

namespace detail {

struct Lexer {
  const std::string& text;
  std::size_t i = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= text.size();
  }
  bool peek_is(char c) {
    skip_ws();
    return i < text.size() && text[i] == c;
  }
  bool consume(char c) {
    skip_ws();
    if (i < text.size() && text[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  // "≈" (UTF-8 e2 89 88) or "="
  bool consume_approx() {
    skip_ws();
    if (i < text.size() && text[i] == '=') {
      ++i;
      return true;
    }
    if (i + 2 < text.size() && (unsigned char)text[i] == 0xe2 &&
        (unsigned char)text[i + 1] == 0x89 && (unsigned char)text[i + 2] == 0x88) {
      i += 3;
      return true;
    }
    return false;
  }
  std::optional<std::string> var_name() {
    skip_ws();
    if (i >= text.size() || !std::isalpha((unsigned char)text[i])) return std::nullopt;
    std::string v(1, text[i]);
    ++i;
    std::size_t j = i;
    if (j < text.size() && text[j] == '_') ++j;
    std::size_t d = j;
    while (d < text.size() && std::isdigit((unsigned char)text[d])) ++d;
    if (d > j) {
      // normalize x_1 -> x1
      v += text.substr(j, d - j);
      i = d;
    }
    return v;
  }
  int integer() {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
    if (i == start) throw ParseError("expected integer", i);
    return std::stoi(text.substr(start, i - start));
  }
};

}  // namespace detail

inline IdentityScheme parse_identity(const std::string& text) {
  detail::Lexer lx(text);
  std::vector<std::string> vars;
  auto var_index = [&](const std::string& name) -> Var {
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (vars[k] == name) return Var(k);
    if (vars.size() >= kMaxVars) throw ParseError("too many variables", lx.i);
    vars.push_back(name);
    return Var(vars.size() - 1);
  };
  auto parse_word = [&]() -> Word {
    Word w;
    while (true) {
      auto nm = lx.var_name();
      if (!nm) break;
      Var v = var_index(*nm);
      int k = 1;
      if (lx.i < text.size() && text[lx.i] == '^') {  // binds tightly
        ++lx.i;
        k = lx.integer();
        if (k < 1) throw ParseError("exponent must be positive", lx.i);
      }
      for (int r = 0; r < k; ++r) w.letters.push_back(v);
      // factors continue only when adjacent or joined by an explicit '*'
      if (lx.i < text.size() && std::isalpha((unsigned char)text[lx.i])) continue;
      if (!lx.consume('*')) break;
    }
    if (w.empty()) throw ParseError("empty word", lx.i);
    return w;
  };
  auto parse_sum = [&]() -> TermSum {
    std::vector<Word> ws;
    ws.push_back(parse_word());
    while (lx.consume('+')) ws.push_back(parse_word());
    return TermSum::of(std::move(ws));
  };

  Identity id;
  id.lhs = parse_sum();
  if (!lx.consume_approx()) throw ParseError("expected '≈' or '='", lx.i);
  id.rhs = parse_sum();
  IdentityScheme scheme;
  if (lx.consume(';')) {
    lx.skip_ws();
    if (text.compare(lx.i, 8, "optional") != 0)
      throw ParseError("expected 'optional'", lx.i);
    lx.i += 8;
    std::set<Var> opts;
    while (true) {
      auto nm = lx.var_name();
      if (!nm) break;
      bool known = false;
      for (std::size_t k = 0; k < vars.size(); ++k)
        if (vars[k] == *nm) {
          opts.insert(Var(k));
          known = true;
        }
      if (!known)
        throw ParseError("optional variable '" + *nm + "' not in identity", lx.i);
    }
    if (opts.empty()) throw ParseError("empty optional list", lx.i);
    scheme.optional_vars.assign(opts.begin(), opts.end());
  }
  if (!lx.eof()) throw ParseError("trailing input", lx.i);
  id.vars = std::move(vars);
  scheme.identity = std::move(id);
  return scheme;
}

// ------------------------------------------------------------------ printing

inline std::string print_word(const Word& w, const std::vector<std::string>& vars) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    os << (i ? "*" : "") << vars[w.letters[i]];
  return os.str();
}

inline std::string print_sum(const TermSum& t, const std::vector<std::string>& vars) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.words.size(); ++i)
    os << (i ? " + " : "") << print_word(t.words[i], vars);
  return os.str();
}

inline std::string print_identity(const Identity& id) {
  return print_sum(id.lhs, id.vars) + " \xE2\x89\x88 " + print_sum(id.rhs, id.vars);
}

inline std::string print_identity(const IdentityScheme& s) {
  std::string out = print_identity(s.identity);
  if (!s.optional_vars.empty()) {
    out += " ; optional";
    for (Var v : s.optional_vars) out += " " + s.identity.vars[v];
  }
  return out;
}

// ----------------------------------------------------------------- expansion

// one identity per subset of optional variables erased from every word;
// expansions that would empty a word are omitted; result deduplicated
inline std::vector<Identity> expand_scheme(const IdentityScheme& s) {
  const auto& opts = s.optional_vars;
  std::vector<Identity> out;
  std::set<std::pair<TermSum, TermSum>> seen;
  for (std::uint32_t mask = 0; mask < (1u << opts.size()); ++mask) {
    VarSet erase = 0;
    for (std::size_t k = 0; k < opts.size(); ++k)
      if (mask & (1u << k)) erase |= VarSet(1) << opts[k];
    auto erase_word = [&](const Word& w) {
      Word nw;
      for (Var v : w.letters)
        if (!(erase & (VarSet(1) << v))) nw.letters.push_back(v);
      return nw;
    };
    bool valid = true;
    auto erase_sum = [&](const TermSum& t) {
      std::vector<Word> ws;
      for (const Word& w : t.words) {
        Word nw = erase_word(w);
        if (nw.empty()) valid = false;
        ws.push_back(std::move(nw));
      }
      return TermSum::of(std::move(ws));
    };
    TermSum lhs = erase_sum(s.identity.lhs);
    TermSum rhs = erase_sum(s.identity.rhs);
    if (!valid) continue;
    if (seen.insert({lhs, rhs}).second)
      out.push_back(Identity{s.identity.vars, std::move(lhs), std::move(rhs)});
  }
  if (out.empty()) throw StructureError("every expansion of the scheme empties a word");
  return out;
}

// u ~ u + q as a plain identity over canonical variable names x, y, z, ...
inline Identity uq_identity(const UQPair& p) {
  static const char* names[] = {"x", "y", "z", "w", "v", "u", "t", "s"};
  Identity id;
  for (int i = 0; i < p.num_vars; ++i)
    id.vars.push_back(i < 8 ? names[i] : "v" + std::to_string(i));
  id.lhs = p.u;
  id.rhs = p.u.with(p.q);
  return id;
}

inline std::string print_uq(const UQPair& p) {
  return print_identity(uq_identity(p));
}

}  // namespace workbench
