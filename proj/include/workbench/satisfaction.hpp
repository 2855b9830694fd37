#pragma once

// Brute-force term evaluation and identity satisfaction, plus the bounded
// canonical corpus of u ~ u+q pairs used by the oracle harnesses.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "workbench/algebra.hpp"
#include "workbench/term.hpp"

namespace workbench {

struct Assignment {
  std::vector<std::string> vars;
  std::vector<Element> values;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) out += ",";
      out += vars[i] + "=" + std::to_string(int(values[i]));
    }
    return out;
  }
};

struct Verdict {
  bool holds = false;
  std::optional<Assignment> witness;  // lexicographically least failure
};

struct EvalOptions {
  std::uint64_t budget = 10'000'000;  // max assignments per identity
};

inline Element eval_word(const Word& w, const std::vector<Element>& values,
                         const FiniteAiSemiring& a) {
  Element acc = values.at(w.letters.front());
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    acc = a.mul(acc, values.at(w.letters[i]));
  return acc;
}

inline Element eval_term(const TermSum& t, const std::vector<Element>& values,
                         const FiniteAiSemiring& a) {
  Element acc = eval_word(t.words.front(), values, a);
  for (std::size_t i = 1; i < t.words.size(); ++i)
    acc = a.add(acc, eval_word(t.words[i], values, a));
  return acc;
}

namespace detail {

inline std::uint64_t assignment_count(int order, int num_vars,
                                      std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < num_vars; ++i) {
    total *= std::uint64_t(order);
    if (total > budget)
      throw BudgetError("assignment sweep of " + std::to_string(order) + "^" +
                        std::to_string(num_vars) + " exceeds the budget of " +
                        std::to_string(budget));
  }
  return total;
}

// iterate assignments in lexicographic order (last variable fastest)
template <typename F>
bool sweep(int order, int num_vars, F&& fail_check) {
  std::vector<Element> vals(std::size_t(num_vars), 1);
  while (true) {
    if (fail_check(vals)) return false;
    int k = num_vars - 1;
    while (k >= 0 && vals[k] == order) {
      vals[k] = 1;
      --k;
    }
    if (k < 0) return true;
    ++vals[k];
  }
}

}  // namespace detail

inline Verdict satisfies(const FiniteAiSemiring& a, const Identity& id,
                         const EvalOptions& opts = {}) {
  const int v = int(id.vars.size());
  detail::assignment_count(a.order, v, opts.budget);
  Verdict out;
  out.holds = detail::sweep(a.order, v, [&](const std::vector<Element>& vals) {
    if (eval_term(id.lhs, vals, a) != eval_term(id.rhs, vals, a)) {
      out.witness = Assignment{id.vars, vals};
      return true;
    }
    return false;
  });
  return out;
}

// holds iff every expansion holds; the witness comes from the first expansion
// that fails
inline Verdict satisfies_scheme(const FiniteAiSemiring& a,
                                const IdentityScheme& s,
                                const EvalOptions& opts = {}) {
  for (const Identity& id : expand_scheme(s)) {
    Verdict v = satisfies(a, id, opts);
    if (!v.holds) return v;
  }
  return Verdict{true, std::nullopt};
}

// fast boolean check of u ~ u+q
inline bool satisfies_uq(const FiniteAiSemiring& a, const UQPair& p,
                         const EvalOptions& opts = {}) {
  detail::assignment_count(a.order, p.num_vars, opts.budget);
  return detail::sweep(a.order, p.num_vars, [&](const std::vector<Element>& vals) {
    Element lhs = eval_term(p.u, vals, a);
    Element rhs = a.add(lhs, eval_word(p.q, vals, a));
    return lhs != rhs;
  });
}

// --------------------------------------------------------------- the corpus

struct CorpusBounds {
  int max_vars = 3;
  int max_word_len = 3;
  int max_summands = 3;
};

namespace detail {

inline void all_words(int num_vars, int max_len, std::vector<Word>& out) {
  std::vector<Var> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(Word{cur});
    if (int(cur.size()) == max_len) return;
    for (Var v = 0; v < num_vars; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

inline std::vector<std::uint8_t> encode_pair(const TermSum& u, const Word& q) {
  std::vector<std::uint8_t> enc;
  for (const Word& w : u.words) {
    for (Var v : w.letters) enc.push_back(std::uint8_t(v + 1));
    enc.push_back(0);
  }
  enc.push_back(0xff);
  for (Var v : q.letters) enc.push_back(std::uint8_t(v + 1));
  return enc;
}

}  // namespace detail

// all pairs (u, q) within the bounds, one canonical representative per
// variable-renaming class, in a deterministic order
inline std::vector<UQPair> corpus_pairs(const CorpusBounds& b) {
  std::vector<Word> words;
  detail::all_words(b.max_vars, b.max_word_len, words);
  std::sort(words.begin(), words.end());

  // permutations of the variable alphabet
  std::vector<std::vector<Var>> perms;
  std::vector<Var> p(std::size_t(b.max_vars), Var(0));
  std::iota(p.begin(), p.end(), Var(0));
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto rename_word = [](const Word& w, const std::vector<Var>& pm) {
    Word nw;
    nw.letters.reserve(w.letters.size());
    for (Var v : w.letters) nw.letters.push_back(pm[v]);
    return nw;
  };

  std::vector<UQPair> out;
  std::vector<std::size_t> combo;
  auto emit = [&](const std::vector<std::size_t>& idxs, const Word& q) {
    std::vector<Word> ws;
    ws.reserve(idxs.size());
    for (auto i : idxs) ws.push_back(words[i]);
    TermSum u = TermSum::of(std::move(ws));
    auto enc = detail::encode_pair(u, q);
    for (const auto& pm : perms) {
      std::vector<Word> rws;
      rws.reserve(u.words.size());
      for (const Word& w : u.words) rws.push_back(rename_word(w, pm));
      TermSum ru = TermSum::of(std::move(rws));
      Word rq = rename_word(q, pm);
      if (detail::encode_pair(ru, rq) < enc) return;  // not canonical
    }
    VarSet used = content(u.words) | content(q);
    int nv = 0;
    while (used >> nv) ++nv;
    out.push_back(UQPair{std::move(u), q, nv});
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!combo.empty())
      for (const Word& q : words) emit(combo, q);
    if (int(combo.size()) == b.max_summands) return;
    for (std::size_t i = start; i < words.size(); ++i) {
      combo.push_back(i);
      self(self, i + 1);
      combo.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// all corpus identities u ~ u+q holding in the algebra, modulo renaming
inline std::vector<UQPair> identities_of(const FiniteAiSemiring& a,
                                         const CorpusBounds& b,
                                         const EvalOptions& opts = {}) {
  std::vector<UQPair> out;
  for (const UQPair& p : corpus_pairs(b))
    if (satisfies_uq(a, p, opts)) out.push_back(p);
  return out;
}

// bitmask over a fixed corpus: bit i set iff pair i holds in the algebra
inline std::vector<std::uint64_t> corpus_mask(const FiniteAiSemiring& a,
                                              const std::vector<UQPair>& corpus,
                                              const EvalOptions& opts = {}) {
  std::vector<std::uint64_t> mask((corpus.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (satisfies_uq(a, corpus[i], opts)) mask[i / 64] |= std::uint64_t(1) << (i % 64);
  return mask;
}

}  // namespace workbench
