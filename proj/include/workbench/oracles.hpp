#pragma once

// Syntactic predicates on u ~ u+q pairs, one per characterization of a small
// algebra's identities, plus the harnesses that sweep them against brute-force
// satisfaction.  s41, s2 and s4 are exact; s0 is exact relative to a base
// algebra; the rest are necessary conditions only.

#include <functional>
#include <string>
#include <vector>

#include "workbench/satisfaction.hpp"
#include "workbench/term.hpp"

namespace workbench {

enum class OracleVerdict { True, False, NotCovered };

inline const char* to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::True: return "true";
    case OracleVerdict::False: return "false";
    case OracleVerdict::NotCovered: return "not-covered";
  }
  return "?";
}

namespace oracle_detail {

inline VarSet prefix_content(const TermSum& u) {
  VarSet s = 0;
  for (const Word& w : u.words) s |= content(prefix(w));
  return s;
}

inline bool some_len_geq(const TermSum& u, int k) {
  for (const Word& w : u.words)
    if (length(w) >= k) return true;
  return false;
}

inline bool all_len_leq(const TermSum& u, int k) {
  for (const Word& w : u.words)
    if (length(w) > k) return false;
  return true;
}

}  // namespace oracle_detail

// u ~ u+q holds in base^0 iff D_q(u) is nonempty and D_q(u) ~ D_q(u)+q holds
// in base
inline bool oracle_s0(const UQPair& p, const FiniteAiSemiring& base,
                      const EvalOptions& opts = {}) {
  std::vector<Word> d = sum_d(p.u, p.q);
  if (d.empty()) return false;
  UQPair restricted{TermSum::of(std::move(d)), p.q, p.num_vars};
  return satisfies_uq(base, restricted, opts);
}

// some summand of length >= 2; c(p(q)) inside c(p(u)); t(q) in c(u)
inline OracleVerdict oracle_s57(const UQPair& p) {
  using namespace oracle_detail;
  bool ok = some_len_geq(p.u, 2) &&
            (content(prefix(p.q)) & ~prefix_content(p.u)) == 0 &&
            ((content(p.u) >> tail(p.q)) & 1) != 0;
  return ok ? OracleVerdict::True : OracleVerdict::False;
}

// unguarded: a summand of length >= 2 and c(q) inside c(u); for q = xy a
// repetition/cooccurrence condition; nothing is asserted for longer q
inline OracleVerdict oracle_s53(const UQPair& p) {
  using namespace oracle_detail;
  if (!some_len_geq(p.u, 2)) return OracleVerdict::False;
  if ((content(p.q) & ~content(p.u)) != 0) return OracleVerdict::False;
  if (length(p.q) == 2) {
    Var x = p.q.letters[0], y = p.q.letters[1];
    bool ok = false;
    if (x == y) {
      for (const Word& w : p.u.words)
        if (multiplicity(x, w) >= 2) ok = true;
    } else {
      for (const Word& w : p.u.words) {
        VarSet c = content(w);
        bool both = ((c >> x) & 1) != 0 && ((c >> y) & 1) != 0;
        if (both || multiplicity(x, w) >= 2 || multiplicity(y, w) >= 2)
          ok = true;
      }
    }
    if (!ok) return OracleVerdict::False;
  }
  if (length(p.q) >= 3) return OracleVerdict::NotCovered;
  return OracleVerdict::True;
}

// L_{>=2}(u) and H_q(u) nonempty; for longer q they must intersect
inline OracleVerdict oracle_s58(const UQPair& p) {
  auto l2 = sum_l_geq(2, p.u);
  if (l2.empty()) return OracleVerdict::False;
  auto hq = sum_h(p.u, p.q);
  if (hq.empty()) return OracleVerdict::False;
  if (length(p.q) >= 2) {
    for (const Word& w : l2)
      if (head(w) == head(p.q)) return OracleVerdict::True;
    return OracleVerdict::False;
  }
  return OracleVerdict::True;
}

// either a summand of length >= 3, or everything short and q constrained
inline OracleVerdict oracle_s59(const UQPair& p) {
  using namespace oracle_detail;
  if (some_len_geq(p.u, 3)) return OracleVerdict::True;
  if (length(p.q) > 2) return OracleVerdict::False;
  if (length(p.q) == 1 && (content(p.q) & ~content(p.u)) != 0)
    return OracleVerdict::False;
  if (length(p.q) == 2 &&
      (content(p.q) & ~content(sum_l_eq(2, p.u))) != 0)
    return OracleVerdict::False;
  return OracleVerdict::True;
}

// a summand of length >= 2; c(q) in c(u) for single letters, in
// c(L_{>=2}(u)) otherwise
inline OracleVerdict oracle_s60(const UQPair& p) {
  using namespace oracle_detail;
  if (!some_len_geq(p.u, 2)) return OracleVerdict::False;
  if (length(p.q) == 1) {
    if ((content(p.q) & ~content(p.u)) != 0) return OracleVerdict::False;
  } else {
    if ((content(p.q) & ~content(sum_l_geq(2, p.u))) != 0)
      return OracleVerdict::False;
  }
  return OracleVerdict::True;
}

// q long, D_q(u) nonempty, and every once-occurring variable of q occurs at
// most once in some member of D_q(u)
inline OracleVerdict oracle_s44(const UQPair& p) {
  if (length(p.q) < 2) return OracleVerdict::False;
  auto d = sum_d(p.u, p.q);
  if (d.empty()) return OracleVerdict::False;
  VarSet m = m1(p.q);
  for (Var x = 0; x < kMaxVars; ++x) {
    if (!((m >> x) & 1)) continue;
    bool ok = false;
    for (const Word& w : d)
      if (multiplicity(x, w) <= 1) ok = true;
    if (!ok) return OracleVerdict::False;
  }
  return OracleVerdict::True;
}

// q long, D_q(u) nonempty, and when t(q) occurs once in q some member of
// D_q(u) avoids t(q) in its prefix
inline OracleVerdict oracle_s46(const UQPair& p) {
  if (length(p.q) < 2) return OracleVerdict::False;
  auto d = sum_d(p.u, p.q);
  if (d.empty()) return OracleVerdict::False;
  if (multiplicity(tail(p.q), p.q) == 1) {
    for (const Word& w : d)
      if (!((content(prefix(w)) >> tail(p.q)) & 1)) return OracleVerdict::True;
    return OracleVerdict::False;
  }
  return OracleVerdict::True;
}

// exact: for every Y inside c(q) some summand matches q's head after deleting
// Y; a fully deleted q matches a fully deleted summand
inline OracleVerdict oracle_s41(const UQPair& p) {
  VarSet cq = content(p.q);
  // iterate submasks of cq, including 0 and cq itself
  VarSet y = 0;
  while (true) {
    auto hq = head_excluding(y, p.q);
    bool ok = false;
    for (const Word& w : p.u.words)
      if (head_excluding(y, w) == hq) {
        ok = true;
        break;
      }
    if (!ok) return OracleVerdict::False;
    if (y == cq) break;
    y = (y - cq) & cq;  // next submask
  }
  return OracleVerdict::True;
}

// exact characterization by summand lengths and the L_1/L_2 contents
inline OracleVerdict oracle_s2(const UQPair& p) {
  using namespace oracle_detail;
  if (some_len_geq(p.u, 3)) return OracleVerdict::True;
  VarSet c1 = content(sum_l_eq(1, p.u));
  VarSet c2 = content(sum_l_eq(2, p.u));
  if (c1 & c2) return OracleVerdict::True;
  // now every summand is short and the contents are disjoint
  if (length(p.q) > 2) return OracleVerdict::False;
  if (length(p.q) == 1)
    return is_trivial(p) ? OracleVerdict::True : OracleVerdict::False;
  return (content(p.q) & ~c2) == 0 ? OracleVerdict::True : OracleVerdict::False;
}

// exact: content containment, a long summand, and preservation of the tail
// property
inline OracleVerdict oracle_s4(const UQPair& p) {
  using namespace oracle_detail;
  if (is_trivial(p)) return OracleVerdict::True;
  if ((content(p.q) & ~content(p.u)) != 0) return OracleVerdict::False;
  if (!some_len_geq(p.u, 2)) return OracleVerdict::False;
  if (property_t(p.u) && !property_t(p.u.with(p.q)))
    return OracleVerdict::False;
  return OracleVerdict::True;
}

// ------------------------------------------------------------------ harness

using Oracle = std::function<OracleVerdict(const UQPair&)>;

struct OracleDisagreement {
  std::size_t pair_index;
  std::string identity;
  bool satisfied;
  OracleVerdict verdict;

  std::string line() const {
    return identity + " | satisfies=" + (satisfied ? "true" : "false") +
           " oracle=" + to_string(verdict);
  }
};

struct OracleReport {
  std::string oracle_name;
  std::string algebra_name;
  std::size_t pairs_checked = 0;
  std::vector<OracleDisagreement> violations;
  bool pass() const { return violations.empty(); }
};

// nontrivial pairs where satisfaction holds but the oracle says false;
// empty = the necessary condition is confirmed on the corpus
inline OracleReport check_necessity(const Oracle& oracle,
                                    const FiniteAiSemiring& algebra,
                                    const std::vector<UQPair>& corpus,
                                    const EvalOptions& opts = {}) {
  OracleReport rep;
  rep.algebra_name = algebra.name;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const UQPair& p = corpus[i];
    if (is_trivial(p)) continue;  // the characterizations assume nontrivial pairs
    ++rep.pairs_checked;
    if (satisfies_uq(algebra, p, opts) &&
        oracle(p) == OracleVerdict::False)
      rep.violations.push_back(
          {i, print_uq(p), true, OracleVerdict::False});
  }
  return rep;
}

// disagreements in either direction; empty = the oracle is exact on the corpus
inline OracleReport check_equivalence(const Oracle& oracle,
                                      const FiniteAiSemiring& algebra,
                                      const std::vector<UQPair>& corpus,
                                      const EvalOptions& opts = {}) {
  OracleReport rep;
  rep.algebra_name = algebra.name;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const UQPair& p = corpus[i];
    ++rep.pairs_checked;
    bool sat = satisfies_uq(algebra, p, opts);
    OracleVerdict v = oracle(p);
    if ((sat && v != OracleVerdict::True) || (!sat && v != OracleVerdict::False))
      rep.violations.push_back({i, print_uq(p), sat, v});
  }
  return rep;
}

}  // namespace workbench
