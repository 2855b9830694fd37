#pragma once

// Claimed equational bases: soundness verification, cross-satisfaction
// claims, structural claims, finite countermodel search, and the bounded
// completeness-evidence sweep.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "workbench/catalog.hpp"
#include "workbench/enumeration.hpp"
#include "workbench/satisfaction.hpp"
#include "workbench/structure.hpp"
#include "workbench/term.hpp"

namespace workbench {

struct BasisClaim {
  std::string algebra_name;  // normalized
  bool finitely_based = true;
  std::string source;
  std::vector<IdentityScheme> schemes;
  std::vector<std::string> scheme_texts;
};

inline BasisClaim parse_claim(const std::string& text) {
  BasisClaim claim;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "algebra") {
      std::string nm;
      ls >> nm;
      claim.algebra_name = normalize_name(nm);
    } else if (tok == "status") {
      std::string st;
      ls >> st;
      if (st == "fb") claim.finitely_based = true;
      else if (st == "nfb") claim.finitely_based = false;
      else throw ParseError("status must be fb or nfb", lineno);
    } else if (tok == "source") {
      std::string rest;
      std::getline(ls, rest);
      auto b = rest.find_first_not_of(" \t");
      claim.source = b == std::string::npos ? "" : rest.substr(b);
    } else {
      auto b = line.find_first_not_of(" \t");
      auto e = line.find_last_not_of(" \t");
      std::string scheme_text = line.substr(b, e - b + 1);
      claim.schemes.push_back(parse_identity(scheme_text));
      claim.scheme_texts.push_back(scheme_text);
    }
  }
  if (claim.algebra_name.empty()) throw ParseError("claim without algebra", 0);
  if (!claim.finitely_based && !claim.schemes.empty())
    throw ParseError("a nonfinitely-based claim cannot carry schemes", 0);
  return claim;
}

inline std::map<std::string, BasisClaim> load_claims(
    const std::filesystem::path& data_dir) {
  std::map<std::string, BasisClaim> out;
  auto dir = data_dir / "claims";
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".basis") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    BasisClaim c = parse_claim(buf.str());
    out.emplace(c.algebra_name, std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- soundness

struct SoundnessRow {
  std::string algebra;
  std::string scheme;
  bool holds = false;
  std::string witness;
};

struct SoundnessReport {
  std::vector<SoundnessRow> rows;
  bool pass() const {
    for (const auto& r : rows)
      if (!r.holds) return false;
    return true;
  }
};

inline SoundnessReport verify_soundness(const BasisClaim& claim,
                                        const Catalog& cat,
                                        const EvalOptions& opts = {}) {
  SoundnessReport rep;
  const FiniteAiSemiring& a = cat.get(claim.algebra_name).algebra;
  for (std::size_t i = 0; i < claim.schemes.size(); ++i) {
    Verdict v = satisfies_scheme(a, claim.schemes[i], opts);
    rep.rows.push_back({claim.algebra_name, claim.scheme_texts[i], v.holds,
                        v.witness ? v.witness->to_string() : ""});
  }
  return rep;
}

// ------------------------------------------------------------- cross claims

struct CrossClaim {
  enum class Kind { SatisfiesBasis, SatisfiesIdentity } kind;
  std::string subject;   // algebra that satisfies
  std::string object;    // basis owner, or the identity text
};

inline std::vector<CrossClaim> load_cross_claims(
    const std::filesystem::path& data_dir) {
  std::ifstream in(data_dir / "claims" / "cross.claims");
  if (!in) throw StructureError("missing cross.claims");
  std::vector<CrossClaim> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "cross") {
      std::string a, b;
      ls >> a >> b;
      out.push_back({CrossClaim::Kind::SatisfiesBasis, normalize_name(a),
                     normalize_name(b)});
    } else if (tok == "identity") {
      std::string a, rest;
      ls >> a;
      std::getline(ls, rest);
      auto s = rest.find_first_not_of(" \t");
      out.push_back({CrossClaim::Kind::SatisfiesIdentity, normalize_name(a),
                     rest.substr(s)});
    } else {
      throw StructureError("bad cross.claims line: " + line);
    }
  }
  return out;
}

struct CheckRow {
  std::string description;
  bool pass = false;
  std::string detail;
};

inline std::vector<CheckRow> verify_cross_claims(
    const Catalog& cat, const std::map<std::string, BasisClaim>& claims,
    const EvalOptions& opts = {}) {
  std::vector<CheckRow> rows;
  for (const CrossClaim& cc : load_cross_claims(cat.data_dir())) {
    const FiniteAiSemiring& a = cat.get(cc.subject).algebra;
    if (cc.kind == CrossClaim::Kind::SatisfiesBasis) {
      const BasisClaim& bc = claims.at(cc.object);
      bool ok = true;
      std::string detail;
      for (const auto& s : bc.schemes) {
        Verdict v = satisfies_scheme(a, s, opts);
        if (!v.holds) {
          ok = false;
          detail = "fails at " + v.witness->to_string();
          break;
        }
      }
      rows.push_back({cc.subject + " satisfies basis of " + cc.object, ok, detail});
    } else {
      Verdict v = satisfies_scheme(a, parse_identity(cc.object), opts);
      rows.push_back({cc.subject + " satisfies " + cc.object, v.holds,
                      v.holds ? "" : "fails at " + v.witness->to_string()});
    }
  }
  return rows;
}

// --------------------------------------------------------- structural claims

struct StructuralClaim {
  enum class Kind { Quotient, Dual, EmbedSquare, Subdirect, IsoAdjz, Embed,
                    Unverifiable } kind;
  std::string a, b, c;
  std::string partition;
  std::string note;
};

inline std::vector<StructuralClaim> load_structure_claims(
    const std::filesystem::path& data_dir) {
  std::ifstream in(data_dir / "claims" / "structure.claims");
  if (!in) throw StructureError("missing structure.claims");
  std::vector<StructuralClaim> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    StructuralClaim sc;
    if (tok == "quotient") {
      sc.kind = StructuralClaim::Kind::Quotient;
      ls >> sc.a >> sc.partition >> sc.b;
    } else if (tok == "dual") {
      sc.kind = StructuralClaim::Kind::Dual;
      ls >> sc.a >> sc.b;
    } else if (tok == "embed-square") {
      sc.kind = StructuralClaim::Kind::EmbedSquare;
      ls >> sc.a >> sc.b;
    } else if (tok == "subdirect") {
      sc.kind = StructuralClaim::Kind::Subdirect;
      ls >> sc.a >> sc.b >> sc.c;
    } else if (tok == "iso-adjz") {
      sc.kind = StructuralClaim::Kind::IsoAdjz;
      ls >> sc.a >> sc.b;
    } else if (tok == "embed") {
      sc.kind = StructuralClaim::Kind::Embed;
      ls >> sc.a >> sc.b;
    } else if (tok == "unverifiable") {
      sc.kind = StructuralClaim::Kind::Unverifiable;
      ls >> sc.a;
      std::getline(ls, sc.note);
    } else {
      throw StructureError("bad structure.claims line: " + line);
    }
    out.push_back(std::move(sc));
  }
  return out;
}

inline std::vector<CheckRow> verify_structure_claims(const Catalog& cat) {
  std::vector<CheckRow> rows;
  for (const StructuralClaim& sc : load_structure_claims(cat.data_dir())) {
    CheckRow row;
    switch (sc.kind) {
      case StructuralClaim::Kind::Quotient: {
        row.description = sc.a + "/" + sc.partition + " iso " + sc.b;
        const auto& a = cat.get(sc.a).algebra;
        try {
          Congruence c = parse_partition(sc.partition, a.order);
          row.pass = is_congruence(a, c) &&
                     isomorphic(quotient(a, c), cat.get(sc.b).algebra);
        } catch (const WorkbenchError& e) {
          row.detail = e.what();
        }
        break;
      }
      case StructuralClaim::Kind::Dual:
        row.description = "dual(" + sc.a + ") iso " + sc.b;
        row.pass = isomorphic(dual(cat.get(sc.a).algebra), cat.get(sc.b).algebra);
        break;
      case StructuralClaim::Kind::EmbedSquare: {
        row.description = sc.a + " embeds in " + sc.b + "^2";
        const auto& b = cat.get(sc.b).algebra;
        row.pass =
            find_embedding(cat.get(sc.a).algebra, direct_product(b, b)).has_value();
        break;
      }
      case StructuralClaim::Kind::Subdirect:
        row.description = sc.a + " subdirect in " + sc.b + " x " + sc.c;
        row.pass = is_subdirect_embedding(cat.get(sc.a).algebra,
                                          {cat.get(sc.b).algebra,
                                           cat.get(sc.c).algebra})
                       .has_value();
        break;
      case StructuralClaim::Kind::IsoAdjz:
        row.description = "adjz(" + sc.a + ") iso " + sc.b;
        row.pass = isomorphic(adjoin_zero(cat.get(sc.a).algebra),
                              cat.get(sc.b).algebra);
        break;
      case StructuralClaim::Kind::Embed:
        row.description = sc.a + " embeds in " + sc.b;
        row.pass = find_embedding(cat.get(sc.a).algebra,
                                  cat.get(sc.b).algebra).has_value();
        break;
      case StructuralClaim::Kind::Unverifiable:
        row.description = sc.a + " (recorded, skipped:" + sc.note + ")";
        row.pass = true;
        row.detail = "skipped";
        break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ------------------------------------------------------- countermodel search

// the models universe: all ai-semirings of order <= k up to isomorphism
inline std::vector<FiniteAiSemiring> model_universe(int k, bool stretch) {
  std::vector<FiniteAiSemiring> out;
  for (int n = 1; n <= k; ++n) {
    EnumerationResult r = enumerate_order(n, stretch);
    for (auto& a : r.representatives) {
      a.name = "M" + std::to_string(n) + "." + std::to_string(out.size());
      out.push_back(std::move(a));
    }
  }
  return out;
}

inline bool satisfies_all_schemes(const FiniteAiSemiring& a,
                                  const std::vector<IdentityScheme>& schemes,
                                  const EvalOptions& opts = {}) {
  for (const auto& s : schemes)
    if (!satisfies_scheme(a, s, opts).holds) return false;
  return true;
}

// first algebra in the universe satisfying every scheme but failing the
// target, if any
inline std::optional<FiniteAiSemiring> countermodel_search(
    const std::vector<IdentityScheme>& schemes, const Identity& target,
    const std::vector<FiniteAiSemiring>& universe, const EvalOptions& opts = {}) {
  for (const FiniteAiSemiring& m : universe) {
    if (!satisfies_all_schemes(m, schemes, opts)) continue;
    if (!satisfies(m, target, opts).holds) return m;
  }
  return std::nullopt;
}

// ----------------------------------------------------- completeness evidence

struct CompletenessReport {
  std::string algebra;
  std::size_t corpus_size = 0;     // identities of the algebra within bounds
  std::size_t models_checked = 0;  // universe members satisfying the schemes
  // pairs (identity, countermodel name) that admit a countermodel
  std::vector<std::pair<std::string, std::string>> red_flags;
  bool pass() const { return red_flags.empty(); }
};

// caches corpus satisfaction masks per universe member
class CompletenessChecker {
 public:
  CompletenessChecker(std::vector<FiniteAiSemiring> universe, CorpusBounds bounds)
      : universe_(std::move(universe)), bounds_(bounds),
        corpus_(corpus_pairs(bounds)), masks_(universe_.size()) {}

  const std::vector<UQPair>& corpus() const { return corpus_; }
  const std::vector<FiniteAiSemiring>& universe() const { return universe_; }

  // red flags for: every corpus identity of `algebra` must hold in every
  // universe model of `schemes`
  CompletenessReport run(const FiniteAiSemiring& algebra,
                         const std::vector<IdentityScheme>& schemes,
                         const EvalOptions& opts = {}) {
    CompletenessReport rep;
    rep.algebra = algebra.name;
    std::vector<std::uint64_t> target = corpus_mask(algebra, corpus_, opts);
    for (auto w : target)
      rep.corpus_size += std::size_t(__builtin_popcountll(w));
    for (std::size_t m = 0; m < universe_.size(); ++m) {
      if (!satisfies_all_schemes(universe_[m], schemes, opts)) continue;
      ++rep.models_checked;
      const auto& mm = mask(m, opts);
      for (std::size_t w = 0; w < target.size(); ++w) {
        std::uint64_t miss = target[w] & ~mm[w];
        while (miss) {
          int bit = __builtin_ctzll(miss);
          miss &= miss - 1;
          rep.red_flags.emplace_back(print_uq(corpus_[w * 64 + bit]),
                                     universe_[m].name);
        }
      }
    }
    return rep;
  }

 private:
  const std::vector<std::uint64_t>& mask(std::size_t m, const EvalOptions& opts) {
    if (masks_[m].empty())
      masks_[m] = corpus_mask(universe_[m], corpus_, opts);
    return masks_[m];
  }

  std::vector<FiniteAiSemiring> universe_;
  CorpusBounds bounds_;
  std::vector<UQPair> corpus_;
  std::vector<std::vector<std::uint64_t>> masks_;
};

struct MutationRow {
  std::string dropped_scheme;
  std::size_t red_flags = 0;
};

// drop each scheme in turn and count the completeness red flags that appear
inline std::vector<MutationRow> mutation_test(CompletenessChecker& checker,
                                              const FiniteAiSemiring& algebra,
                                              const std::vector<IdentityScheme>& schemes,
                                              const std::vector<std::string>& texts,
                                              const EvalOptions& opts = {}) {
  std::vector<MutationRow> rows;
  for (std::size_t d = 0; d < schemes.size(); ++d) {
    std::vector<IdentityScheme> weakened;
    for (std::size_t i = 0; i < schemes.size(); ++i)
      if (i != d) weakened.push_back(schemes[i]);
    CompletenessReport rep = checker.run(algebra, weakened, opts);
    rows.push_back({texts[d], rep.red_flags.size()});
  }
  return rows;
}

// ------------------------------------------------------------ theorem report

struct TheoremRow {
  std::string algebra;
  bool finitely_based = true;
  std::string source;
  int scheme_count = 0;
  bool soundness_pass = true;
};

struct TheoremReport {
  std::vector<TheoremRow> rows;
  int fb_count = 0;
  int nfb_count = 0;
  bool nfb_structural_verified = false;  // strip/adjoin roundtrip on the nfb row
  std::string nfb_name;
};

inline TheoremReport theorem_report(const Catalog& cat,
                                    const std::map<std::string, BasisClaim>& claims,
                                    const EvalOptions& opts = {}) {
  TheoremReport rep;
  for (const std::string& name : cat.table1_names()) {
    const BasisClaim& c = claims.at(name);
    TheoremRow row;
    row.algebra = name;
    row.finitely_based = c.finitely_based;
    row.source = c.source;
    row.scheme_count = int(c.schemes.size());
    row.soundness_pass = verify_soundness(c, cat, opts).pass();
    if (c.finitely_based) ++rep.fb_count;
    else {
      ++rep.nfb_count;
      rep.nfb_name = name;
      const FiniteAiSemiring& a = cat.get(name).algebra;
      rep.nfb_structural_verified = isomorphic(adjoin_zero(strip_zero(a)), a);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace workbench
