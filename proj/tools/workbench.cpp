// Command-line entry point: catalog browsing, validation, identity checking,
// structure search, enumeration, and the claims verification suite.
//
// Exit codes: 0 success / claim holds; 1 a check failed; 2 unknown name;
// 3 parse or input error; 4 budget exceeded; 5 verification-suite failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "workbench/algebra.hpp"
#include "workbench/basis.hpp"
#include "workbench/catalog.hpp"
#include "workbench/enumeration.hpp"
#include "workbench/oracles.hpp"
#include "workbench/satisfaction.hpp"
#include "workbench/structure.hpp"
#include "workbench/term.hpp"

namespace wb = workbench;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknownName = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;
constexpr int kExitClaimFailure = 5;

struct Output {
  bool records = false;

  void record(const std::vector<std::pair<std::string, std::string>>& kv) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < kv.size(); ++i)
      os << (i ? " " : "") << kv[i].first << "=" << kv[i].second;
    std::cout << os.str() << "\n";
  }
};

// NAME, NAME^k, or NAME*NAME products
wb::FiniteAiSemiring resolve_expr(const wb::Catalog& cat, const std::string& expr) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : expr) {
    if (c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::vector<wb::FiniteAiSemiring> factors;
  for (std::string p : parts) {
    int power = 1;
    auto caret = p.rfind('^');
    if (caret != std::string::npos && caret + 1 < p.size() &&
        std::isdigit((unsigned char)p[caret + 1])) {
      power = std::stoi(p.substr(caret + 1));
      p = p.substr(0, caret);
    }
    for (int i = 0; i < power; ++i) factors.push_back(cat.get(p).algebra);
  }
  wb::FiniteAiSemiring out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = wb::direct_product(out, factors[i]);
  return out;
}

// a catalog name, or a path to an algebra file
wb::FiniteAiSemiring resolve_algebra(const wb::Catalog& cat, const std::string& arg) {
  if (cat.has(arg)) return cat.get(arg).algebra;
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return wb::parse_algebra(buf.str());
  }
  if (arg.find('*') != std::string::npos || arg.find('^') != std::string::npos)
    return resolve_expr(cat, arg);
  throw wb::UnknownNameError("unknown algebra or file: " + arg);
}

int cmd_catalog_list(const wb::Catalog& cat, const Output& out) {
  for (const auto& n : cat.table1_names()) {
    if (out.records)
      out.record({{"record", "algebra"}, {"name", n}, {"kind", "table1"}});
    else
      std::cout << wb::display_name(n) << "\n";
  }
  for (const auto& n : cat.derived_names()) {
    const auto& e = cat.get(n);
    if (out.records)
      out.record({{"record", "algebra"},
                  {"name", n},
                  {"kind", e.provisional ? "derived-provisional" : "derived"},
                  {"recipe", e.provenance.describe()}});
    else
      std::cout << n << "  [" << e.provenance.describe()
                << (e.provisional ? ", provisional" : "") << "]\n";
  }
  return kExitHolds;
}

int cmd_catalog_show(const wb::Catalog& cat, const std::string& name) {
  const auto& e = cat.get(name);
  std::cout << wb::print_algebra(e.algebra);
  std::cout << "# provenance: " << e.provenance.describe()
            << (e.provisional ? " (provisional)" : "") << "\n";
  return kExitHolds;
}

int cmd_validate(const wb::Catalog& cat, const std::string& arg, const Output& out) {
  wb::FiniteAiSemiring a = resolve_algebra(cat, arg);
  wb::ValidationReport rep = wb::validate(a);
  if (out.records) {
    out.record({{"record", "validate"},
                {"algebra", a.name.empty() ? arg : a.name},
                {"ok", rep.ok() ? "true" : "false"},
                {"violations", std::to_string(rep.violations.size())}});
  } else if (rep.ok()) {
    std::cout << "valid\n";
  } else {
    for (const auto& s : rep.structural) std::cout << "structural: " << s << "\n";
    for (const auto& v : rep.violations) std::cout << v.describe() << "\n";
  }
  return rep.ok() ? kExitHolds : kExitFails;
}

int check_one(const wb::FiniteAiSemiring& a, const std::string& identity_text,
              std::uint64_t budget, const Output& out, bool prefix_identity) {
  wb::IdentityScheme scheme = wb::parse_identity(identity_text);
  wb::EvalOptions opts{budget};
  wb::Verdict v = wb::satisfies_scheme(a, scheme, opts);
  if (out.records)
    out.record({{"record", "check"},
                {"algebra", a.name},
                {"identity", wb::print_identity(scheme)},
                {"verdict", v.holds ? "holds" : "fails"},
                {"witness", v.witness ? v.witness->to_string() : ""}});
  else if (v.holds)
    std::cout << (prefix_identity ? wb::print_identity(scheme) + ": " : "")
              << "holds\n";
  else
    std::cout << (prefix_identity ? wb::print_identity(scheme) + ": " : "")
              << "fails " << v.witness->to_string() << "\n";
  return v.holds ? kExitHolds : kExitFails;
}

// the identity argument is either a literal or a file of identities, one per
// line with '#' comments
int cmd_check(const wb::Catalog& cat, const std::string& arg,
              const std::string& identity_arg, std::uint64_t budget,
              const Output& out) {
  wb::FiniteAiSemiring a = resolve_algebra(cat, arg);
  if (std::filesystem::exists(identity_arg)) {
    std::ifstream in(identity_arg);
    std::string line;
    int rc = kExitHolds;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto b = line.find_first_not_of(" \t");
      if (b == std::string::npos) continue;
      auto e = line.find_last_not_of(" \t");
      int one = check_one(a, line.substr(b, e - b + 1), budget, out, true);
      rc = rc == kExitHolds ? one : rc;
    }
    return rc;
  }
  return check_one(a, identity_arg, budget, out, false);
}

int cmd_quotient(const wb::Catalog& cat, const std::string& arg,
                 const std::string& partition) {
  wb::FiniteAiSemiring a = resolve_algebra(cat, arg);
  wb::Congruence c = wb::parse_partition(partition, a.order);
  if (!wb::is_congruence(a, c)) {
    std::cout << "not a congruence\n";
    return kExitFails;
  }
  std::cout << wb::print_algebra(wb::quotient(a, c, a.name + "/" + partition));
  return kExitHolds;
}

int cmd_embed(const wb::Catalog& cat, const std::string& a_arg,
              const std::string& b_arg, const Output& out) {
  wb::FiniteAiSemiring a = resolve_algebra(cat, a_arg);
  wb::FiniteAiSemiring b = resolve_algebra(cat, b_arg);
  auto m = wb::find_embedding(a, b);
  if (out.records)
    out.record({{"record", "embed"},
                {"source", a_arg},
                {"target", b_arg},
                {"found", m ? "true" : "false"},
                {"map", m ? m->to_string() : ""}});
  else if (m)
    std::cout << "embedding: " << m->to_string() << "\n";
  else
    std::cout << "no embedding\n";
  return m ? kExitHolds : kExitFails;
}

int cmd_decompose(const wb::Catalog& cat, const std::string& a_arg,
                  const std::vector<std::string>& factor_args, const Output& out) {
  wb::FiniteAiSemiring a = resolve_algebra(cat, a_arg);
  std::vector<wb::FiniteAiSemiring> factors;
  for (const auto& f : factor_args) factors.push_back(resolve_algebra(cat, f));
  auto m = wb::is_subdirect_embedding(a, factors);
  if (out.records)
    out.record({{"record", "decompose"},
                {"algebra", a_arg},
                {"factors", std::to_string(factors.size())},
                {"found", m ? "true" : "false"},
                {"map", m ? m->to_string() : ""}});
  else if (m)
    std::cout << "subdirect embedding: " << m->to_string() << "\n";
  else
    std::cout << "no subdirect embedding\n";
  return m ? kExitHolds : kExitFails;
}

int cmd_enumerate(int order, const std::string& reduct_file,
                  bool stretch, const std::string& emit_dir, const Output& out) {
  wb::EnumerationResult res;
  if (!reduct_file.empty()) {
    std::ifstream in(reduct_file);
    std::stringstream buf;
    buf << in.rdbuf();
    wb::FiniteAiSemiring a = wb::parse_algebra(buf.str());
    res = wb::enumerate_with_reduct(wb::AddReduct{a.order, a.add_table});
  } else {
    res = wb::enumerate_order(order, stretch);
  }
  if (out.records)
    out.record({{"record", "enumerate"},
                {"scope", res.reduct_label},
                {"count", std::to_string(res.count)}});
  else
    std::cout << "count " << res.count << "\n";
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    int i = 0;
    for (auto a : res.representatives) {
      a.name = res.reduct_label + "-" + std::to_string(++i);
      std::ofstream f(std::filesystem::path(emit_dir) / (a.name + ".alg"));
      f << wb::print_algebra(a);
    }
  }
  return kExitHolds;
}

int cmd_oracle_test(const wb::Catalog& cat, const std::string& which,
                    const wb::CorpusBounds& bounds, const Output& out) {
  auto corpus = wb::corpus_pairs(bounds);
  struct OracleRow {
    const char* name;
    const char* algebra;
    bool exact;
    wb::Oracle oracle;
  };
  const std::vector<OracleRow> specs = {
      {"s41", "S_41", true, wb::oracle_s41},
      {"s2", "S_2", true, wb::oracle_s2},
      {"s4", "S_4", true, wb::oracle_s4},
      {"s57", "S_57", false, wb::oracle_s57},
      {"s53", "S_53", false, wb::oracle_s53},
      {"s58", "S_58", false, wb::oracle_s58},
      {"s59", "S_59", false, wb::oracle_s59},
      {"s60", "S_60", false, wb::oracle_s60},
      {"s44", "S_44", false, wb::oracle_s44},
      {"s46", "S_46", false, wb::oracle_s46},
  };
  if (which == "s0") {
    bool all_ok = true;
    for (const auto& name : cat.derived_names()) {
      const auto& base = cat.get(name).algebra;
      if (base.order > 3) continue;
      wb::FiniteAiSemiring extended = wb::adjoin_zero(base);
      std::size_t bad = 0;
      for (const auto& p : corpus) {
        bool lhs = wb::oracle_s0(p, base);
        bool rhs = wb::satisfies_uq(extended, p);
        if (lhs != rhs) ++bad;
      }
      all_ok = all_ok && bad == 0;
      if (out.records)
        out.record({{"record", "oracle-test"},
                    {"oracle", "s0"},
                    {"base", name},
                    {"pairs", std::to_string(corpus.size())},
                    {"disagreements", std::to_string(bad)}});
      else
        std::cout << "s0[" << name << "]: "
                  << (bad == 0 ? "equivalence: exact" : "violated") << " ("
                  << corpus.size() << " pairs)\n";
    }
    return all_ok ? kExitHolds : kExitFails;
  }
  for (const OracleRow& s : specs) {
    if (which != s.name) continue;
    const auto& alg = cat.get(s.algebra).algebra;
    wb::OracleReport rep = s.exact
                               ? wb::check_equivalence(s.oracle, alg, corpus)
                               : wb::check_necessity(s.oracle, alg, corpus);
    if (out.records) {
      out.record({{"record", "oracle-test"},
                  {"oracle", s.name},
                  {"algebra", s.algebra},
                  {"mode", s.exact ? "equivalence" : "necessity"},
                  {"pairs", std::to_string(rep.pairs_checked)},
                  {"violations", std::to_string(rep.violations.size())}});
    } else {
      std::cout << (s.exact ? "equivalence: " : "necessity: ")
                << (rep.pass() ? (s.exact ? "exact" : "confirmed") : "violated")
                << " (" << rep.pairs_checked << " pairs)\n";
    }
    for (const auto& v : rep.violations) std::cout << v.line() << "\n";
    return rep.pass() ? kExitHolds : kExitFails;
  }
  throw wb::UnknownNameError("unknown oracle: " + which);
}

int cmd_verify(const wb::Catalog& cat, const std::string& claim_file,
               bool all, const Output& out) {
  int failures = 0;
  auto emit = [&](const std::string& kind, const std::string& what, bool pass,
                  const std::string& detail) {
    if (!pass) ++failures;
    if (out.records)
      out.record({{"record", "verify"},
                  {"kind", kind},
                  {"what", what},
                  {"pass", pass ? "true" : "false"},
                  {"detail", detail}});
    else
      std::cout << (pass ? "PASS " : "FAIL ") << kind << ": " << what
                << (detail.empty() ? "" : " (" + detail + ")") << "\n";
  };
  if (all) {
    auto claims = wb::load_claims(cat.data_dir());
    for (const auto& [name, claim] : claims) {
      auto rep = wb::verify_soundness(claim, cat);
      bool pass = rep.pass();
      std::string detail;
      for (const auto& r : rep.rows)
        if (!r.holds) detail = r.scheme + " fails at " + r.witness;
      emit("soundness", name + " [" + claim.source + "]", pass, detail);
    }
    for (const auto& row : wb::verify_cross_claims(cat, claims))
      emit("cross", row.description, row.pass, row.detail);
    for (const auto& row : wb::verify_structure_claims(cat))
      emit("structure", row.description, row.pass, row.detail);
    for (const auto& name : cat.derived_names()) {
      auto rep = cat.cross_check(name);
      emit("cross-check", name, rep.consistent(),
           rep.consistent() ? "" : rep.mismatches.front());
    }
    wb::TheoremReport tr = wb::theorem_report(cat, claims);
    emit("theorem",
         "fb=" + std::to_string(tr.fb_count) + " nfb=" + std::to_string(tr.nfb_count),
         tr.fb_count == 92 && tr.nfb_count == 1, "");
    emit("theorem", tr.nfb_name + " strip/adjoin roundtrip",
         tr.nfb_structural_verified, "");
  } else {
    std::ifstream in(claim_file);
    if (!in) throw wb::StructureError("cannot open " + claim_file);
    std::stringstream buf;
    buf << in.rdbuf();
    wb::BasisClaim claim = wb::parse_claim(buf.str());
    auto rep = wb::verify_soundness(claim, cat);
    for (const auto& r : rep.rows)
      emit("soundness", r.scheme, r.holds,
           r.holds ? "" : "fails at " + r.witness);
  }
  return failures == 0 ? kExitHolds : kExitClaimFailure;
}

int cmd_report(const wb::Catalog& cat, const Output& out) {
  auto claims = wb::load_claims(cat.data_dir());
  wb::TheoremReport tr = wb::theorem_report(cat, claims);
  for (const auto& row : tr.rows) {
    if (out.records)
      out.record({{"record", "claim"},
                  {"algebra", row.algebra},
                  {"status", row.finitely_based ? "fb" : "nfb"},
                  {"source", row.source},
                  {"schemes", std::to_string(row.scheme_count)},
                  {"soundness", row.soundness_pass ? "pass" : "fail"}});
    else
      std::cout << wb::display_name(row.algebra) << "  "
                << (row.finitely_based ? "fb " : "nfb") << "  schemes="
                << row.scheme_count << "  soundness="
                << (row.soundness_pass ? "pass" : "fail") << "  [" << row.source
                << "]\n";
  }
  std::ostringstream sum;
  sum << "fb=" << tr.fb_count << " nfb=" << tr.nfb_count
      << " nfb-structural=" << (tr.nfb_structural_verified ? "verified" : "FAILED");
  if (out.records)
    out.record({{"record", "summary"},
                {"fb", std::to_string(tr.fb_count)},
                {"nfb", std::to_string(tr.nfb_count)},
                {"nfb_structural",
                 tr.nfb_structural_verified ? "verified" : "failed"}});
  else
    std::cout << sum.str() << "\n";
  bool ok = tr.fb_count == 92 && tr.nfb_count == 1 && tr.nfb_structural_verified;
  for (const auto& row : tr.rows) ok = ok && row.soundness_pass;
  return ok ? kExitHolds : kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ai-semiring verification workbench"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--records", out.records, "one machine-readable record per line");
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker cap (checks are deterministic regardless)");

  std::string name, identity, partition, target, claim_file, reduct_file, emit_dir;
  std::string oracle_name;
  std::vector<std::string> factors;
  std::uint64_t budget = 10'000'000;
  int order = 2;
  bool stretch = false, verify_all = false;
  wb::CorpusBounds bounds;

  auto* c_catalog = app.add_subcommand("catalog", "list or show catalog entries");
  auto* cc_list = c_catalog->add_subcommand("list", "print every catalog name");
  auto* cc_show = c_catalog->add_subcommand("show", "print one algebra");
  cc_show->add_option("name", name)->required();
  c_catalog->require_subcommand(1);

  auto* c_validate = app.add_subcommand("validate", "run the axiom validator");
  c_validate->add_option("algebra", name, "catalog name or .alg file")->required();

  auto* c_check = app.add_subcommand("check", "decide one identity");
  c_check->add_option("algebra", name)->required();
  c_check->add_option("identity", identity)->required();
  c_check->add_option("--budget", budget, "max assignments per identity");

  auto* c_verify = app.add_subcommand("verify", "run the claims suite");
  c_verify->add_flag("--all", verify_all, "verify every bundled claim");
  c_verify->add_option("claimfile", claim_file, "a single .basis file");

  auto* c_enum = app.add_subcommand("enumerate", "census up to isomorphism");
  c_enum->add_option("--order", order)->required();
  c_enum->add_option("--reduct", reduct_file, "fix the additive reduct (.alg file)");
  c_enum->add_flag("--stretch", stretch, "allow the order-4 run");
  c_enum->add_option("--emit", emit_dir, "write representatives here");

  auto* c_embed = app.add_subcommand("embed", "search for an embedding");
  c_embed->add_option("source", name)->required();
  c_embed->add_option("target", target, "name, NAME^2, or NAME*NAME")->required();

  auto* c_quot = app.add_subcommand("quotient", "quotient by a congruence");
  c_quot->add_option("algebra", name)->required();
  c_quot->add_option("partition", partition, "e.g. {{1,3},{2},{4}}")->required();

  auto* c_dec = app.add_subcommand("decompose", "subdirect-embedding search");
  c_dec->add_option("algebra", name)->required();
  c_dec->add_option("factors", factors, "factor names")->required()->expected(-1);

  auto* c_oracle = app.add_subcommand("oracle-test", "sweep an oracle vs brute force");
  c_oracle->add_option("oracle", oracle_name, "s0 s2 s4 s41 s44 s46 s53 s57..s60")
      ->required();
  c_oracle->add_option("--vars", bounds.max_vars);
  c_oracle->add_option("--wordlen", bounds.max_word_len);
  c_oracle->add_option("--summands", bounds.max_summands);

  auto* c_report = app.add_subcommand("report", "status table for all 93 algebras");

  for (CLI::App* sc : {c_catalog, cc_list, cc_show, c_validate, c_check, c_verify,
                       c_enum, c_embed, c_quot, c_dec, c_oracle, c_report})
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);
  (void)jobs;

  try {
    wb::Catalog cat = wb::Catalog::load();
    if (cc_list->parsed()) return cmd_catalog_list(cat, out);
    if (cc_show->parsed()) return cmd_catalog_show(cat, name);
    if (c_validate->parsed()) return cmd_validate(cat, name, out);
    if (c_check->parsed()) return cmd_check(cat, name, identity, budget, out);
    if (c_verify->parsed()) {
      if (!verify_all && claim_file.empty())
        throw wb::StructureError("verify needs --all or a claim file");
      return cmd_verify(cat, claim_file, verify_all, out);
    }
    if (c_enum->parsed())
      return cmd_enumerate(order, reduct_file, stretch, emit_dir, out);
    if (c_embed->parsed()) return cmd_embed(cat, name, target, out);
    if (c_quot->parsed()) return cmd_quotient(cat, name, partition);
    if (c_dec->parsed()) return cmd_decompose(cat, name, factors, out);
    if (c_oracle->parsed()) return cmd_oracle_test(cat, oracle_name, bounds, out);
    if (c_report->parsed()) return cmd_report(cat, out);
  } catch (const wb::UnknownNameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownName;
  } catch (const wb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const wb::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const wb::StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClaimFailure;
  }
  return kExitHolds;
}
