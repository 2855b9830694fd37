#include "catch_amalgamated.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "workbench/catalog.hpp"
#include "workbench/structure.hpp"

#include "helpers.hpp"

using namespace workbench;
using wbtest::alg;
using wbtest::catalog;

TEST_CASE("named lookup") {
  const CatalogEntry& e = catalog().get("S_(4,435)");
  REQUIRE(e.algebra.order == 4);
  for (Element y = 1; y <= 4; ++y) REQUIRE(e.algebra.mul(2, y) == 2);
  // the flattened alias resolves to the same entry
  REQUIRE(catalog().get("S_4_435").algebra.same_tables(e.algebra));
  REQUIRE_THROWS_AS(catalog().get("S_(4,999)"), UnknownNameError);
}

TEST_CASE("derived entries come from their recipes") {
  const CatalogEntry& s57 = catalog().get("S_57");
  REQUIRE(s57.provenance.describe() == "quot(S_4_424, {{1,3},{2},{4}})");
  FiniteAiSemiring rebuilt = quotient(
      alg("S_(4,424)"), Congruence::from_blocks(4, {{1, 3}, {2}, {4}}));
  REQUIRE(s57.algebra.same_tables(rebuilt));

  const CatalogEntry& n2 = catalog().get("N_2");
  REQUIRE(n2.algebra.order == 2);
  Element bottom = additive_order(n2.algebra).bottom_or_zero();
  for (Element x = 1; x <= 2; ++x)
    for (Element y = 1; y <= 2; ++y) REQUIRE(n2.algebra.mul(x, y) == bottom);
}

TEST_CASE("the table1 census") {
  auto entries = catalog().all_table1();
  REQUIRE(entries.size() == 93);
  std::set<CanonicalForm> forms;
  for (const auto& e : entries) {
    REQUIRE(validate(e.algebra).ok());
    REQUIRE(e.algebra.order == 4);
    REQUIRE(forms.insert(canonical_form(e.algebra)).second);  // pairwise non-iso
    // the shared additive reduct
    REQUIRE(e.algebra.add_table == alg("S_(4,388)").add_table);
  }
  REQUIRE(catalog().table1_names().front() == "S_4_388");
  REQUIRE(catalog().table1_names().back() == "S_4_480");
}

TEST_CASE("derived roster") {
  const auto& names = catalog().derived_names();
  REQUIRE(names.size() == 22);
  for (const auto& n : names) {
    const auto& e = catalog().get(n);
    REQUIRE(validate(e.algebra).ok());
    REQUIRE(e.algebra.order <= 3);
  }
  REQUIRE(catalog().get("S_53").provisional);
  REQUIRE(catalog().get("S_54").provisional);
  REQUIRE_FALSE(catalog().get("S_57").provisional);
}

TEST_CASE("the six order-2 entries are pairwise non-isomorphic") {
  const char* names[] = {"L_2", "R_2", "M_2", "D_2", "N_2", "T_2"};
  std::set<CanonicalForm> forms;
  for (const char* n : names) REQUIRE(forms.insert(canonical_form(alg(n))).second);
  REQUIRE(forms.size() == 6);
}

TEST_CASE("cross-checks") {
  // several independent routes exist for T_2^0 and they agree
  ConsistencyReport t20 = catalog().cross_check("T_2^0");
  REQUIRE(t20.routes.size() >= 3);
  REQUIRE(t20.consistent());

  // single-recipe names are vacuously consistent
  ConsistencyReport s57 = catalog().cross_check("S_57");
  REQUIRE(s57.routes.size() == 1);
  REQUIRE(s57.consistent());

  // M_2 is checked against its copies inside the derived algebras
  ConsistencyReport m2 = catalog().cross_check("M_2");
  REQUIRE(m2.consistent());
  bool has_embed_route = false;
  for (const auto& r : m2.routes)
    if (r.rfind("embeds", 0) == 0) has_embed_route = true;
  REQUIRE(has_embed_route);

  // and so is every derived name
  for (const auto& n : catalog().derived_names())
    REQUIRE(catalog().cross_check(n).consistent());
}

TEST_CASE("loading from a missing directory fails loudly") {
  REQUIRE_THROWS_AS(Catalog::load("/nonexistent-data-dir"), StructureError);
}

TEST_CASE("display names") {
  REQUIRE(display_name("S_4_435") == "S_(4,435)");
  REQUIRE(display_name("T_2^0") == "T_2^0");
  REQUIRE(normalize_name("S_(4,435)") == "S_4_435");
}

TEST_CASE("the shipped data files round-trip bit-exactly") {
  namespace fs = std::filesystem;
  int files = 0;
  for (const auto& e :
       fs::directory_iterator(catalog().data_dir() / "catalog" / "table1")) {
    if (e.path().extension() != ".alg") continue;
    std::ifstream in(e.path());
    std::stringstream buf;
    buf << in.rdbuf();
    REQUIRE(print_algebra(parse_algebra(buf.str())) == buf.str());
    ++files;
  }
  REQUIRE(files == 93);
}

TEST_CASE("canonical-form equality matches isomorphism across the derived roster") {
  const auto& names = catalog().derived_names();
  std::vector<CanonicalForm> forms;
  for (const auto& n : names) forms.push_back(canonical_form(alg(n)));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i; j < names.size(); ++j) {
      bool same = forms[i] == forms[j];
      REQUIRE(same == isomorphic(alg(names[i]), alg(names[j])));
    }
}
