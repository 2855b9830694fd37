#include "catch_amalgamated.hpp"

#include "workbench/algebra.hpp"
#include "workbench/structure.hpp"

#include "helpers.hpp"

using namespace workbench;
using wbtest::alg;
using wbtest::catalog;

namespace {

// independent exhaustive scan used as the oracle for the validator
std::vector<std::string> scan_violations(const FiniteAiSemiring& a) {
  std::vector<std::string> out;
  const int n = a.order;
  for (Element x = 1; x <= n; ++x) {
    if (a.add(x, x) != x) out.push_back("add-idem");
    for (Element y = 1; y <= n; ++y) {
      if (a.add(x, y) != a.add(y, x)) out.push_back("add-comm");
      for (Element z = 1; z <= n; ++z) {
        if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z))) out.push_back("add-assoc");
        if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z))) out.push_back("mul-assoc");
        if (a.mul(x, a.add(y, z)) != a.add(a.mul(x, y), a.mul(x, z)))
          out.push_back("dist-l");
        if (a.mul(a.add(y, z), x) != a.add(a.mul(y, x), a.mul(z, x)))
          out.push_back("dist-r");
      }
    }
  }
  return out;
}

FiniteAiSemiring three_chain_with_square() {
  // 1 < 2 < 3; all products 1 except 3*3 = 2
  return FiniteAiSemiring("chain3sq", 3, {1, 2, 3, 2, 2, 3, 3, 3, 3},
                          {1, 1, 1, 1, 1, 1, 1, 1, 2});
}

}  // namespace

TEST_CASE("validator accepts the bundled tables") {
  REQUIRE(validate(alg("S_(4,388)")).ok());
  REQUIRE(validate(alg("S_(4,435)")).ok());
  FiniteAiSemiring one("1", 1, {1}, {1});
  REQUIRE(validate(one).ok());
}

TEST_CASE("validator flags a broken distributivity instance") {
  FiniteAiSemiring a = alg("S_(4,435)");
  a.mul_table[(3 - 1) * 4 + (4 - 1)] = 4;  // patch mul(3,4): 3 -> 4
  ValidationReport rep = validate(a);
  REQUIRE_FALSE(rep.ok());
  REQUIRE(rep.structural.empty());
  REQUIRE(rep.violations.size() == scan_violations(a).size());
  bool has_dist = false;
  for (const auto& v : rep.violations)
    if (v.axiom == Axiom::Distributive) {
      has_dist = true;
      // the witness must actually violate the law
      Element x(v.x), y(v.y), z(v.z);
      if (v.right_side)
        REQUIRE(a.mul(a.add(y, z), x) != a.add(a.mul(y, x), a.mul(z, x)));
      else
        REQUIRE(a.mul(x, a.add(y, z)) != a.add(a.mul(x, y), a.mul(x, z)));
    }
  REQUIRE(has_dist);
}

TEST_CASE("validator reports malformed tables as structural") {
  FiniteAiSemiring bad;
  bad.name = "bad";
  bad.order = 2;
  bad.add_table = {1, 1, 1};  // wrong size
  bad.mul_table = {1, 1, 1, 1};
  REQUIRE_FALSE(validate(bad).structural.empty());
  REQUIRE(validate(bad).violations.empty());

  FiniteAiSemiring oob("oob", 2, {1, 1, 1, 2}, {1, 3, 1, 1});  // entry 3 > n
  REQUIRE_FALSE(validate(oob).structural.empty());
}

TEST_CASE("additive order of the bundled reduct is the diamond") {
  AdditiveOrder ord = additive_order(alg("S_(4,388)"));
  REQUIRE(ord.leq(2, 3));
  REQUIRE(ord.leq(3, 1));
  REQUIRE(ord.leq(2, 4));
  REQUIRE(ord.leq(4, 1));
  REQUIRE_FALSE(ord.leq(3, 4));
  REQUIRE_FALSE(ord.leq(4, 3));
  REQUIRE(ord.top() == 1);
  REQUIRE(ord.bottom_or_zero() == 2);
}

TEST_CASE("the additive order is a partial order whose join is the addition") {
  for (const char* name : {"S_(4,388)", "S_(4,435)", "S_(4,471)", "S_57", "S_2"}) {
    const auto& a = alg(name);
    AdditiveOrder ord = additive_order(a);
    for (Element x = 1; x <= a.order; ++x) {
      REQUIRE(ord.leq(x, x));
      for (Element y = 1; y <= a.order; ++y) {
        if (ord.leq(x, y) && ord.leq(y, x)) REQUIRE(x == y);
        Element j = a.add(x, y);
        REQUIRE(ord.leq(x, j));
        REQUIRE(ord.leq(y, j));
        for (Element z = 1; z <= a.order; ++z) {
          if (ord.leq(x, y) && ord.leq(y, z)) REQUIRE(ord.leq(x, z));
          if (ord.leq(x, z) && ord.leq(y, z)) REQUIRE(ord.leq(j, z));  // least
        }
      }
    }
  }
}

TEST_CASE("additive order edge cases") {
  FiniteAiSemiring one("1", 1, {1}, {1});
  AdditiveOrder o1 = additive_order(one);
  REQUIRE(o1.leq(1, 1));
  REQUIRE(o1.top() == 1);

  // a 3-chain read back as a total order
  FiniteAiSemiring chain("c3", 3, {1, 2, 3, 2, 2, 3, 3, 3, 3},
                         {1, 1, 1, 1, 1, 1, 1, 1, 1});
  AdditiveOrder oc = additive_order(chain);
  for (Element x = 1; x <= 3; ++x)
    for (Element y = 1; y <= 3; ++y)
      REQUIRE((oc.leq(x, y) || oc.leq(y, x)));
  REQUIRE(oc.top() == 3);
}

TEST_CASE("subalgebra on a closed subset") {
  FiniteAiSemiring s44 = subalgebra(alg("S_(4,447)"), {1, 2, 4});
  REQUIRE(s44.order == 3);
  REQUIRE(validate(s44).ok());
  REQUIRE(isomorphic(s44, alg("S_44")));

  FiniteAiSemiring full = subalgebra(alg("S_(4,424)"), {1, 2, 3, 4});
  REQUIRE(full.same_tables(alg("S_(4,424)")));

  FiniteAiSemiring n2 = subalgebra(alg("S_(4,471)"), {2, 3});
  REQUIRE(n2.order == 2);
  Element bottom = additive_order(n2).bottom_or_zero();
  for (Element x = 1; x <= 2; ++x)
    for (Element y = 1; y <= 2; ++y) REQUIRE(n2.mul(x, y) == bottom);
}

TEST_CASE("subalgebra rejects a non-closed subset naming the escape") {
  REQUIRE_THROWS_MATCHES(subalgebra(alg("S_(4,435)"), {2, 3}), StructureError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("(3,3)")));
}

TEST_CASE("congruence recognition") {
  const auto& a424 = alg("S_(4,424)");
  REQUIRE(is_congruence(a424, Congruence::from_blocks(4, {{1, 3}, {2}, {4}})));
  REQUIRE(is_congruence(a424, Congruence::from_blocks(4, {{1}, {2}, {3}, {4}})));
  REQUIRE_FALSE(is_congruence(a424, Congruence::from_blocks(4, {{1, 2}, {3}, {4}})));
  REQUIRE(is_congruence(alg("S_(4,453)"),
                        Congruence::from_blocks(4, {{1, 4}, {2}, {3}})));
}

TEST_CASE("congruence recognition agrees with block-table well-definedness") {
  // independent route: a partition is a congruence iff the induced block
  // tables are single-valued over all representative choices
  auto well_defined = [](const FiniteAiSemiring& a, const Congruence& c) {
    auto bs = c.blocks();
    for (const auto& bi : bs)
      for (const auto& bj : bs) {
        int add_blk = -1, mul_blk = -1;
        for (int x : bi)
          for (int y : bj) {
            int ab = c.block_of[a.add(Element(x), Element(y))];
            int mb = c.block_of[a.mul(Element(x), Element(y))];
            if (add_blk == -1) add_blk = ab;
            if (mul_blk == -1) mul_blk = mb;
            if (ab != add_blk || mb != mul_blk) return false;
          }
      }
    return true;
  };
  for (const char* name : {"S_(4,424)", "S_(4,453)", "S_(4,471)", "S_(4,435)"}) {
    const auto& a = alg(name);
    // sweep all 15 partitions of a 4-element carrier
    std::vector<int> rgs(4, 0);
    auto rec = [&](auto&& self, int k, int maxblk) -> void {
      if (k == 4) {
        Congruence c;
        c.block_of = {0, rgs[0], rgs[1], rgs[2], rgs[3]};
        c.num_blocks = maxblk + 1;
        REQUIRE(is_congruence(a, c) == well_defined(a, c));
        return;
      }
      for (int b = 0; b <= maxblk + 1; ++b) {
        rgs[k] = b;
        self(self, k + 1, std::max(maxblk, b));
      }
    };
    rec(rec, 1, 0);
  }
}

TEST_CASE("quotients") {
  const auto& a424 = alg("S_(4,424)");
  FiniteAiSemiring q = quotient(a424, Congruence::from_blocks(4, {{1, 3}, {2}, {4}}));
  REQUIRE(q.order == 3);
  REQUIRE(validate(q).ok());
  REQUIRE(q.same_tables(alg("S_57")));

  FiniteAiSemiring diag =
      quotient(a424, Congruence::from_blocks(4, {{1}, {2}, {3}, {4}}));
  REQUIRE(isomorphic(diag, a424));

  FiniteAiSemiring q60 =
      quotient(alg("S_(4,459)"), Congruence::from_blocks(4, {{1, 3}, {2}, {4}}));
  REQUIRE(q60.same_tables(alg("S_60")));

  REQUIRE_THROWS_AS(
      quotient(a424, Congruence::from_blocks(4, {{1, 2}, {3}, {4}})),
      StructureError);
}

TEST_CASE("every congruence of a catalog algebra induces a valid quotient") {
  for (const char* name : {"S_(4,424)", "S_(4,453)", "S_(4,471)", "S_57"}) {
    const auto& a = alg(name);
    for (const Congruence& c : congruences(a))
      REQUIRE(validate(quotient(a, c)).ok());
  }
}

TEST_CASE("direct products") {
  const auto& a = alg("S_(4,440)");
  FiniteAiSemiring p = direct_product(a, a);
  REQUIRE(p.order == 16);
  REQUIRE(validate(p).ok());

  FiniteAiSemiring one("1", 1, {1}, {1});
  REQUIRE(isomorphic(direct_product(alg("S_(4,393)"), one), alg("S_(4,393)")));
}

TEST_CASE("zero adjunction and removal") {
  REQUIRE(validate(adjoin_zero(alg("S_57"))).ok());

  FiniteAiSemiring one("1", 1, {1}, {1});
  FiniteAiSemiring two = adjoin_zero(one);
  REQUIRE(two.order == 2);
  REQUIRE(find_zero(two).has_value());

  FiniteAiSemiring s7 = strip_zero(alg("S_(4,435)"));
  REQUIRE(s7.order == 3);
  REQUIRE(s7.same_tables(alg("S_7")));
  REQUIRE(strip_zero(alg("S_(4,434)")).same_tables(alg("S_4")));

  // strip after adjoin recovers the original, for any algebra
  for (const char* name : {"S_(4,430)", "S_(4,434)", "S_(4,435)", "S_57", "N_2"}) {
    const auto& a = alg(name);
    REQUIRE(isomorphic(strip_zero(adjoin_zero(a)), a));
  }
  // adjoin after strip recovers the zero-extensions
  for (const char* name : {"S_(4,430)", "S_(4,434)", "S_(4,435)", "T_2^0"}) {
    const auto& a = alg(name);
    REQUIRE(isomorphic(adjoin_zero(strip_zero(a)), a));
  }
}

TEST_CASE("strip errors") {
  REQUIRE_THROWS_AS(strip_zero(alg("T_2")), StructureError);  // no zero
  FiniteAiSemiring tricky = three_chain_with_square();
  REQUIRE(validate(tricky).ok());
  REQUIRE(find_zero(tricky) == Element(1));
  REQUIRE_THROWS_AS(strip_zero(tricky), StructureError);  // rest not closed
}

TEST_CASE("algebra text format round-trips") {
  for (const char* name : {"S_(4,388)", "S_(4,435)", "S_57", "N_2"}) {
    const auto& a = alg(name);
    FiniteAiSemiring b = parse_algebra(print_algebra(a));
    REQUIRE(b.same_tables(a));
    REQUIRE(b.name == a.name);
    REQUIRE(print_algebra(b) == print_algebra(a));
  }
}

TEST_CASE("algebra text format errors") {
  REQUIRE_THROWS_AS(parse_algebra("add:\n1 1\n"), ParseError);          // no order
  REQUIRE_THROWS_AS(parse_algebra("order 2\nadd:\n1 1\n1 2\nmul:\n1 1\n"),
                    ParseError);                                        // short mul
  REQUIRE_THROWS_AS(parse_algebra("order 2\n1 1\n"), ParseError);       // stray row
  REQUIRE_THROWS_AS(parse_algebra("order 2\nadd:\n1 5\n1 2\nmul:\n1 1\n1 1\n"),
                    ParseError);                                        // range
  // comments and name lines are accepted
  FiniteAiSemiring c = parse_algebra(
      "# two-element chain\nname t\norder 2\nadd:\n1 2\n2 2\nmul:\n2 2\n2 2\n");
  REQUIRE(c.order == 2);
  REQUIRE(c.name == "t");
}

TEST_CASE("congruence partition text round-trips") {
  Congruence c = parse_partition("{{1,3},{2},{4}}", 4);
  REQUIRE(c.num_blocks == 3);
  REQUIRE(c.to_string() == "{{1,3},{2},{4}}");
  REQUIRE_THROWS_AS(parse_partition("{{1,3},{2}}", 4), StructureError);
  REQUIRE_THROWS_AS(parse_partition("{1,2}", 4), ParseError);
}
