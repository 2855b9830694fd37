#include "catch_amalgamated.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "workbench/catalog.hpp"

// exercises the built binary end to end

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(WORKBENCH_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("catalog list and show") {
  RunResult list = run("catalog list");
  REQUIRE(list.exit_code == 0);
  REQUIRE(list.output.find("S_(4,388)") != std::string::npos);
  REQUIRE(list.output.find("S_(4,480)") != std::string::npos);
  REQUIRE(list.output.find("S_57") != std::string::npos);

  // identical invocations are byte-identical
  REQUIRE(run("catalog list --records").output == run("catalog list --records").output);

  RunResult show = run("catalog show \"S_(4,435)\"");
  REQUIRE(show.exit_code == 0);
  REQUIRE(show.output.find("2 2 2 2") != std::string::npos);
  REQUIRE(show.output.find("mul:") != std::string::npos);

  REQUIRE(run("catalog show bogus").exit_code == 2);
}

TEST_CASE("check verdicts and exit codes") {
  REQUIRE(run("check S_4_471 \"x1 ≈ x1 + x2*x3*x4\"").exit_code == 0);
  REQUIRE(run("check S_4_471 \"x = x\"").exit_code == 0);

  RunResult fail = run("check S_4_471 \"x ≈ x + y*z\"");
  REQUIRE(fail.exit_code == 1);
  REQUIRE(fail.output.find("fails x=2,y=1,z=1") != std::string::npos);

  REQUIRE(run("check S_4_471 \"x ≈ + y\"").exit_code == 3);
  REQUIRE(run("check nosuch \"x = x\"").exit_code == 2);

  std::string big = "x1";
  for (int i = 2; i <= 14; ++i) big += "*x" + std::to_string(i);
  REQUIRE(run("check S_4_471 \"" + big + " = " + big + "\"").exit_code == 4);
}

TEST_CASE("enumerate") {
  RunResult r2 = run("enumerate --order 2");
  REQUIRE(r2.exit_code == 0);
  REQUIRE(r2.output == "count 6\n");
  REQUIRE(run("enumerate --order 3").output == "count 61\n");
  REQUIRE(run("enumerate --order 4").exit_code == 4);  // needs --stretch

  // a fixed additive reduct taken from a bundled table
  std::string diamond =
      (workbench::default_data_dir() / "catalog" / "table1" / "S_4_388.alg")
          .string();
  REQUIRE(run("enumerate --order 4 --reduct " + diamond).output == "count 93\n");
}

TEST_CASE("structure subcommands") {
  RunResult q = run("quotient S_4_424 \"{{1,3},{2},{4}}\"");
  REQUIRE(q.exit_code == 0);
  REQUIRE(q.output.find("order 3") != std::string::npos);

  RunResult notc = run("quotient S_4_424 \"{{1,2},{3},{4}}\"");
  REQUIRE(notc.exit_code == 1);

  RunResult e = run("embed S_4_475 \"S_4_440^2\"");
  REQUIRE(e.exit_code == 0);
  REQUIRE(e.output.find("embedding:") != std::string::npos);
  REQUIRE(run("embed S_4_424 N_2").exit_code == 1);

  RunResult d = run("decompose S_4_390 S_57 S_60");
  REQUIRE(d.exit_code == 0);
  REQUIRE(d.output.find("subdirect embedding:") != std::string::npos);
}

TEST_CASE("oracle-test") {
  RunResult r = run("oracle-test s41 --vars 2 --wordlen 2 --summands 2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("equivalence: exact") != std::string::npos);

  RunResult n = run("oracle-test s58 --vars 2 --wordlen 2 --summands 2");
  REQUIRE(n.exit_code == 0);
  REQUIRE(n.output.find("necessity: confirmed") != std::string::npos);

  REQUIRE(run("oracle-test s99").exit_code == 2);
}

TEST_CASE("verify and report") {
  RunResult v = run("verify --all");
  REQUIRE(v.exit_code == 0);
  REQUIRE(v.output.find("FAIL") == std::string::npos);

  // a single claim file
  std::string claim =
      (workbench::default_data_dir() / "claims" / "S_4_471.basis").string();
  RunResult one = run("verify " + claim);
  REQUIRE(one.exit_code == 0);
  REQUIRE(one.output.find("PASS soundness") != std::string::npos);

  // malformed claims are a parse error
  std::ofstream bad("/tmp/wb_bad.basis");
  bad << "algebra S_4_471\nstatus fb\nx ≈\n";
  bad.close();
  REQUIRE(run("verify /tmp/wb_bad.basis").exit_code == 3);

  RunResult r = run("report");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("fb=92 nfb=1") != std::string::npos);
  REQUIRE(r.output.find("nfb-structural=verified") != std::string::npos);

  RunResult records = run("report --records");
  REQUIRE(records.output.find("record=summary fb=92 nfb=1") != std::string::npos);
  REQUIRE(records.output == run("report --records").output);
}

TEST_CASE("validate") {
  REQUIRE(run("validate S_4_435").exit_code == 0);
  REQUIRE(run("validate S_4_435").output == "valid\n");

  // a file with a broken table is rejected with the violation named
  std::ofstream bad("/tmp/wb_bad.alg");
  bad << "order 2\nadd:\n1 1\n1 2\nmul:\n1 2\n1 1\n";
  bad.close();
  RunResult r = run("validate /tmp/wb_bad.alg");
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.output.find("associative") != std::string::npos);
}

TEST_CASE("checking a file of identities") {
  std::ofstream ids("/tmp/wb_ids.txt");
  ids << "# bundled example lines\n"
      << "x*y ≈ y*x\n"
      << "x^2 ≈ x^2 + x*y\n";
  ids.close();
  RunResult ok = run("check S_4_471 /tmp/wb_ids.txt");
  REQUIRE(ok.exit_code == 0);
  REQUIRE(ok.output.find("holds") != std::string::npos);

  std::ofstream mixed("/tmp/wb_ids2.txt");
  mixed << "x ≈ x\nx ≈ x + y*z\n";
  mixed.close();
  REQUIRE(run("check S_4_471 /tmp/wb_ids2.txt").exit_code == 1);
}

TEST_CASE("enumerate --emit writes the representatives") {
  RunResult r = run("enumerate --order 2 --emit /tmp/wb_emit");
  REQUIRE(r.exit_code == 0);
  int count = 0;
  for (const auto& e : std::filesystem::directory_iterator("/tmp/wb_emit"))
    if (e.path().extension() == ".alg") ++count;
  REQUIRE(count == 6);
}
