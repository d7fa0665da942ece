// End-to-end checks through the installed binary: spec'd output lines,
// witness replay, exit codes, and report determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(RINGTOP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("topology output for the sierpinski instance") {
  const RunResult r = run_cli("topology --ring zn:2 --a 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("3 open sets: {}, {0}, {0,1}") != std::string::npos);
  CHECK(r.output.find("none (connected)") != std::string::npos);
}

TEST_CASE("axioms output names the failing pair") {
  const RunResult r = run_cli("axioms --ring zn:4 --a 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("T0: fails") != std::string::npos);
  CHECK(r.output.find("(1,3)") != std::string::npos);

  const RunResult j = run_cli("axioms --ring zn:4 --a 3 --format json");
  CHECK(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.output);
  CHECK(doc.at("verdicts")[0].at("axiom") == "T0");
  CHECK(doc.at("verdicts")[0].at("definitional") == false);
}

TEST_CASE("pierce reports the worked example") {
  const RunResult r =
      run_cli("pierce --ring ut:f2 --e \"[[1,1],[0,0]]\" --side left");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("eR: open yes; dense yes") != std::string::npos);
  CHECK(r.output.find("fixed part eR (4)") != std::string::npos);
}

TEST_CASE("orbits DOT export") {
  const char* path = "cli_orbits_tmp.dot";
  const RunResult r =
      run_cli(std::string("orbits --ring zn:4 --a 2 --out ") + path);
  CHECK(r.exit_code == 0);
  const std::string dot = slurp(path);
  CHECK(dot.find("digraph successor {") != std::string::npos);
  CHECK(dot.find("n3 -> n2;") != std::string::npos);
  std::remove(path);
}

TEST_CASE("describe accepts every spec the reports emit") {
  for (const char* spec :
       {"zn:2", "zn:16", "prod:zn:2,zn:3", "ut:f2", "ut:f3", "m2:f2"}) {
    const RunResult r = run_cli(std::string("describe --ring ") + spec);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("order:") != std::string::npos);
  }
}

TEST_CASE("audit: exit codes, determinism, and witness replay") {
  const RunResult twice_a =
      run_cli("audit --max-order 8 --seed 7 --out cli_audit_a.json");
  const RunResult twice_b =
      run_cli("audit --max-order 8 --seed 7 --out cli_audit_b.json");
  // counterexamples exist (Cor-2.15 at least), so the default gate trips
  CHECK(twice_a.exit_code == 2);
  CHECK(twice_b.exit_code == 2);
  const std::string doc_a = slurp("cli_audit_a.json");
  CHECK(doc_a == slurp("cli_audit_b.json"));
  CHECK(!doc_a.empty());

  // expected-failure lists make the same run gate clean
  const RunResult gated = run_cli(
      "audit --max-order 8 --seed 7 --out cli_audit_c.json "
      "--expect-fail Cor-2.15,Thm-2.11,Thm-3.2,Thm-2.12");
  CHECK(gated.exit_code == 0);

  // every failing witness replays through the CLI
  const auto doc = nlohmann::json::parse(doc_a);
  std::size_t replayed = 0;
  for (const auto& claim : doc.at("claims"))
    for (const auto& res : claim.at("results")) {
      if (res.at("verdict") != "fails") continue;
      REQUIRE(res.at("witness").contains("replay"));
      const RunResult rr = run_cli(res.at("witness").at("replay"));
      CHECK(rr.exit_code == 0);
      CHECK(!rr.output.empty());
      // the witness instance's ring spec feeds straight back into describe
      const RunResult dd = run_cli(
          "describe --ring " + res.at("instance").at("ring").get<std::string>());
      CHECK(dd.exit_code == 0);
      if (++replayed >= 8) break;
    }
  CHECK(replayed > 0);

  // the Cor-2.15 sierpinski replay shows the clopen census it claims
  for (const auto& claim : doc.at("claims")) {
    if (claim.at("claim") != "Cor-2.15") continue;
    const auto& first = claim.at("results")[0];
    REQUIRE(first.at("verdict") == "fails");
    const RunResult rr = run_cli(first.at("witness").at("replay"));
    CHECK(rr.output.find("none (connected)") != std::string::npos);
  }

  std::remove("cli_audit_a.json");
  std::remove("cli_audit_b.json");
  std::remove("cli_audit_c.json");
}

TEST_CASE("markdown report") {
  const RunResult r = run_cli("audit --max-order 6 --seed 7 --format markdown "
                              "--out cli_audit_md.md");
  CHECK(r.exit_code == 2);
  const std::string md = slurp("cli_audit_md.md");
  CHECK(md.find("| claim | ring |") != std::string::npos);
  CHECK(md.find("Lemma-2.13") != std::string::npos);
  std::remove("cli_audit_md.md");
}

TEST_CASE("single-claim audit") {
  const RunResult r =
      run_cli("audit --max-order 6 --seed 7 --claim Lemma-2.13 --out -");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Lemma-2.13") != std::string::npos);
  const RunResult bad = run_cli("audit --max-order 6 --claim Thm-0.0");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("unknown-claim") != std::string::npos);
}

TEST_CASE("usage and diagnostics") {
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("topology").exit_code == 1);  // --ring is required

  const RunResult bad_ring = run_cli("describe --ring zn:notanumber");
  CHECK(bad_ring.exit_code == 1);
  CHECK(bad_ring.output.find("parse-error") != std::string::npos);

  const RunResult bad_elem = run_cli("topology --ring zn:4 --a 99");
  CHECK(bad_elem.exit_code == 1);
  CHECK(bad_elem.output.find("bad-element") != std::string::npos);

  const RunResult too_big = run_cli("describe --ring zn:9999");
  CHECK(too_big.exit_code == 1);
  CHECK(too_big.output.find("too-large") != std::string::npos);
}

TEST_CASE("file ring specs work end to end") {
  {
    std::ofstream out("cli_ring_tmp.json");
    out << R"({"kind":"zn","n":6})";
  }
  const RunResult r = run_cli("describe --ring file:cli_ring_tmp.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order: 6") != std::string::npos);
  CHECK(r.output.find("idempotents (4): 0 1 3 4") != std::string::npos);
  std::remove("cli_ring_tmp.json");
}
