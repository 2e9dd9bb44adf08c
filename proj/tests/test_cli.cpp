// End-to-end checks of the command-line front end: every subcommand, both
// output formats, exit codes, and the model-file round trip. The binary path
// arrives via the ELLCY_CLI_PATH compile definition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ELLCY_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args, int expected_exit = 0) {
  RunResult r = run_cli(args + " --format json");
  INFO(r.output);
  REQUIRE(r.exit_code == expected_exit);
  return Json::parse(r.output);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("product-analyze: text output and exit code") {
  RunResult r = run_cli(
      "product-analyze --left @builtin:II:5/32 --right @builtin:II:32/5");
  INFO(r.output);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "h12=5"));
  CHECK(contains(r.output, "rigidity=non_rigid"));
  CHECK(contains(r.output, "nodal [37]"));
  CHECK(contains(r.output, "degenerate [5, 3, 2]"));
}

TEST_CASE("product-analyze: JSON output") {
  Json j = run_json(
      "product-analyze --left @builtin:II:5/32 --right @builtin:II:32/5");
  CHECK(j["product"]["euler"] == 44);
  CHECK(j["product"]["rho"] == 27);
  CHECK(j["product"]["h12"] == 5);
  CHECK(j["product"]["rigidity"] == "non_rigid");
  CHECK(j["product"]["d_flag"] == 0);
  CHECK(j["product"]["pairs"].size() == 5);
  CHECK(j["bad_primes"]["nodal"] == Json::array({37}));
  CHECK(j["bad_primes"]["degenerate"] == Json::array({5, 3, 2}));
  CHECK(j["bad_primes"]["classification"]["37"] == "extra_node");
  CHECK_FALSE(j.contains("reduction_at"));

  Json k = run_json(
      "product-analyze --left @builtin:II:5/32 --right @builtin:II:32/5 "
      "--mod-p 37");
  CHECK(k["reduction_at"]["p"] == 37);
  CHECK(k["reduction_at"]["class"] == "extra_node");
}

TEST_CASE("product-analyze: text and JSON agree on the numbers") {
  Json j = run_json(
      "product-analyze --left @builtin:II:1/81 --right @builtin:II:80/81");
  RunResult r = run_cli(
      "product-analyze --left @builtin:II:1/81 --right @builtin:II:80/81");
  CHECK(r.exit_code == 0);
  long long e = j["product"]["euler"].get<long long>();
  long long rho = j["product"]["rho"].get<long long>();
  CHECK(contains(r.output, "e=" + std::to_string(e)));
  CHECK(contains(r.output, "rho=" + std::to_string(rho)));
  CHECK(e == 86);
  CHECK(rho == 43);
  CHECK(contains(r.output, "nodal [79]"));
}

TEST_CASE("family-specialize: degeneration report") {
  RunResult r = run_cli("family-specialize --family 1,2,3,4,II --m -5/4");
  INFO(r.output);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "2,3,5,II"));
  CHECK(contains(r.output, "mw_rank 1"));

  Json j = run_json("family-specialize --family 1,2,3,4,II --m -5/4");
  REQUIRE(j.contains("degeneration"));
  CHECK(j["degeneration"]["m"] == "-5/4");
  CHECK(j["degeneration"]["config"] == "2,3,5,II");
  CHECK(j["degeneration"]["mw_rank"] == 1);
  CHECK(j["analysis"]["euler"] == 12);
  CHECK(j["analysis"]["config"] == "2,3,5,II");

  // A generic member carries no degeneration key.
  j = run_json("family-specialize --family 1,2,3,4,II --m 7");
  CHECK_FALSE(j.contains("degeneration"));
  CHECK(j["analysis"]["mw_rank"] == 2);
}

TEST_CASE("family-match: exact and mod-p solutions") {
  RunResult r = run_cli("family-match --family 1,2,3,4,II --lambda 5/32");
  INFO(r.output);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "-5/4"));

  Json j = run_json("family-match --family 1,2,3,4,II --lambda 5/32");
  REQUIRE(j.is_array());
  bool found = false;
  for (const Json& s : j)
    if (s.contains("value") && s["value"] == "-5/4") found = true;
  CHECK(found);

  r = run_cli("family-match --family 1,2,3,4,II --lambda 5/32 --mod-p 37");
  INFO(r.output);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "m = 8 mod 37"));

  j = run_json("family-match --family 1,2,3,4,II --lambda 5/32 --mod-p 37");
  bool residue8 = false;
  for (const Json& s : j)
    if (s.contains("residue") && s["residue"] == 8 && s["modulus"] == 37)
      residue8 = true;
  CHECK(residue8);
}

TEST_CASE("table-reproduce: one table, all tables, unknown id") {
  Json j = run_json("table-reproduce --id products-II");
  CHECK(j["table"] == "products-II");
  REQUIRE(j["rows"].is_array());
  CHECK(j["rows"].size() == 31);
  for (const Json& row : j["rows"]) CHECK(row["match"] == true);

  RunResult r = run_cli("table-reproduce --table-id rigid-1234");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "rigid-1234"));
  CHECK(contains(r.output, "mismatches=0"));

  j = run_json("table-reproduce");
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);

  r = run_cli("table-reproduce --id bogus");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "unknown table id"));
}

TEST_CASE("surface-analyze: builtin lookups") {
  Json j = run_json("surface-analyze @builtin:II:5/32");
  CHECK(j["euler"] == 12);
  CHECK(j["config"] == "2,3,5,II");
  CHECK(j["mw_rank"] == 1);  // #S - 4 + n2 = 4 - 4 + 1
  CHECK(j["fibers"].size() == 4);

  RunResult r = run_cli("surface-analyze @builtin:II:9/7");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "no builtin II surface with lambda 9/7"));

  r = run_cli("surface-analyze @builtin:IV:5/32");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "builtin class must be II or III"));
}

TEST_CASE("surface-analyze: reduction mod p") {
  Json j = run_json("surface-analyze @builtin:II:1/81 --mod-p 79");
  REQUIRE(j.contains("reduction"));
  CHECK(j["reduction"]["p"] == 79);
  CHECK(j["reduction"]["euler"] == 12);

  // Quadratic coefficients at an inert prime cannot reduce.
  RunResult r = run_cli(
      "surface-analyze '@builtin:II:(17+56*sqrt(-2))/81' --mod-p 5");
  CHECK(r.exit_code == 2);

  // The same builtin reduces fine at a split prime.
  Json split = run_json(
      "surface-analyze '@builtin:II:(17+56*sqrt(-2))/81' --mod-p 19");
  CHECK(split["reduction"]["euler"] == 12);
}

TEST_CASE("model files: JSON round trip through the CLI") {
  Json spec = run_json("family-specialize --family 1,1,2,6,II --m 2");
  const std::string path = "cli_roundtrip_model.json";
  {
    std::ofstream out(path);
    out << spec["model"].dump(2) << "\n";
  }
  Json again = run_json("surface-analyze " + path);
  CHECK(again == spec["analysis"]);
  std::remove(path.c_str());
}

TEST_CASE("model files: diagnostics carry positions and field names") {
  const std::string path = "cli_bad_model.json";
  {
    std::ofstream out(path);
    out << "{\n  \"a\": { \"a4\": [nope] }\n}\n";
  }
  RunResult r = run_cli("surface-analyze " + path);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, path + ":2:"));  // line of the malformed token

  {
    std::ofstream out(path);
    out << "{ \"a\": { \"a5\": [\"1\"] } }\n";
  }
  r = run_cli("surface-analyze " + path);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "a5"));

  {
    std::ofstream out(path);
    out << "{ \"field\": { \"d\": 0 }, \"a\": { \"a6\": [\"1\"] } }\n";
  }
  r = run_cli("surface-analyze " + path);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "field.d"));
  std::remove(path.c_str());

  r = run_cli("surface-analyze no_such_file.json");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "cannot open"));
}

TEST_CASE("registry-dump: families and builtin surfaces") {
  Json j = run_json("registry-dump");
  REQUIRE(j["families"].is_array());
  CHECK(j["families"].size() == 4);
  CHECK(j["builtin_surfaces"].size() == 42);
  bool seen_1234 = false;
  for (const Json& f : j["families"])
    if (f["label"] == "1,2,3,4,II") seen_1234 = true;
  CHECK(seen_1234);

  RunResult r = run_cli("registry-dump");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "builtin surfaces:"));
}

TEST_CASE("usage errors") {
  RunResult r = run_cli("");
  CHECK(r.exit_code == 2);

  r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "surface-analyze"));

  r = run_cli("family-specialize --family 9,9,9,II --m 1");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "unknown family label"));

  r = run_cli("family-specialize --family 1,2,3,4,II");  // missing --m
  CHECK(r.exit_code == 2);

  r = run_cli("product-analyze --left @builtin:II:5/32 --right "
              "@builtin:II:5/32");
  CHECK(r.exit_code == 2);  // identical free cusps: not a product row

  r = run_cli("surface-analyze @builtin:II:5/32 --format yaml");
  CHECK(r.exit_code == 2);
}
