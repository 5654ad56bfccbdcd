#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "relfree/io.hpp"

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(RELFREE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return CmdResult{WEXITSTATUS(status), out};
}

std::string data_path(const std::string& name) {
  return std::string(RELFREE_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/relfree_cli_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("hilbert prints component dimensions") {
  const CmdResult r = run_cli("hilbert --algebra L --d 2 --degree 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2, 4, 6, 8\n");

  const CmdResult rp = run_cli("hilbert --algebra poly --d 2 --degree 4");
  CHECK(rp.out == "1, 2, 3, 4, 5\n");

  const CmdResult rm = run_cli("hilbert --algebra metab --d 3 --degree 4");
  CHECK(rm.out == "3, 3, 8, 15\n");
}

TEST_CASE("molien prints invariant dimensions") {
  const CmdResult r =
      run_cli("molien --algebra poly --group " + data_path("groups/c4.json") + " --degree 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1, 0, 1, 0, 3, 0, 3\n");

  const CmdResult rl = run_cli("molien --algebra L --group " +
                               data_path("groups/minus_identity.json") + " --degree 6");
  CHECK(rl.out == "0, 4, 0, 8, 0, 12\n");
}

TEST_CASE("check dispatches the criteria") {
  const CmdResult r = run_cli("check --group " + data_path("groups/minus_identity.json"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "not-finitely-generated"));
  CHECK(contains(r.out, "finite-group"));

  const CmdResult rm = run_cli("check --criterion metabelian --group " +
                               data_path("groups/minus_identity.json") + " --degree 8");
  CHECK(rm.exit_code == 0);
  CHECK(contains(rm.out, "not-finitely-generated"));
  CHECK(contains(rm.out, "0, 1, 0, 3, 0, 5, 0, 7"));

  const CmdResult rt = run_cli("check --group " + data_path("groups/trivial.json"));
  CHECK(contains(rt.out, "trivial-group"));
}

TEST_CASE("closure reports the group order") {
  const CmdResult r = run_cli("closure --group " + data_path("groups/c4.json"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "order: 4"));

  const CmdResult rj =
      run_cli("closure --group " + data_path("groups/s3.json") + " --format json");
  const auto j = nlohmann::ordered_json::parse(rj.out);
  CHECK(j["order"] == 6);
  CHECK(j["elements"].size() == 6);
}

TEST_CASE("modgen prints the generator table") {
  const CmdResult r =
      run_cli("modgen --group " + data_path("groups/minus_identity.json") + " --degree 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "linear_invariant_dim: 0"));
  CHECK(contains(r.out, "n=4: invariants 8, module_span 0, new_generators 8"));

  const CmdResult ra = run_cli("modgen --as-algebra --group " +
                               data_path("groups/minus_identity.json") + " --degree 6");
  CHECK(contains(ra.out, "n=4: invariants 8, module_span 0, new_generators 8"));
}

TEST_CASE("invariants lists bases per degree") {
  const CmdResult r = run_cli("invariants --algebra poly --group " +
                              data_path("groups/swap.json") + " --degree 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "degree 1: dim 1"));
  CHECK(contains(r.out, "degree 2: dim 2"));
}

TEST_CASE("weitzenbock emits verdict, constants, and the generation table") {
  const CmdResult r = run_cli("weitzenbock -b 2 1 --algebra L --degree 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "verdict: inconclusive"));
  CHECK(contains(r.out, "constants dims"));
  CHECK(contains(r.out, "generation check"));
  CHECK(!contains(r.out, "MISMATCH"));

  const CmdResult rf = run_cli("weitzenbock --blocks-file " +
                               data_path("derivations/standard_2_1.json") + " --degree 3");
  CHECK(rf.exit_code == 0);
  CHECK(contains(rf.out, "verdict: inconclusive"));

  const CmdResult r3 = run_cli("weitzenbock -b 3 --degree 3");
  CHECK(contains(r3.out, "verdict: not-finitely-generated"));
}

TEST_CASE("malformed input exits with code 2") {
  const std::string bad = write_temp("bad.json", "{ this is not json");
  CHECK(run_cli("closure --group " + bad).exit_code == 2);
  CHECK(run_cli("molien --group /tmp/relfree_no_such_file.json").exit_code == 2);

  const std::string ragged =
      write_temp("ragged.json", R"({"d": 2, "generators": [[["1","0"]]]})");
  CHECK(run_cli("closure --group " + ragged).exit_code == 2);
}

TEST_CASE("non-finite groups exit with code 3") {
  const std::string stretch = write_temp(
      "stretch.json", R"({"d": 2, "generators": [[["2","0"],["0","1"]]]})");
  CHECK(run_cli("closure --group " + stretch + " --cap 50").exit_code == 3);
}

TEST_CASE("limits exit with code 4") {
  CHECK(run_cli("hilbert --algebra L --d 2 --degree 100").exit_code == 4);
  CHECK(run_cli("hilbert --algebra L --d 9 --degree 3").exit_code == 4);
}

TEST_CASE("emitted JSON parses back to identical bytes") {
  const CmdResult r = run_cli("decompose --algebra metab --d 2 --degree 4 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = relfree::parse_json_text(r.out);
  const relfree::SymmSeries s = relfree::symm_series_from_json(j);
  CHECK(relfree::symm_series_json(s).dump(2) + "\n" == r.out);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::string args =
      "modgen --group " + data_path("groups/swap.json") + " --degree 6 --format json";
  const CmdResult a = run_cli(args);
  const CmdResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}
