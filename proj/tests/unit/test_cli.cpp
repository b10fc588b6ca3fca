#include <catch2/catch.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "treealg/cli/cli.hpp"

using treealg::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int         code = 0;
  std::string out;
  std::string err;
  Json        json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome            o;
  o.code = run(args, out, err);
  o.out  = out.str();
  o.err  = err.str();
  return o;
}

}  // namespace

TEST_CASE("group order against the oracle", "[cli]") {
  auto const r = call({"group", "order", "--group", "grigorchuk", "--level", "3", "--expect-oracle"});
  REQUIRE(r.code == 0);
  auto const j = r.json();
  CHECK(j["rows"][0]["value"] == "128");
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["status"] == "ok");
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(call({"group", "order", "--group", "nosuch", "--level", "3"}).code == 2);
  CHECK(call({"group", "order", "--group", "grigorchuk"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"group", "order", "--group", "grigorchuk", "--level", "3", "--expect", "129"}).code == 1);
  CHECK(call({"group", "order", "--group", "grigorchuk", "--level", "3", "--expect", "1,2"}).code == 2);
  CHECK(call({"alg", "dim", "--level", "9"}).code == 3);
  CHECK(call({"alg", "nil", "--element", "A*"}).code == 2);
  CHECK(call({"alg", "dim", "--group", "basilica", "--level", "2", "--expect-oracle"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("resource errors mention the memory estimate", "[cli]") {
  auto const r = call({"alg", "dim", "--level", "9"});
  CHECK(r.err.find("MiB") != std::string::npos);
}

TEST_CASE("group hausdorff sequence", "[cli]") {
  auto const r = call({"group", "hausdorff", "--group", "grigorchuk", "--p", "2", "--levels", "8", "--expect-oracle"});
  REQUIRE(r.code == 0);
  auto const j = r.json();
  CHECK(j["rows"].size() == 8);
  CHECK(j["rows"][4]["value"] == "22/31");
  CHECK(j["rows"][7]["value"] == "54/85");
  CHECK(j["details"]["limit"] == "5/8");
  CHECK(j["checks"].size() == 6);
}

TEST_CASE("algebra dimension and ideal", "[cli]") {
  auto const d = call({"alg", "dim", "--group", "grigorchuk", "--field", "gf2", "--level", "4", "--expect-oracle"});
  CHECK(d.code == 0);
  CHECK(d.json()["rows"][0]["value"] == 78);
  auto const k =
      call({"alg", "ideal", "--preset", "branching-char2", "--report", "codim,k2,m2k", "--expect", "6,12,8"});
  CHECK(k.code == 0);
  CHECK(k.json()["partial"] == false);
  CHECK(call({"alg", "ideal", "--preset", "branching-char2", "--report", "codim", "--expect", "5"}).code == 1);
  CHECK(call({"alg", "ideal", "--preset", "nosuch"}).code == 2);
}

TEST_CASE("nil degree of AB", "[cli]") {
  auto const r = call({"alg", "nil", "--element", "A*B", "--max-power", "16", "--field", "gf2"});
  REQUIRE(r.code == 0);
  auto const v = r.json()["rows"][0]["value"];
  REQUIRE(v.is_number());
  CHECK(v.get<int>() <= 8);
}

TEST_CASE("presentation checks", "[cli]") {
  CHECK(call({"present", "check", "--preset", "grigorchuk-alg-char2", "--depth", "4", "--level-max", "8"}).code == 0);
  CHECK(call({"present", "check", "--preset", "grigorchuk-group", "--depth", "3", "--level-max", "9"}).code == 0);
  auto const bad = call({"present", "check", "--relator", "A*B", "--field", "gf2"});
  CHECK(bad.code == 1);
  CHECK(bad.json()["details"]["violations"][0]["first_failing_level"] == 2);
  CHECK(call({"present", "check", "--relator", "(ad)^4", "--level-max", "6"}).code == 0);
  CHECK(call({"present", "check", "--preset", "grigorchuk-group", "--relator", "a"}).code == 2);
}

TEST_CASE("present list prints one relator per line", "[cli]") {
  auto const r = call({"present", "list", "--preset", "grigorchuk-group", "--depth", "0"});
  CHECK(r.out == "a^2\nb^2\nc^2\nd^2\nb*c*d\n(a*d)^4\n(a*d*a*c*a*c)^4\n");
}

TEST_CASE("reports are byte-stable and formats agree", "[cli]") {
  std::vector<std::string> const args{"alg", "filtration", "--dmax", "8", "--expect-oracle"};
  auto const a = call(args);
  auto const b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto csv = args;
  csv.insert(csv.end(), {"--format", "csv"});
  auto const c = call(csv);
  CHECK(c.out.rfind("quantity,level,value,stabilization_level\na_0,", 0) == 0);
  auto serial = args;
  serial.push_back("--serial");
  CHECK(call(serial).out == a.out);
  auto table = args;
  table.insert(table.end(), {"--format", "table"});
  CHECK(call(table).out.find("status: ok") != std::string::npos);
}

TEST_CASE("quiet mode and output files", "[cli]") {
  auto const path = std::string("cli_test_report.json");
  auto const r    = call({"group", "order", "-g", "odometer", "-n", "5", "--quiet", "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["rows"][0]["value"] == "32");
  std::remove(path.c_str());
}

TEST_CASE("group export round-trips through a file", "[cli]") {
  auto const e = call({"group", "export", "--group", "grigorchuk"});
  REQUIRE(e.code == 0);
  auto const path = std::string("cli_test_group.grp");
  {
    std::ofstream f(path);
    f << e.out;
  }
  auto const r = call({"group", "order", "--group", path, "--level", "4"});
  CHECK(r.json()["rows"][0]["value"] == "4096");
  std::remove(path.c_str());
}

TEST_CASE("sampled checks record the seed", "[cli]") {
  auto const a = call({"alg", "graded-nil", "--degree", "2", "--trials", "5", "--seed", "9", "--level-cap", "5"});
  CHECK(a.code == 0);
  CHECK(a.json()["config"]["seed"] == 9);
  auto const b = call({"alg", "graded-nil", "--degree", "2", "--trials", "5", "--seed", "9", "--level-cap", "5"});
  CHECK(a.out == b.out);
}
