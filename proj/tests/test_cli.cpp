#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "convlab/cli.hpp"

using convlab::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("simulate prints layers") {
  const auto r = run({"simulate", "--graph", "catalog:petersen", "--seed-set", "0,2,8", "-k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0: 0 2 8\n", 0) == 0);
  CHECK(r.out.find("converted 10/10 (complete)") != std::string::npos);
  const auto j = json::parse(run({"simulate", "-g", "catalog:k4", "-s", "0", "-k", "2", "--json"}).out);
  CHECK(j["complete"] == false);
  CHECK(j["converted"] == 1);
}

TEST_CASE("check exit codes") {
  CHECK(run({"check", "-g", "catalog:petersen", "-s", "0,2,8"}).code == 0);
  const auto no = run({"check", "-g", "catalog:petersen", "-s", "0,1"});
  CHECK(no.code == 1);
  CHECK(no.out.find("residual immune core") != std::string::npos);
  const auto j = json::parse(run({"check", "-g", "catalog:petersen", "-s", "0,1,2,3,4,5", "-k", "3", "--json"}).out);
  CHECK(j["complement_rule"]["rule"] == "V-S independent");
}

TEST_CASE("solve with certificate") {
  const auto r = run({"solve", "-g", "catalog:petersen", "--certify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c_2 = 3") != std::string::npos);
  CHECK(r.out.find("certificate: ok") != std::string::npos);
  const auto j = json::parse(run({"solve", "-g", "catalog:dodecahedron", "--json", "--certify"}).out);
  CHECK(j["value"] == 6);
  CHECK(j["method"] == "ComplementBnB");
  CHECK(j["certify"]["oracle_value"] == 6);
}

TEST_CASE("bounds and classify") {
  const auto b = run({"bounds", "-g", "catalog:petersen"});
  CHECK(b.code == 0);
  CHECK(b.out.find("regular-k+1") != std::string::npos);
  CHECK(b.out.find("cubic-3n/8") != std::string::npos);
  const auto j = json::parse(run({"classify", "-g", "catalog:j5", "--json"}).out);
  CHECK(j["girth"] == 5);
  CHECK(j["chromatic_class"] == "Class2");
  CHECK(j["cyclically_4_connected"] == true);
}

TEST_CASE("construct and catalog") {
  CHECK(run({"catalog", "k4"}).out == "C~\n");
  CHECK(run({"catalog", "--list"}).out.find("petersen") != std::string::npos);
  const auto r = run({"construct", "--recipe", R"({"kind":"ProductGA","G":"k4","A":"g1","a":0})", "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["order"] == 28);
  const auto flags = run({"construct", "--kind", "PathReplace", "-p", "m=2", "-p", "leaf=H1", "-f", "edges"});
  CHECK(flags.code == 0);
  CHECK(flags.out.rfind("10 15\n", 0) == 0);
}

TEST_CASE("graph input from a recipe source") {
  const auto r = run({"solve", "-g", R"(recipe:{"kind":"CalGMember","tree":"star-3"})"});
  CHECK(r.out.find("c_2 = 7") != std::string::npos);
}

TEST_CASE("verify one suite") {
  const auto r = run({"verify", "prop-nbound"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS prop-nbound", 0) == 0);
  CHECK(run({"verify", "--list"}).out.find("thm-4conn") != std::string::npos);
}

TEST_CASE("errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"solve"}).code == 2);
  CHECK(run({"solve", "-g", "catalog:nope"}).code == 2);
  CHECK(run({"solve", "-g", "/no/such/file"}).code == 2);
  CHECK(run({"verify", "no-such-suite"}).code == 2);
  CHECK(run({"construct", "--recipe", "{"}).code == 2);
  CHECK(run({"check", "-g", "catalog:k4", "-s", "9"}).code == 2);
}
