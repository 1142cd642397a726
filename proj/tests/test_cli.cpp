#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rhotensor/cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rhotensor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rhotensor::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json strip_times(json j) {
  if (j.is_object()) {
    j.erase("wall_time_ms");
    for (auto& [k, v] : j.items()) v = strip_times(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_times(v);
  }
  return j;
}

bool snake_case_keys(const json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      for (char c : k)
        if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
          return false;
      if (!snake_case_keys(v)) return false;
    }
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (!snake_case_keys(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("decompose as json") {
  const Run r = run({"decompose", "--type", "A2", "--lhs", "1,1", "--rhs", "1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "decompose");
  CHECK(j["spec"]["family"] == "A");
  CHECK(j["spec"]["rank"] == 2);
  CHECK(j["status"] == "pass");
  const auto& comps = j["payload"]["components"];
  REQUIRE(comps.size() == 5);
  std::map<std::vector<int>, int> got;
  for (const auto& c : comps) got[c["weight"].get<std::vector<int>>()] = c["multiplicity"].get<int>();
  CHECK(got == std::map<std::vector<int>, int>{{{0, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{2, 2}, 1}, {{3, 0}, 1}});
  CHECK(j["payload"]["dimension_check"] == true);
  CHECK(snake_case_keys(j));
}

TEST_CASE("decompose with a target") {
  const Run r =
      run({"decompose", "--type", "A2", "--lhs", "1,1", "--rhs", "1,1", "--target", "1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["payload"]["target_multiplicity"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({"kostant", "--type", "G2"}).code == 0);
  CHECK(run({"kostant", "--type", "Z9"}).code == 2);
  CHECK(run({"kostant", "--type", "D3"}).code == 2);
  CHECK(run({"kostant"}).code == 2);
  CHECK(run({"frobnicate", "--type", "A2"}).code == 2);
  CHECK(run({"decompose", "--type", "A2", "--lhs", "1,-1", "--rhs", "1,1"}).code == 2);
  CHECK(run({"decompose", "--type", "A2", "--lhs", "1,1,1", "--rhs", "1,1"}).code == 2);
  CHECK(run({"mult", "--type", "A2", "--weight", "x"}).code == 2);
  CHECK(run({"kostant", "--type", "A2", "--factor", "0"}).code == 2);
  CHECK(run({"prop9", "--type", "A2", "--weight", "1,0"}).code == 2);
  CHECK(run({"probe-saturation", "--type", "B2", "--cap", "1"}).code == 2);
  CHECK(run({"kostant", "--type", "A2", "--format", "xml"}).code == 2);
  const Run heavy = run({"kostant", "--type", "E6"});
  CHECK(heavy.code == 3);
  CHECK_FALSE(heavy.err.empty());
  CHECK(run({"decompose", "--type", "B3", "--lhs", "4,4,4", "--rhs", "4,4,4", "--max-lattice-points", "10"}).code ==
        3);
  CHECK(run({"dims", "--type", "E6"}).code == 0);
  CHECK(run({"roots", "--type", "E8"}).code == 0);
}

TEST_CASE("table output leads with a status line") {
  const Run r = run({"kostant", "--type", "A2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("kostant A2: pass\n", 0) == 0);
  const Run probe = run({"probe-saturation", "--type", "A2", "--cap", "1"});
  CHECK(probe.code == 0);
  CHECK(probe.out.rfind("probe-saturation A2: info\n", 0) == 0);
}

TEST_CASE("every subcommand emits a json envelope") {
  const std::vector<std::vector<std::string>> cmds = {
      {"roots", "--type", "B2"},
      {"decompose", "--type", "B2", "--lhs", "1,0", "--rhs", "0,1"},
      {"mult", "--type", "B2", "--weight", "1,1"},
      {"kostant", "--type", "B2", "--factor", "saturation"},
      {"vertices", "--type", "B2", "--hull"},
      {"prop9", "--type", "B2"},
      {"prop9", "--type", "B2", "--weight", "2,2"},
      {"ineq", "--type", "B2"},
      {"ineq", "--type", "B2", "--weight", "0,2"},
      {"identity4", "--type", "B2"},
      {"identity4", "--type", "B2", "--samples", "50"},
      {"dims", "--type", "B2"},
      {"probe-saturation", "--type", "A2", "--cap", "1"},
  };
  for (auto args : cmds) {
    CAPTURE(args[0]);
    args.insert(args.end(), {"--format", "json"});
    const Run a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    const json j = json::parse(a.out);
    CHECK(j["schema_version"] == "1");
    CHECK(j["command"] == args[0]);
    CHECK(j.contains("payload"));
    const std::string status = j["status"];
    CHECK((status == "pass" || status == "fail" || status == "info"));
    CHECK(snake_case_keys(j));
    CHECK(strip_times(j) == strip_times(json::parse(b.out)));
  }
}

TEST_CASE("environment variables set the resource caps") {
  ::setenv("RHOTENSOR_MAX_LATTICE_POINTS", "10", 1);
  CHECK(run({"decompose", "--type", "B3", "--lhs", "4,4,4", "--rhs", "4,4,4"}).code == 3);
  ::unsetenv("RHOTENSOR_MAX_LATTICE_POINTS");
  ::setenv("RHOTENSOR_ALLOW_HEAVY", "1", 1);
  CHECK(run({"mult", "--type", "E6", "--weight", "1,0,0,0,0,0"}).code == 0);
  ::unsetenv("RHOTENSOR_ALLOW_HEAVY");
  CHECK(run({"mult", "--type", "E6", "--weight", "1,0,0,0,0,0", "--allow-heavy"}).code == 0);
  CHECK(run({"decompose", "--type", "A2", "--lhs", "1,1", "--rhs", "1,1", "--threads", "3"}).code == 0);
}

TEST_CASE("envelope matches the documented schema") {
  std::ifstream in(RHOTENSOR_SCHEMA_PATH);
  REQUIRE(in);
  const json schema = json::parse(in);
  const json env = json::parse(run({"dims", "--type", "A2", "--format", "json"}).out);
  for (const auto& key : schema["required"]) CHECK(env.contains(key.get<std::string>()));
  for (const auto& [key, _] : env.items()) CHECK(schema["properties"].contains(key));
  CHECK(schema["properties"]["schema_version"]["const"] == env["schema_version"]);
}
