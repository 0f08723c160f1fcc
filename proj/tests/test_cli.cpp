#include <fstream>
#include <sstream>

#include "doctest.h"
#include "loopreps/json_io.hpp"
#include "loopreps_cli/job_runner.hpp"

using namespace loopreps;
using Json = nlohmann::json;
namespace lj = loopreps::json;

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kField = R"("field": {"modulus": ["1","0","1"], "automorphisms": [["0","1"],["0","-1"]], "subgroup": [0,1]})";

cli::RunResult run(const std::string& text, std::string* errOut = nullptr, cli::RunOptions opt = {}) {
  std::ostringstream out, err;
  auto r = cli::runJob(text, opt, out, err);
  if (errOut) *errOut = err.str();
  return r;
}

std::string job(const std::string& lweights, const std::string& commands) {
  return "{" + kField + R"(, "lieType": "A1", "lweights": {)" + lweights + R"(}, "commands": [)" + commands + "]}";
}

const Json& result(const cli::RunResult& r, std::size_t k) { return r.report["results"][k]; }

}  // namespace

TEST_CASE("example job") {
  const auto r = run(readFile(std::string(LOOPREPS_JOBS_DIR) + "/gaussian_a1.json"));
  CHECK(r.exitCode == 0);
  CHECK(r.report["schemaVersion"] == 1);
  for (const auto& e : r.report["results"]) CHECK(e["status"] == "ok");

  const Json& info = result(r, 1)["result"];
  CHECK(info["degree"] == 1);
  CHECK(info["dimF"] == 1);
  CHECK(info["dimK"] == 1);
  CHECK(info["wt"] == Json::array({0}));

  const Json& tensor = result(r, 4)["result"];
  CHECK(tensor["decomposition"].size() == 2);
  for (const auto& part : tensor["decomposition"]) {
    CHECK(part["dimK"] == 8);
    CHECK(part["mult"] == 1);
  }
  CHECK(tensor["totalDimK"] == 16);
  CHECK(tensor["tpIrreducible"] == false);

  const Json& kx = result(r, 9)["result"];
  REQUIRE(kx["generators"].size() == 1);
  CHECK(kx["generators"][0]["fixedByH"] == true);
  CHECK(kx["generators"][0]["matrix"] == Json::parse(R"([[["0","0"],["-1","0"]],[["1","0"],["0","0"]]])"));

  CHECK(result(r, 11)["result"]["chain"] == Json::parse("[[0],[2],[4]]"));
  const Json& series = result(r, 12)["result"];
  CHECK(series["allPassed"] == true);
  int rootChecks = 0;
  for (const auto& c : series["checks"]) rootChecks += c["name"].get<std::string>().rfind("lambda_", 0) == 0;
  CHECK(rootChecks == 6);
}

TEST_CASE("reports are deterministic and echo re-parses") {
  const std::string text = readFile(std::string(LOOPREPS_JOBS_DIR) + "/gaussian_a1.json");
  const auto a = run(text), b = run(text);
  CHECK(a.report.dump(2) == b.report.dump(2));

  const auto ctx = lj::contextFromJson(a.report["field"]);
  const auto rs = RootSystem::build(a.report["lieType"].get<std::string>());
  const Json src = Json::parse(text);
  for (const auto& [name, v] : a.report["lweights"].items()) {
    CHECK(lj::lweightFromJson(ctx, rs, v) == lj::lweightFromJson(ctx, rs, src["lweights"][name]));
  }
  for (const auto& part : result(a, 5)["result"]["decomposition"]) {
    const LWeight w = lj::lweightFromJson(ctx, rs, part["class"]);
    CHECK(lj::toJson(w) == part["class"]);
  }
}

TEST_CASE("malformed jobs exit with 2") {
  std::string err;
  CHECK(run("{not json", &err).exitCode == 2);
  CHECK(run(R"({"commands": "lw-info"})").exitCode == 2);
  CHECK(run(job(R"("w": [])", R"("frobnicate w")"), &err).exitCode == 2);
  CHECK(err.find("command 0") != std::string::npos);
  CHECK(run(job(R"("w": [])", R"("validate-field", "lw-info nobody")"), &err).exitCode == 2);
  CHECK(err.find("command 1") != std::string::npos);
  CHECK(run(job(R"("w": [])", R"("tensor w")")).exitCode == 2);
  CHECK(run(job(R"("w": [])", R"("lw-info w --node 1")")).exitCode == 2);
  CHECK(run(job(R"("w": [{"node": 1, "exp": 1}])", R"("lw-info w")")).exitCode == 2);
  CHECK(run(R"({"lieType": "A1", "lweights": {"w": []}, "commands": ["lw-info w"]})").exitCode == 2);
  CHECK(run(job("", R"("link-chain A1 [x] [0]")")).exitCode == 2);
  CHECK(run(job("", R"({"args": ["w"]})")).exitCode == 2);
}

TEST_CASE("validation failures exit with 1 and name the error") {
  std::string err;
  auto r = run(job(R"("w": [{"node": 1, "point": ["0","1"], "exp": -1}])", R"("validate-field", "lw-info w")"), &err);
  CHECK(r.exitCode == 1);
  CHECK(result(r, 0)["status"] == "ok");
  CHECK(result(r, 1)["status"] == "error");
  CHECK(result(r, 1)["error"] == "NotDominant");
  CHECK(err.find("command 1") != std::string::npos);
  CHECK(err.find("NotDominant") != std::string::npos);

  r = run(job("", R"("link-chain A1 [1] [0] --max-steps 5")"));
  CHECK(r.exitCode == 1);
  CHECK(result(r, 0)["error"] == "NotSameClass");

  r = run(R"({"field": {"modulus": ["1","0","1"], "automorphisms": [["0","1"],["0","2"]], "subgroup": [0,1]},
             "commands": ["validate-field"]})",
          &err);
  CHECK(r.exitCode == 1);
  CHECK(err.find("NotARoot") != std::string::npos);

  r = run(job(R"("w": [{"node": 1, "point": ["0","1"], "exp": 1}])", R"("kx-matrix w --node 1 --index 3")"));
  CHECK(r.exitCode == 1);
}

TEST_CASE("options, object commands and quiet mode") {
  cli::RunOptions opt;
  opt.order = 3;
  opt.quiet = true;
  std::ostringstream out, err;
  auto r = cli::runJob(job("", R"({"cmd": "series-check", "type": "B2"}, {"cmd": "link-chain", "args": ["A2", [3,0], [0,0]], "maxSteps": 8})"),
                       opt, out, err);
  CHECK(r.exitCode == 0);
  CHECK(out.str().empty());
  CHECK(result(r, 0)["result"]["order"] == 3);
  CHECK(result(r, 0)["command"] == "series-check --type B2");
  CHECK(result(r, 1)["result"]["chain"].front() == Json::parse("[0,0]"));

  // lw-info on A1 reports Weyl module dimensions
  r = run(job(R"("w2": [{"node": 1, "point": ["0","1"], "exp": 2}])", R"("lw-info w2")"));
  CHECK(result(r, 0)["result"]["weylDimF"] == 4);
  CHECK(result(r, 0)["result"]["weylDimK"] == 8);
  CHECK(result(r, 0)["result"]["dimK"] == 6);
}
