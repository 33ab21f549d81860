#include <filesystem>
#include <fstream>

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"
#include "schema_validator.hpp"

using nlohmann::json;
using namespace holopois::testing;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = HOLOPOIS_FIXTURES_DIR;

const SchemaValidator& validator() {
  static const SchemaValidator v = [] {
    std::ifstream in(HOLOPOIS_SCHEMA_PATH);
    return SchemaValidator(json::parse(in));
  }();
  return v;
}

json run_json(std::vector<std::string> args, int expected_exit) {
  args.push_back("--json");
  auto r = run_cli(HOLOPOIS_CLI_PATH, args);
  CAPTURE(args.front());
  CAPTURE(args.size() > 1 ? args[1] : "");
  CHECK(r.exit_code == expected_exit);
  json doc = json::parse(r.out);
  auto errors = validator().validate(doc);
  CAPTURE(errors.empty() ? "" : errors.front());
  CHECK(errors.empty());
  return doc;
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

}  // namespace

TEST_CASE("schema validator rejects malformed documents") {
  json doc = run_json({"check", fixture("surface_wz.poisson")}, 0);
  json broken = doc;
  broken.erase("timing_ms");
  CHECK_FALSE(validator().validate(broken).empty());
  broken = doc;
  broken["input_digest"] = "md5:00";
  CHECK_FALSE(validator().validate(broken).empty());
  broken = doc;
  broken["result"]["jacobi"] = "maybe";
  CHECK_FALSE(validator().validate(broken).empty());
  broken = doc;
  broken["extra"] = 1;
  CHECK_FALSE(validator().validate(broken).empty());
}

TEST_CASE("cli check") {
  auto doc = run_json({"check", fixture("surface_wz.poisson")}, 0);
  CHECK(doc["command"] == "check");
  CHECK(doc["result"]["jacobi"] == "pass");
  doc = run_json({"check", fixture("not_poisson.poisson")}, 0);
  CHECK(doc["result"]["jacobi"] == "fail");
  CHECK(doc["result"]["jacobiator"] == "2*y dx^dy^dz");
  doc = run_json({"check", fixture("invalid/bad_expression.poisson")}, 2);
  CHECK(doc["result"].is_null());
  CHECK(doc["error"]["line"] == 3);
  CHECK(doc["error"]["column"] == 14);
  run_json({"check", fixture("does_not_exist.poisson")}, 2);
}

TEST_CASE("cli modular") {
  auto doc = run_json({"modular", fixture("surface_wz.poisson")}, 0);
  CHECK(doc["result"]["zeta"] == "-w dw + z dz");
  CHECK(doc["result"]["lie_derivative_vanishes"] == true);
  doc = run_json({"modular", fixture("lambda4.poisson")}, 0);
  CHECK(doc["result"]["components"] == json({"0", "-x2", "x3", "0"}));
  doc = run_json({"modular", fixture("not_poisson.poisson")}, 3);
  CHECK(doc["error"]["kind"] == "precondition");
}

TEST_CASE("cli report verdicts") {
  CHECK(run_json({"report", fixture("surface_wz.poisson")}, 0)["result"]["verdict"] == "SurfaceHolonomic");
  CHECK(run_json({"report", fixture("surface_w2.poisson")}, 0)["result"]["verdict"] == "NotLogSymplectic");
  auto lam = run_json({"report", fixture("lambda4.poisson")}, 0)["result"];
  CHECK(lam["verdict"] == "ObstructedByModularLeaves");
  CHECK(lam["witness"]["dimension"] == 1);
  auto h2 = run_json({"report", fixture("surface_wz.poisson"), "--betti", "1,2,1"}, 0)["result"]["surface_h2"];
  CHECK(h2["h2"] == 2);
  CHECK(run_json({"report", fixture("so3.poisson")}, 0)["result"]["verdict"].is_null());
}

TEST_CASE("cli cohomology and tjurina") {
  auto t = run_json({"cohomology", fixture("symplectic.poisson"), "--kmax", "2", "--wmax", "6"}, 0)["result"];
  CHECK(t["m"] == -2);
  CHECK(t["euler_consistent"] == true);
  for (const auto& e : t["entries"]) CHECK(e["dim_H"] == ((e["k"] == 0 && e["w"] == 0) ? 1 : 0));
  run_json({"cohomology", fixture("symplectic.poisson"), "--wmax", "30", "--basis-cap", "5"}, 4);

  CHECK(run_json({"tjurina", "w*z"}, 0)["result"]["tjurina"] == 1);
  CHECK(run_json({"tjurina", "w^2 - z^3"}, 0)["result"]["tjurina"] == 2);
  CHECK(run_json({"tjurina", "w^3 - z^3"}, 0)["result"]["tjurina"] == 4);
  CHECK(run_json({"tjurina", "w^2"}, 0)["result"]["tjurina"] == "INFINITE");
  CHECK(run_json({"tjurina", fixture("three_lines.poisson"), "--point", "0,0"}, 0)["result"]["tjurina"] == 4);
  CHECK(run_json({"tjurina", "x^2 + y^3", "--vars", "x,y"}, 0)["result"]["tjurina"] == 2);
  run_json({"tjurina", "w^2 +", "--json"}, 2);
  run_json({"tjurina", "w*z", "--point", "0"}, 2);
  run_json({"tjurina", "w^9*z^7 - z^13 + w^3", "--budget", "3"}, 4);
}

TEST_CASE("cli verify and usage errors") {
  auto doc = run_json({"verify", fixture("so3.poisson"), "--seed", "7", "--samples", "5"}, 0);
  CHECK(doc["result"]["all_passed"] == true);
  CHECK(doc["result"]["seed"] == 7);
  CHECK(run_cli(HOLOPOIS_CLI_PATH, {}).exit_code == 1);
  CHECK(run_cli(HOLOPOIS_CLI_PATH, {"frobnicate"}).exit_code == 1);
  auto text = run_cli(HOLOPOIS_CLI_PATH, {"tjurina", "w*z"});
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("tau (global) = 1") != std::string::npos);
}

TEST_CASE("input digest is deterministic") {
  auto a = run_json({"check", fixture("so3.poisson")}, 0);
  auto b = run_json({"check", fixture("so3.poisson")}, 0);
  CHECK(a["input_digest"] == b["input_digest"]);
  CHECK(a["result"] == b["result"]);
  CHECK(a["input_digest"] != run_json({"check", fixture("surface_wz.poisson")}, 0)["input_digest"]);
}
