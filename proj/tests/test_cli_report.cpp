#include <sstream>

#include "doctest.h"
#include "gjms6/cli_report.hpp"

using namespace gjms6;

namespace {

RunConfig config(const std::string& suite, const std::string& geom = "", int n = 7) {
  RunConfig c;
  c.suite = suite;
  c.geometry = geom;
  c.n = n;
  return c;
}

}  // namespace

TEST_CASE("config errors") {
  CHECK_THROWS_AS(validate(config("bogus")), ConfigError);
  CHECK_THROWS_AS(validate(config("dtn", "", 4)), ConfigError);
  CHECK_THROWS_AS(validate(config("critical", "ball", 7)), ConfigError);
  CHECK_THROWS_AS(validate(config("trace", "ball", 5)), ConfigError);
  CHECK_THROWS_AS(validate(config("covariance", "ball")), ConfigError);
  CHECK_THROWS_AS(validate(config("trace", "hyperbolic")), ConfigError);
  CHECK_THROWS_AS(validate(config("critical", "hyperbolic", 5)), ConfigError);
  CHECK_THROWS_AS(validate(config("dtn", "torus")), ConfigError);
  RunConfig t = config("dtn");
  t.tol = 0;
  CHECK_THROWS_AS(validate(t), ConfigError);
  CHECK_NOTHROW(validate(config("dtn", "hyperbolic")));
  CHECK_NOTHROW(validate(config("critical", "", 5)));
}

TEST_CASE("dtn suite on the half-space") {
  SuiteReport r = run_suite(config("dtn"));
  CHECK(r.checks.size() == 2);
  CHECK(r.failed() == 0);
  for (auto& c : r.checks) {
    CHECK(c.exact);
    CHECK(c.residual == "0");
  }
  auto j = r.to_json();
  CHECK(j["summary"]["passed"] == 2);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK_FALSE(j["checks"][0].contains("runtime_ms"));
  // no multiplier table on the half-space
  std::ostringstream os;
  CHECK_THROWS_AS(emit_csv(r, "multiplier_table", os), std::invalid_argument);
}

TEST_CASE("multiplier table") {
  RunConfig c = config("dtn", "ball");
  c.lmax = 3;
  c.timing = true;
  SuiteReport r = run_suite(c);
  CHECK(r.failed() == 0);
  CHECK(r.to_json()["checks"][0].contains("runtime_ms"));
  std::ostringstream os;
  emit_csv(r, "multiplier_table", os);
  std::istringstream is(os.str());
  std::string header, row0, row1;
  std::getline(is, header);
  std::getline(is, row0);
  std::getline(is, row1);
  CHECK(header == "ell,P1,P3,P5");
  CHECK(row0 == "0,3,24,120");
  CHECK(row1 == "1,4,60,720");
  CHECK_THROWS_AS(emit_csv(r, "gap_vs_epsilon", os), std::invalid_argument);
  CHECK_THROWS_AS(emit_csv(r, "", os), std::invalid_argument);
}

TEST_CASE("reports are deterministic per seed") {
  RunConfig c = config("symmetry", "halfspace");
  c.seed = 9;
  std::string a = run_suite(c).to_json().dump(), b = run_suite(c).to_json().dump();
  CHECK(a == b);
  CHECK(decimal(1.5e-7) == "1.500000e-07");
}
