#include <doctest.h>

#include "liecat/error.hpp"
#include "liecat/verifier.hpp"

using namespace liecat;

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(names.size() == 12);
  CHECK(names.front() == "basis_dims");
}

TEST_CASE("basis dimensions suite") {
  SuiteConfig cfg;
  cfg.max_degree = 6;
  const Report r = run_suite("basis_dims", cfg);
  CHECK(r.pass());
  CHECK(r.cases == 18);
  const auto table = r.details["dimension_table"];
  CHECK(table[1]["dimensions"] == nlohmann::json::array({2, 1, 2, 3, 6, 9}));
}

TEST_CASE("constants and fhat suites pass with defaults") {
  SuiteConfig cfg;
  cfg.cases = 40;
  for (const char* name : {"constants", "fhat"}) {
    const Report r = run_suite(name, cfg);
    CHECK_MESSAGE(r.pass(), name);
    CHECK(r.failed == 0);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("errors") {
  try {
    run_suite("nonsense", {});
    FAIL("expected UnknownSuite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSuite);
  }
  SuiteConfig bad;
  bad.max_degree = 1;
  try {
    run_suite("jacobi", bad);
    FAIL("expected ConfigInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigInvalid);
  }
  SuiteConfig zero_gens;
  zero_gens.n_gens = 0;
  CHECK_THROWS_AS(run_suite("constants", zero_gens), Error);
}

TEST_CASE("run_all isolates failing suites") {
  SuiteConfig cfg;
  cfg.cases = 3;
  cfg.max_degree = 2;  // too small for jacobi only
  const auto reports = run_all(cfg, 1);
  REQUIRE(reports.size() == suite_names().size());
  for (const auto& r : reports) {
    if (r.suite == "jacobi") {
      CHECK(r.error.has_value());
      CHECK_FALSE(r.pass());
    } else {
      CHECK_MESSAGE(r.pass(), r.suite);
    }
  }
}

TEST_CASE("zero cases give empty passing reports") {
  SuiteConfig cfg;
  cfg.cases = 0;
  for (const auto& r : run_all(cfg, 1)) {
    CHECK(r.cases == 0);
    CHECK(r.pass());
    CHECK(to_json(r)["verdict"] == "PASS");
  }
}

TEST_CASE("determinism") {
  SuiteConfig cfg;
  cfg.cases = 20;
  cfg.seed = 99;
  const auto a = to_json(run_suite("jacobi", cfg)).dump();
  const auto b = to_json(run_suite("jacobi", cfg)).dump();
  CHECK(a == b);
  cfg.seed = 100;
  const Report c = run_suite("jacobi", cfg);
  CHECK(c.pass());
  CHECK(to_json(c).dump() != a);
}

TEST_CASE("failure payloads name their identity") {
  Report r;
  r.suite = "demo";
  r.failures.push_back({3, "[p,q] = -[q,p]", {{"p", "x"}}, "x", "y"});
  r.failed = 1;
  r.cases = 4;
  const auto j = to_json(r);
  CHECK(j["verdict"] == "FAIL");
  CHECK(j["failures"][0]["anchor"] == "[p,q] = -[q,p]");
  CHECK(j["failures"][0]["case"] == 3);
}
