#include <catch2/catch_amalgamated.hpp>

#include "modlab/theorems.hpp"

using namespace modlab;

TEST_CASE("corner rings of matrix rings") {
  auto m2 = ring_m2(2);
  // E11 corner of the full matrix ring is the base field
  Vec e{Int(1), Int(0), Int(0), Int(0)};
  RingHandle c = corner_ring(m2, e);
  CHECK(!validate_ring(*c).has_value());
  CHECK(c->order() == 2);

  // corner at the identity is the whole ring
  RingHandle full = corner_ring(m2, m2->one);
  CHECK(full->order() == 16);
}

TEST_CASE("the full suite passes with no vacuous checks", "[suite]") {
  RunConfig cfg;
  SuiteReport rep = run_suite(cfg);
  CHECK(rep.instance_count >= 30);
  for (const CheckResult& c : rep.checks) {
    INFO(c.id + " " + c.title + " violations: " + c.violations.dump());
    CHECK(c.violations.empty());
    CHECK(c.hypothesis_met >= 1);
    CHECK(!c.extra_vacuity);
  }
  CHECK(rep.passed());
}

TEST_CASE("restricting the suite to one check") {
  RunConfig cfg;
  SuiteReport rep = run_suite(cfg, {"T11"});
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].id == "T11");
  CHECK(rep.checks[0].passed());
}

TEST_CASE("fault injection makes the suite fail with replayable bundles", "[suite]") {
  RunConfig cfg;
  cfg.fault = Fault::SummandAlwaysYes;
  SuiteReport rep = run_suite(cfg, {"A0"});
  REQUIRE(rep.checks.size() == 1);
  const CheckResult& audit = rep.checks[0];
  REQUIRE(!audit.violations.empty());
  CHECK(!rep.passed());

  // every reported bundle re-evaluates to a genuine discrepancy under the
  // unfaulted direct computation
  RunConfig clean;
  for (const auto& bundle : audit.violations) CHECK(replay_summand_violation(bundle, clean));
}
