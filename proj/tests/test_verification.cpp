#include <doctest.h>

#include "pfour/verification.hpp"

using namespace pfour;

TEST_CASE("property suite at p = 3") {
  const VerificationReport r = run_verification(3, 0);
  CHECK(r.ok());
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
    CHECK(c.cases > 0);
  }
}

TEST_CASE("property suite at p = 5") {
  const VerificationReport r = run_verification(5, 1);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("property suite is deterministic") {
  const VerificationReport a = run_verification(3, 42);
  const VerificationReport b = run_verification(3, 42);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].cases == b.checks[i].cases);
  }
  CHECK_THROWS_AS(run_verification(7, 0), std::invalid_argument);
}

TEST_CASE("power-norm check reports a failing datum") {
  // A candidate whose recorded v disagrees with the law fails loudly.
  const ClassifyConfig cfg = make_config(3);
  CandidateType c = enumerate_candidates(cfg).front();
  CHECK(check_power_norm(c).passed);
  std::mt19937_64 rng(3);
  const MixedModulusMatrix phi = random_automorphism(c.ext.profile, rng);
  CHECK(phi.is_automorphism());
}
