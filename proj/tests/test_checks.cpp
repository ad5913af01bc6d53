#include "doctest.h"

#include "qgrass/checks.hpp"
#include "qgrass/error.hpp"

using namespace qgrass;

TEST_CASE("named checks pass where they apply") {
  for (Ambient a : {Ambient{2, 4}, Ambient{2, 5}, Ambient{3, 5}}) {
    for (const auto& name : lemma_names()) {
      if (!check_precondition(name, a).empty()) {
        CHECK_THROWS_AS(run_named_check(name, a, 4), PreconditionError);
        continue;
      }
      CheckResult r = run_named_check(name, a, 4, ExecPolicy::serial);
      INFO(name, " ", a.k, ",", a.n, ": ", r.detail);
      CHECK(r.pass);
      CHECK(!r.skipped);
    }
  }
}

TEST_CASE("preconditions") {
  CHECK(check_precondition("hh1", {1, 4}) != "");
  CHECK(check_precondition("hh1", {2, 4}) == "");
  CHECK(check_precondition("restriction", {3, 5}) != "");
  CHECK(check_precondition("minor-commutation", {2, 4}) != "");
  CHECK(check_precondition("minor-commutation", {2, 5}) == "");
  CHECK_THROWS_AS(check_precondition("nonsense", {2, 4}), DomainError);
}

TEST_CASE("larger ambients") {
  CheckResult r = checks::hh1_dimension({2, 6}, {0}, 2);
  CHECK(r.pass);
  CHECK(r.detail.find("0:6") != std::string::npos);
  CHECK(checks::nonsquare_decomposition({2, 4}).pass);
  CHECK(checks::psi_agreement({2, 4}, 2).pass);
}
