#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ellhelix/p1.hpp"

using namespace ellhelix;

TEST_CASE("section counts of line bundles on the projective line") {
  CHECK(h0_p1(3) == 4);
  CHECK(h0_p1(0) == 1);
  CHECK(h0_p1(-1) == 0);
  CHECK(h0_p1(-5) == 0);
}

TEST_CASE("the length-one case has exactly one candidate") {
  std::vector<SplitBundleCandidate> found = feasibility(1, 6);
  REQUIRE(found.size() == 1);
  CHECK(found[0].a == std::vector<long>{2});
  CHECK(found[0].t == 0);
  CHECK(found[0].str() == "a = (2), t = 0");
}

TEST_CASE("the candidate at length one is stable under the search bound") {
  for (long bound = 2; bound <= 10; ++bound) {
    std::vector<SplitBundleCandidate> found = feasibility(1, bound);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == SplitBundleCandidate{{2}, 0});
  }
}

TEST_CASE("no candidate survives past length one") {
  for (long n = 2; n <= 6; ++n) CHECK(feasibility(n, 3 * n + 2).empty());
  // enlarging the region does not create solutions
  CHECK(feasibility(2, 10).empty());
  CHECK(feasibility(4, 14).empty());
}

TEST_CASE("the search region must cover the twists the equations allow") {
  CHECK_THROWS_AS(feasibility(2, 3), std::domain_error);
  CHECK_THROWS_AS(feasibility(0, 6), std::domain_error);
  CHECK_THROWS_AS(feasibility(-1, 6), std::domain_error);
}

TEST_CASE("the contradiction certificate subtracts the two counts") {
  ContradictionCertificate c2 = contradiction_certificate(2);
  CHECK(c2.n == 2);
  CHECK(c2.forced_twists_at_least_n == 1);
  CHECK(c2.forced_t == 2);
  CHECK(c2.helix_total == 3);
  CHECK(c2.required_total == 4);
  CHECK(!c2.consistent);

  ContradictionCertificate c3 = contradiction_certificate(3);
  CHECK(c3.forced_t == 3);
  CHECK(c3.helix_total == 4);
  CHECK(c3.required_total == 6);
  CHECK(!c3.consistent);

  CHECK_THROWS_AS(contradiction_certificate(1), std::domain_error);
}

TEST_CASE("certificates render the two totals") {
  std::string text = contradiction_certificate(2).str();
  CHECK(text.find("3") != std::string::npos);
  CHECK(text.find("4") != std::string::npos);
}
