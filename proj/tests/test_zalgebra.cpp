#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "ellhelix/canonical.hpp"
#include "ellhelix/errors.hpp"
#include "ellhelix/helix.hpp"
#include "ellhelix/presentation.hpp"
#include "ellhelix/series.hpp"

using namespace ellhelix;

namespace {

GradedDims dims_of(std::initializer_list<long> values) {
  GradedDims out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<std::vector<Rational>> matrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (long v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  return m;
}

const CheckResult& find_check(const VerificationReport& report,
                              const std::string& name) {
  for (const auto& c : report.checks)
    if (c.check == name) return c;
  throw std::logic_error("no check named " + name);
}

}  // namespace

TEST_CASE("dimension tables store only the positively graded window") {
  DimensionTable t(-1, 3, 2);
  CHECK(t.in_domain(-1, 1));
  CHECK(t.in_domain(3, 3));
  CHECK(!t.in_domain(0, 3));   // degree above maxdeg
  CHECK(!t.in_domain(1, 0));   // below the diagonal
  CHECK(!t.in_domain(-2, 0));  // outside the window
  CHECK(t.dim(0, 1) == 0);     // unset cells read as dimension 0
  t.set(0, 1, 7);
  CHECK(t.dim(0, 1) == 7);
  CHECK_THROWS_AS(t.dim(0, 3), std::out_of_range);
  CHECK_THROWS_AS(t.set(1, 0, Integer(1)), std::out_of_range);
  CHECK_THROWS_AS(t.set(0, 1, Integer(-2)), std::domain_error);
  CHECK_THROWS_AS(DimensionTable(0, 1, -1), std::domain_error);
}

TEST_CASE("an inverted window is the empty table") {
  DimensionTable empty(1, 0, 3);
  CHECK(!empty.in_domain(0, 0));
  CHECK(!empty.in_domain(1, 1));
  CHECK_THROWS_AS(empty.dim(1, 1), std::out_of_range);
}

TEST_CASE("the quadratic relation pairs x_i with x_{d+1-i} through sigma") {
  QuadraticPresentation id3(3);
  // identity sigma: b = x1 x3 + x2 x2 + x3 x1
  for (long i = 0; i < 3; ++i)
    for (long k = 0; k < 3; ++k)
      CHECK(id3.relation_coeff(i, k) == (k == 2 - i ? Rational(1) : Rational(0)));

  // sigma swapping the two generators: b = x1 sigma(x2) + x2 sigma(x1)
  //                                      = x1 x1 + x2 x2
  QuadraticPresentation swapped(2, matrix({{0, 1}, {1, 0}}));
  CHECK(swapped.relation_coeff(0, 0) == 1);
  CHECK(swapped.relation_coeff(0, 1) == 0);
  CHECK(swapped.relation_coeff(1, 0) == 0);
  CHECK(swapped.relation_coeff(1, 1) == 1);
}

TEST_CASE("presentations validate their generator count and sigma") {
  CHECK_THROWS_AS(QuadraticPresentation(0), std::domain_error);
  CHECK_THROWS_AS(QuadraticPresentation(2, matrix({{1, 0}})), std::domain_error);
  CHECK_THROWS_AS(QuadraticPresentation(2, matrix({{1, 0}, {1}})), std::domain_error);
  CHECK_THROWS_AS(QuadraticPresentation(2, matrix({{1, 1}, {1, 1}})),
                  std::domain_error);
}

TEST_CASE("presentation dimensions match the frozen tables in both modes") {
  QuadraticPresentation p2(2), p3(3), p1(1);
  for (RankMode mode : {RankMode::Modular, RankMode::Exact}) {
    CHECK(presentation_dims(p2, 4, mode) == dims_of({1, 2, 3, 4, 5}));
    CHECK(presentation_dims(p3, 5, mode) == dims_of({1, 3, 8, 21, 55, 144}));
    CHECK(presentation_dims(p1, 3, mode) == dims_of({1, 1, 0, 0}));
  }
}

TEST_CASE("presentation dimensions handle the degenerate degrees") {
  QuadraticPresentation p3(3);
  CHECK(presentation_dims(p3, 0) == dims_of({1}));
  CHECK(presentation_dims(p3, 1) == dims_of({1, 3}));
  CHECK_THROWS_AS(presentation_dims(p3, -1), std::domain_error);
}

TEST_CASE("presentation engine reproduces the series engine") {
  for (long d = 2; d <= 3; ++d) {
    QuadraticPresentation pres(d);
    GradedDims via_rank = presentation_dims(pres, 7);
    std::vector<Rational> via_series = snc_hilbert(d, 7);
    REQUIRE(via_rank.size() == via_series.size());
    for (std::size_t n = 0; n < via_rank.size(); ++n)
      CHECK(via_rank[n] == via_series[n].to_integer());
  }
}

TEST_CASE("the graded dimensions do not depend on the change of generators") {
  QuadraticPresentation id2(2), id3(3);
  std::vector<QuadraticPresentation> variants2 = {
      QuadraticPresentation(2, matrix({{0, 1}, {1, 0}})),
      QuadraticPresentation(2, matrix({{1, 1}, {0, 1}})),
  };
  std::vector<QuadraticPresentation> variants3 = {
      QuadraticPresentation(3, matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})),
      QuadraticPresentation(3, matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})),
  };
  GradedDims base2 = presentation_dims(id2, 5);
  for (const auto& v : variants2) CHECK(presentation_dims(v, 5) == base2);
  GradedDims base3 = presentation_dims(id3, 5);
  for (const auto& v : variants3) CHECK(presentation_dims(v, 5) == base3);
}

TEST_CASE("modular and exact ranks give the same dimensions") {
  for (long d = 1; d <= 3; ++d) {
    QuadraticPresentation pres(d);
    CHECK(presentation_dims(pres, 6, RankMode::Modular) ==
          presentation_dims(pres, 6, RankMode::Exact));
  }
}

TEST_CASE("hat collapse of the orbit table equals the orbit series") {
  for (long d = 2; d <= 5; ++d) {
    HelixWindow window = generate_helix(d, -13, 0);
    GradedDims hat = hat_dims(orbit_dim_table(d, window, 6));
    std::vector<Rational> series = orbit_hilbert(d, 6);
    REQUIRE(hat.size() == series.size());
    for (std::size_t n = 0; n < hat.size(); ++n)
      CHECK(hat[n] == series[n].to_integer());
  }
}

TEST_CASE("hat collapse of the frozen d = 3 table") {
  HelixWindow window = generate_helix(3, -13, 0);
  CHECK(hat_dims(orbit_dim_table(3, window, 4)) == dims_of({1, 3, 9, 24, 63}));
  CHECK(hat_dims(orbit_dim_table(3, window, 0)) == dims_of({1}));
}

TEST_CASE("hat collapse names the first non-periodic cell") {
  DimensionTable t(0, 3, 2);
  for (long i = 0; i <= 3; ++i) t.set(i, i, 1);
  t.set(0, 1, 2);
  t.set(1, 2, 3);  // breaks dims(0,1) = dims(1,2)
  t.set(2, 3, 2);
  try {
    hat_dims(t);
    FAIL("expected a periodicity error");
  } catch (const PeriodicityError& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
  }
  CHECK(hat_dims(DimensionTable(1, 0, 2)).empty());
}

TEST_CASE("connectedness means one-dimensional diagonal components") {
  HelixWindow window = generate_helix(3, -8, 0);
  CHECK(connected_check(orbit_dim_table(3, window, 4)));

  DimensionTable bad(0, 2, 1);
  bad.set(0, 0, 2);
  bad.set(1, 1, 1);
  bad.set(2, 2, 1);
  CHECK(!connected_check(bad));

  CHECK(connected_check(DimensionTable(1, 0, 0)));  // vacuous
}

TEST_CASE("canonical map checks pass on the frozen configurations") {
  for (auto [d, maxdeg] : std::vector<std::pair<long, long>>{{3, 8}, {2, 8}, {5, 6}}) {
    VerificationReport report = verify_canonical_map(d, maxdeg);
    CHECK(report.all_pass());
    CHECK(find_check(report, "degree-2 codimension is 1").actual == "1");
  }
}

TEST_CASE("the degree-2 cokernel is one-dimensional for every d") {
  for (long d = 2; d <= 6; ++d) {
    VerificationReport report = verify_canonical_map(d, 4);
    const CheckResult& codim = find_check(report, "degree-2 codimension is 1");
    CHECK(codim.pass);
    CHECK(codim.actual == "1");
  }
}

TEST_CASE("canonical map verification rejects bad parameters") {
  CHECK_THROWS_AS(verify_canonical_map(1, 8), std::domain_error);
  CHECK_THROWS_AS(verify_canonical_map(3, 2), std::domain_error);
}
