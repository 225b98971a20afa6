#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ellhelix/errors.hpp"
#include "ellhelix/helix.hpp"
#include "ellhelix/series.hpp"

using namespace ellhelix;

TEST_CASE("chern pairs require positive rank") {
  CHECK(ChernPair(1, 0).str() == "(1, 0)");
  CHECK(ChernPair(5, -9).str() == "(5, -9)");
  CHECK_THROWS_AS(ChernPair(0, 3), std::domain_error);
  CHECK_THROWS_AS(ChernPair(-2, 3), std::domain_error);
}

TEST_CASE("euler pairing is the rank-degree cross product") {
  CHECK(euler_pairing({1, 0}, {1, 3}) == 3);
  CHECK(euler_pairing({1, 0}, {1, 0}) == 0);
  CHECK(euler_pairing({2, 9}, {5, 24}) == 3);
  // antisymmetry on a sample
  CHECK(euler_pairing({3, 7}, {4, -1}) == -euler_pairing({4, -1}, {3, 7}));
}

TEST_CASE("slope reduces degree over rank") {
  CHECK(slope({2, 9}) == Rational(9, 2));
  CHECK(slope({1, 0}) == Rational(0));
  CHECK(slope({5, -9}) == Rational(-9, 5));
  CHECK(slope({4, 6}) == Rational(3, 2));
}

TEST_CASE("right mutation follows the Euler sequence arithmetic") {
  CHECK(mutate_right({1, 0}, {1, 3}) == ChernPair(2, 9));
  CHECK(mutate_right({1, 3}, {2, 9}) == ChernPair(5, 24));
  CHECK(mutate_right({1, 0}, {1, 2}) == ChernPair(1, 4));
}

TEST_CASE("left mutation completes the pair leftward") {
  CHECK(mutate_left({1, 0}, {1, 3}) == ChernPair(2, -3));
  CHECK(mutate_left({2, -3}, {1, 0}) == ChernPair(5, -9));
  CHECK(mutate_left({1, 0}, {1, 2}) == ChernPair(1, -2));
  // the new member pairs with its right neighbor exactly as before
  ChernPair left = mutate_left({1, 3}, {2, 9});
  CHECK(euler_pairing(left, {1, 3}) == euler_pairing({1, 3}, {2, 9}));
}

TEST_CASE("mutation refuses pairings below two") {
  // classes of O(p) and O_p: pairing 1, the formal result would have rank 0
  CHECK_THROWS_AS(mutate_right({1, 0}, {1, 1}), MutationUndefinedError);
  CHECK_THROWS_AS(mutate_right({1, 0}, {1, 0}), MutationUndefinedError);
  CHECK_THROWS_AS(mutate_left({1, 0}, {1, 1}), MutationUndefinedError);
  CHECK_THROWS_AS(mutate_right({1, 3}, {1, 0}), MutationUndefinedError);
}

TEST_CASE("helix windows match the frozen tables") {
  HelixWindow w3 = generate_helix(3, -3, 2);
  const std::vector<ChernPair> expected3 = {{5, -9}, {2, -3}, {1, 0},
                                            {1, 3},  {2, 9},  {5, 24}};
  CHECK(w3.min_index() == -3);
  CHECK(w3.max_index() == 2);
  CHECK(w3.size() == 6);
  for (long m = -3; m <= 2; ++m) CHECK(w3.at(m) == expected3[m + 3]);

  // at d = 2 every member is a line bundle: degree 2(m + 1) at index m
  HelixWindow w2 = generate_helix(2, -2, 2);
  const std::vector<ChernPair> expected2 = {
      {1, -2}, {1, 0}, {1, 2}, {1, 4}, {1, 6}};
  for (long m = -2; m <= 2; ++m) CHECK(w2.at(m) == expected2[m + 2]);

  HelixWindow w4 = generate_helix(4, -1, 1);
  CHECK(w4.at(-1) == ChernPair(1, 0));
  CHECK(w4.at(0) == ChernPair(1, 4));
  CHECK(w4.at(1) == ChernPair(3, 16));
}

TEST_CASE("helix generation validates its region and d") {
  CHECK_THROWS_AS(generate_helix(1, -3, 2), std::domain_error);
  CHECK_THROWS_AS(generate_helix(3, 0, 2), std::domain_error);
  CHECK_THROWS_AS(generate_helix(3, -3, -1), std::domain_error);
}

TEST_CASE("window accessors and bounds") {
  HelixWindow w = generate_helix(3, -4, 3);
  CHECK(w.d() == 3);
  CHECK(w.contains(-4));
  CHECK(w.contains(3));
  CHECK(!w.contains(4));
  CHECK_THROWS_AS(w.at(4), std::out_of_range);
  CHECK_THROWS_AS(w.at(-5), std::out_of_range);
}

TEST_CASE("window construction enforces the helix invariants") {
  // wrong pairing: (1,0),(1,2) paired under d = 3
  CHECK_THROWS_AS(HelixWindow(-1, {{1, 0}, {1, 2}}, 3), std::domain_error);
  // negative pairing, equivalently decreasing slopes
  CHECK_THROWS_AS(HelixWindow(5, {{1, 4}, {2, 5}}, 3), std::domain_error);
  // seed values are pinned when their indices are covered
  CHECK_THROWS_AS(HelixWindow(-1, {{1, 1}, {1, 4}}, 3), std::domain_error);
  CHECK_THROWS_AS(HelixWindow(0, {{1, 2}}, 3), std::domain_error);
  // away from the seed indices any consistent pair is fine
  HelixWindow shifted(1, {{2, 9}, {5, 24}}, 3);
  CHECK(shifted.at(2) == ChernPair(5, 24));
}

TEST_CASE("pairing is conserved and slopes increase by d over the rank product") {
  for (long d = 2; d <= 6; ++d) {
    HelixWindow w = generate_helix(d, -30, 30);
    for (long m = -30; m < 30; ++m) {
      const ChernPair& cur = w.at(m);
      const ChernPair& next = w.at(m + 1);
      CHECK(euler_pairing(cur, next) == d);
      CHECK(slope(next) - slope(cur) == Rational(Integer(d), cur.rank * next.rank));
      CHECK(slope(next) > slope(cur));
    }
  }
}

TEST_CASE("leftward window mirrors the rightward window of the reflected seeds") {
  for (long d = 2; d <= 6; ++d) {
    // leftward from (1,0),(1,d)
    ChernPair l_prev(1, Integer(d)), l_cur(1, 0);
    // rightward from (1,-d),(1,0)
    ChernPair r_prev(1, -Integer(d)), r_cur(1, 0);
    for (int step = 0; step < 50; ++step) {
      ChernPair l_next = mutate_left(l_cur, l_prev);
      ChernPair r_next = mutate_right(r_prev, r_cur);
      CHECK(l_next.rank == r_next.rank);
      CHECK(l_next.degree == -r_next.degree);
      l_prev = l_cur;
      l_cur = l_next;
      r_prev = r_cur;
      r_cur = r_next;
    }
  }
}

TEST_CASE("limit slope surd is exact and matches the defining expression") {
  for (long d = 3; d <= 12; ++d) {
    LimitSlope ls = limit_slope(d);
    CHECK(ls.radicand == Integer(d) * d - 4);
    // (p + q sqrt(D)) (d - 2 + sqrt(D)) = -2 d r exactly:
    // surd coefficient p + q (d - 2) vanishes, rational part is -2 d r
    CHECK(ls.p + ls.q * (d - 2) == 0);
    CHECK(ls.p * (d - 2) + ls.q * ls.radicand == Integer(-2) * d * ls.r);
    CHECK(ls.r > 0);
    double direct = -2.0 * d / (d - 2 + std::sqrt(double(d) * d - 4));
    CHECK(std::abs(ls.value - direct) < 1e-12);
  }
}

TEST_CASE("limit slope matches the frozen decimals and rejects d = 2") {
  CHECK(std::abs(limit_slope(3).value - (-1.854102)) < 1e-6);
  CHECK(std::abs(limit_slope(4).value - (-1.464102)) < 1e-6);
  CHECK(std::abs(limit_slope(3).value - (-6.0 / (1.0 + std::sqrt(5.0)))) < 1e-12);
  CHECK_THROWS_AS(limit_slope(2), std::domain_error);
  CHECK_THROWS_AS(limit_slope(0), std::domain_error);
}

TEST_CASE("slopes descend toward the limit as the index goes left") {
  for (long d = 3; d <= 6; ++d) {
    HelixWindow w = generate_helix(d, -40, 0);
    double theta = limit_slope(d).value;
    CHECK(std::abs(slope(w.at(-40)).to_double() - theta) < 1e-6);
    // exact strict descent; the gap at index -40 is far below double precision
    for (long m = -39; m <= 0; ++m) CHECK(slope(w.at(m - 1)) < slope(w.at(m)));
    // exact from-above test: with theta = (p + q sqrt(rad))/r, r > 0 and q < 0,
    // s > theta is p - s r < -q sqrt(rad), i.e. gap <= 0 or gap^2 < q^2 rad
    LimitSlope surd = limit_slope(d);
    for (long m = -40; m <= 0; ++m) {
      Rational gap = Rational(surd.p) - slope(w.at(m)) * Rational(surd.r);
      bool above = gap <= Rational(0) ||
                   gap * gap < Rational(Integer(surd.q * surd.q * surd.radicand));
      CHECK(above);
    }
  }
}

TEST_CASE("hom dimensions follow the diagonal, vanishing, and pairing rules") {
  HelixWindow w = generate_helix(3, -8, 0);
  for (long i = 0; i <= 4; ++i) {
    CHECK(hom_dim(w, i, i) == 1);
    CHECK(hom_dim(w, i + 1, i) == 0);
    CHECK(hom_dim(w, i, i + 1) == 3);
    CHECK(hom_dim(w, i, i + 2) == 9);
    CHECK(hom_dim(w, i, i + 3) == 24);
  }
  CHECK_THROWS_AS(hom_dim(w, 0, 9), std::out_of_range);
  CHECK_THROWS_AS(hom_dim(w, -1, 0), std::out_of_range);
}

TEST_CASE("orbit dimension tables match the Hilbert rows") {
  HelixWindow w3 = generate_helix(3, -12, 0);
  DimensionTable t3 = orbit_dim_table(3, w3, 3);
  for (long i = 0; i <= 9; ++i) {
    CHECK(t3.dim(i, i) == 1);
    CHECK(t3.dim(i, i + 1) == 3);
    CHECK(t3.dim(i, i + 2) == 9);
    CHECK(t3.dim(i, i + 3) == 24);
  }

  HelixWindow w2 = generate_helix(2, -12, 0);
  DimensionTable t2 = orbit_dim_table(2, w2, 4);
  const long row2[] = {1, 2, 4, 6, 8};
  for (long n = 0; n <= 4; ++n) CHECK(t2.dim(0, n) == row2[n]);

  DimensionTable diag = orbit_dim_table(3, w3, 0);
  for (long i = diag.lo(); i <= diag.hi(); ++i) CHECK(diag.dim(i, i) == 1);
}

TEST_CASE("orbit tables reject mismatched d and short windows") {
  HelixWindow w = generate_helix(3, -4, 0);
  CHECK_THROWS_AS(orbit_dim_table(2, w, 3), std::domain_error);
  CHECK_THROWS_AS(orbit_dim_table(3, w, 9), std::out_of_range);
}

TEST_CASE("table rows agree with the series engine across degrees") {
  for (long d = 2; d <= 5; ++d) {
    HelixWindow w = generate_helix(d, -13, 0);
    DimensionTable t = orbit_dim_table(d, w, 6);
    std::vector<Rational> b = orbit_hilbert(d, 6);
    for (long n = 0; n <= 6; ++n) CHECK(t.dim(2, 2 + n) == b[n].to_integer());
  }
}
