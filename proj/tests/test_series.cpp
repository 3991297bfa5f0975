#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "loopq/series.hpp"
#include "test_support.hpp"

using loopq::GradedSeries;
using loopq::Int;
using testsupport::poly;
using testsupport::to_series;

namespace {

GradedSeries from_terms(std::vector<std::pair<int, long long>> terms, int n) {
  return to_series(poly(std::move(terms), n));
}

}  // namespace

TEST_CASE("add is degreewise") {
  const int n = 8;
  GradedSeries a = from_terms({{0, 1}, {1, 1}}, n);
  GradedSeries b = from_terms({{0, 1}, {2, 1}}, n);
  CHECK(add(a, b) == from_terms({{0, 2}, {1, 1}, {2, 1}}, n));
  CHECK(add(a, GradedSeries::zero(n)) == a);

  GradedSeries s3 = GradedSeries::monomial(n, 3);
  GradedSeries s4 = GradedSeries::monomial(n, 4);
  CHECK(add(s3, s4) == from_terms({{3, 1}, {4, 1}}, n));
}

TEST_CASE("mul is the truncated Cauchy product") {
  const int n = 10;
  GradedSeries one_plus_t = from_terms({{0, 1}, {1, 1}}, n);
  CHECK(mul(one_plus_t, one_plus_t) == from_terms({{0, 1}, {1, 2}, {2, 1}}, n));

  GradedSeries a = from_terms({{0, 1}, {3, 2}, {7, -5}}, n);
  CHECK(mul(a, GradedSeries::one(n)) == a);
}

TEST_CASE("closed-form product expands to the partition count in parts {2,3}") {
  const int n = 10;
  /* 1/(1-t^2) * (1+t^3)/(1-t^6): expand both closed forms by long division
   * and multiply, all in the reference implementation. */
  using testsupport::longdiv;
  using testsupport::Poly;
  Poly lhs = longdiv(poly({{0, 1}}, n), poly({{0, 1}, {2, -1}}, n));
  Poly rhs = longdiv(poly({{0, 1}, {3, 1}}, n), poly({{0, 1}, {6, -1}}, n));
  Poly expect = testsupport::mul(lhs, rhs);

  GradedSeries got = mul(invert(from_terms({{0, 1}, {2, -1}}, n)),
                         mul(from_terms({{0, 1}, {3, 1}}, n),
                             invert(from_terms({{0, 1}, {6, -1}}, n))));
  CHECK(got == to_series(expect));
  CHECK(got == from_terms({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 2},
                           {7, 1}, {8, 2}, {9, 2}, {10, 2}},
                          n));
  for (int k = 0; k <= n; ++k)
    CHECK(got[k] == Int(testsupport::count_partitions(k, {2, 3})));
}

TEST_CASE("invert: geometric series") {
  const int n = 12;
  GradedSeries g = invert(from_terms({{0, 1}, {1, -1}}, n));
  for (int k = 0; k <= n; ++k) CHECK(g[k] == 1);

  GradedSeries g2 = invert(from_terms({{0, 1}, {2, -2}}, n));
  for (int k = 0; k <= n; ++k) {
    if (k % 2 == 1)
      CHECK(g2[k] == 0);
    else
      CHECK(g2[k] == Int(1) << (k / 2));
  }
}

TEST_CASE("invert agrees with brute-force long division") {
  const int n = 5;
  testsupport::Poly denom = poly({{0, 1}, {2, -3}, {3, -3}, {5, 1}}, n);
  testsupport::Poly expect = testsupport::longdiv(poly({{0, 1}}, n), denom);
  CHECK(invert(to_series(denom)) == to_series(expect));
  CHECK(invert(to_series(denom)) ==
        from_terms({{0, 1}, {2, 3}, {3, 3}, {4, 9}, {5, 17}}, n));
}

TEST_CASE("pow") {
  const int n = 8;
  GradedSeries one_plus_t = from_terms({{0, 1}, {1, 1}}, n);
  CHECK(pow(one_plus_t, 2) == from_terms({{0, 1}, {1, 2}, {2, 1}}, n));
  GradedSeries arbitrary = from_terms({{0, 7}, {2, -1}}, n);
  CHECK(pow(arbitrary, 0) == GradedSeries::one(n));
  CHECK(pow(from_terms({{0, 1}, {2, -1}}, n), 3) ==
        from_terms({{0, 1}, {2, -3}, {4, 3}, {6, -1}}, n));
}

TEST_CASE("shift_down") {
  const int n = 6;
  CHECK(shift_down(from_terms({{3, 1}, {4, 1}}, n)) ==
        from_terms({{2, 1}, {3, 1}}, n));
  CHECK(shift_down(GradedSeries::zero(n)) == GradedSeries::zero(n));
  CHECK(shift_down(from_terms({{3, 2}, {4, 2}}, n)) ==
        from_terms({{2, 2}, {3, 2}}, n));
}

TEST_CASE("series errors") {
  const int n = 4;
  CHECK_THROWS_AS(add(GradedSeries::one(3), GradedSeries::one(4)),
                  loopq::series_error);
  CHECK_THROWS_AS(mul(GradedSeries::one(3), GradedSeries::one(4)),
                  loopq::series_error);
  CHECK_THROWS_AS(invert(from_terms({{0, 2}}, n)), loopq::series_error);
  CHECK_THROWS_AS(invert(GradedSeries::zero(n)), loopq::series_error);
  CHECK_THROWS_AS(shift_down(GradedSeries::one(n)), loopq::series_error);
  CHECK_THROWS_AS(pow(GradedSeries::one(n), -1), loopq::series_error);
  CHECK_THROWS_AS(GradedSeries(-1), loopq::series_error);
  CHECK_THROWS_AS(truncated(GradedSeries::one(4), 6), loopq::series_error);
}

TEST_CASE("ring identities on random series") {
  std::mt19937 rng(20240811);
  const int n = 14;
  for (int iter = 0; iter < 200; ++iter) {
    GradedSeries a = testsupport::random_series(rng, n, false);
    GradedSeries b = testsupport::random_series(rng, n, false);
    GradedSeries c = testsupport::random_series(rng, n, false);
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
  }
}

TEST_CASE("units invert exactly") {
  std::mt19937 rng(7);
  const int n = 16;
  for (int iter = 0; iter < 100; ++iter) {
    GradedSeries a = testsupport::random_series(rng, n, true);
    CHECK(mul(a, invert(a)) == GradedSeries::one(n));
    CHECK(invert(invert(a)) == a);
  }
}

TEST_CASE("shift pair and monomial multiplication") {
  std::mt19937 rng(99);
  const int n = 12;
  for (int iter = 0; iter < 100; ++iter) {
    GradedSeries a = testsupport::random_series(rng, n, false);
    CHECK(shift_down(shift_up(a)) ==
          add(a, GradedSeries::monomial(n, n, -a[n])));  // top degree lost
    GradedSeries t = GradedSeries::monomial(n, 1);
    CHECK(shift_up(a) == mul(a, t));
    GradedSeries low = a;
    low.set(n, Int(0));
    CHECK(shift_down(shift_up(low)) == low);
  }
}

TEST_CASE("truncation commutes with arithmetic") {
  std::mt19937 rng(12345);
  const int n = 15, m = 7;
  for (int iter = 0; iter < 100; ++iter) {
    GradedSeries a = testsupport::random_series(rng, n, true);
    GradedSeries b = testsupport::random_series(rng, n, false);
    CHECK(truncated(add(a, b), m) == add(truncated(a, m), truncated(b, m)));
    CHECK(truncated(mul(a, b), m) == mul(truncated(a, m), truncated(b, m)));
    CHECK(truncated(invert(a), m) == invert(truncated(a, m)));
  }
}

TEST_CASE("text rendering") {
  const int n = 6;
  CHECK(loopq::to_text(from_terms({{0, 1}, {2, -3}, {3, -3}, {5, 1}}, n)) ==
        "1 - 3*t^2 - 3*t^3 + t^5");
  CHECK(loopq::to_text(GradedSeries::zero(n)) == "0");
  CHECK(loopq::to_text(from_terms({{0, 2}, {1, 1}, {2, 1}}, n)) ==
        "2 + t + t^2");
  CHECK(loopq::to_text(from_terms({{2, -1}}, n)) == "-t^2");
  CHECK(loopq::to_text(from_terms({{1, 5}}, n)) == "5*t");

  auto strs = loopq::coefficient_strings(from_terms({{0, 1}, {2, 3}}, 3));
  CHECK(strs == std::vector<std::string>{"1", "0", "3", "0"});
}

TEST_CASE("top_degree and predicates") {
  const int n = 5;
  CHECK(loopq::top_degree(GradedSeries::zero(n)) == -1);
  CHECK(loopq::top_degree(from_terms({{3, 2}}, n)) == 3);
  CHECK(loopq::is_zero(GradedSeries::zero(n)));
  CHECK_FALSE(loopq::is_zero(GradedSeries::one(n)));
  CHECK(loopq::nonnegative(from_terms({{1, 2}}, n)));
  CHECK_FALSE(loopq::nonnegative(from_terms({{1, -2}}, n)));
}
