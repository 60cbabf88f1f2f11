#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cliquedyn/bounds.hpp"
#include "cliquedyn/errors.hpp"

using namespace cliquedyn;

TEST_CASE("binomials") {
  CHECK(binomial(14, 3) == 364);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(40, 20) == 137846528820LL);
}

TEST_CASE("triangle identity right-hand side") {
  CHECK(lorden_rhs(5, 2) == 0);
  CHECK(lorden_rhs(4, 3) == 4);
  CHECK(lorden_rhs(10, 3) == 30);
  CHECK(lorden_rhs(6, 3) == 2);
  CHECK(lorden_rhs(7, 2) == 7);
  CHECK_THROWS_AS(lorden_rhs(5, 1), std::logic_error);  // nk odd
  CHECK_THROWS_AS(lorden_rhs(4, 4), DomainError);
}

TEST_CASE("independent-triple lower bound") {
  CHECK(cnk_lower_bound(14, 3) == Rational(140));
  for (std::int64_t n = 1; n < 20; ++n) CHECK(cnk_lower_bound(n, 0) == Rational(binomial(n, 3)));
  // 20 - 18 - 6: exact evaluation of the formula at (6, 3).
  CHECK(cnk_lower_bound(6, 3) == Rational(-4));
  CHECK(cnk_lower_bound(13, 3) == Rational(195, 2));
  CHECK(cnk_lower_bound_ceil(13, 3) == 98);
  CHECK(cnk_lower_bound_ceil(6, 3) == -4);
}

TEST_CASE("per-vertex cap") {
  CHECK(tnk_upper_bound(14, 3) == 25);
  CHECK(tnk_upper_bound(12, 3) == 19);
  CHECK(tnk_upper_bound(8, 1) == 0);
  for (std::int64_t k = 1; k <= 10; ++k)
    CHECK(tnk_upper_bound(4 * k, k) == binomial(k, 2) * 2 * k + binomial(k, 3));
  CHECK_THROWS_AS(tnk_upper_bound(11, 3), DomainError);
}

TEST_CASE("quadratic a(n,k)") {
  CHECK(a_poly(14, 3) == 10);
  for (std::int64_t k = 1; k <= 30; ++k) CHECK(a_poly(3 * k, k) == -2 * k * k + k);
  // Integer roots 3k +- sqrt(2k^2 - k) whenever 2k^2 - k is a square.
  CHECK(a_poly(4, 1) == 0);
  CHECK(a_poly(2, 1) == 0);
  CHECK(a_poly(110, 25) == 0);
  CHECK(a_poly(40, 25) == 0);
}

TEST_CASE("threshold N(k)") {
  CHECK(helly_threshold(1) == 5);
  CHECK(helly_threshold(2) == 9);
  CHECK(helly_threshold(3) == 13);
  std::int64_t prev = 0;
  for (std::int64_t k = 1; k <= 20; ++k) {
    const std::int64_t n = helly_threshold(k);
    CHECK(a_poly(n, k) > 0);
    CHECK(a_poly(n - 1, k) <= 0);
    CHECK(n > prev);
    CHECK(n >= 4 * k);
    prev = n;
  }
  for (std::int64_t k = 1; k <= 2000; ++k) {
    const double root = 3.0 * k + std::sqrt(2.0 * k * k - k);
    CHECK(helly_threshold(k) == static_cast<std::int64_t>(std::floor(root)) + 1);
  }
  CHECK_THROWS_AS(helly_threshold(0), DomainError);
}

TEST_CASE("counting contradiction matches the sign of a(n,k)") {
  for (std::int64_t k = 1; k <= 12; ++k)
    for (std::int64_t n = 4 * k; n <= 8 * k + 10; ++n) {
      BoundReport r = bound_report(n, k);
      REQUIRE(r.tnk);
      CHECK(r.incidence_lo == Rational(k) * r.cnk);
      CHECK(*r.incidence_hi == n * *r.tnk);
      CHECK(r.contradiction() == (a_poly(n, k) > 0 && n > 3 * k));
    }
  BoundReport small = bound_report(6, 3);
  CHECK_FALSE(small.tnk);
  CHECK_FALSE(small.contradiction());
  CHECK_THROWS_AS(bound_report(3, 3), DomainError);
  CHECK_THROWS_AS(bound_report(5, 0), DomainError);
}
