#include <doctest.h>

#include "motzeta/series.hpp"

using namespace motzeta;

namespace {

RationalSeries geometric(int nu, int N, int shift) {
  RationalSeries s(1);
  s.add_term({RationalMotive(LaurentMotive::L(-nu)), MultiIndex({shift}), {{nu, MultiIndex({N})}}});
  return s;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("expansion of a single factor") {
  const auto e = expand(geometric(1, 1, 1), 4);
  for (int k = 1; k <= 4; ++k) CHECK(e.coefficient(MultiIndex({k})) == RationalMotive(LaurentMotive::L(-k)));
  CHECK(e.coefficient(MultiIndex({0})).is_zero());
}

TEST_CASE("limit at infinity") {
  // L^-1 T / (1 - L^-1 T) -> -1 as T -> infinity.
  CHECK(-limit_at_infinity(geometric(1, 1, 1)) == RationalMotive(1));
  // Shift below the factor degree contributes nothing.
  CHECK(limit_at_infinity(geometric(1, 2, 1)).is_zero());
  CHECK_THROWS_AS(limit_at_infinity(geometric(1, 1, 2)), DomainError);
}

TEST_CASE("two-variable limit does not depend on the substitution") {
  RationalSeries s(2);
  s.add_term({RationalMotive(1), MultiIndex({1, 1}), {{1, MultiIndex({1, 0})}, {2, MultiIndex({0, 1})}}});
  CHECK(limit_at_infinity(s) == RationalMotive(LaurentMotive::L(3)));
  RationalSeries bad(2);
  bad.add_term({RationalMotive(1), MultiIndex({2, 0}), {{1, MultiIndex({1, 1})}}});
  CHECK_THROWS_AS(limit_at_infinity(bad, {1, 1}), DomainError);
}

TEST_CASE("arithmetic agrees with expansion") {
  const RationalSeries a = geometric(1, 1, 1);
  const RationalSeries b = geometric(2, 2, 0);
  const int order = 7;
  CHECK(expand(a + b, order) == expand(a, order) + expand(b, order));
  CHECK(expand(a * b, order) == expand(a, order) * expand(b, order));
  CHECK(series_equal(a.shifted(MultiIndex({2})), a * RationalSeries::monomial(1, 1, MultiIndex({2})), order));
}

TEST_CASE("negative shifts must cancel") {
  const RationalSeries s = geometric(1, 1, 0).shifted(MultiIndex({-1}));
  CHECK_THROWS_AS(expand(s, 3), DomainError);
}

TEST_CASE("print and parse round trip") {
  RationalSeries s(2);
  s.add_term({RationalMotive::parse("L^2 - 1"), MultiIndex({1, 0}), {{3, MultiIndex({2, 1})}}});
  s.add_term({RationalMotive(LaurentMotive(1), LaurentMotive::parse("L - 1")), MultiIndex({0, 2}), {}});
  const RationalSeries back = RationalSeries::parse(s.to_string(), 2);
  CHECK(series_equal(s, back, 6));
  CHECK(back.to_string() == s.to_string());
}

TEST_CASE("specialization") {
  const auto e = specialize(expand(geometric(1, 1, 1), 3), 2);
  CHECK(e.coefficient(MultiIndex({3})) == Rational(1, 8));
  CHECK(to_string(e) == "(1/2)*T + (1/4)*T^2 + (1/8)*T^3");
}

TEST_CASE("invalid factors are rejected") {
  RationalSeries s(1);
  CHECK_THROWS_AS(s.add_term({RationalMotive(1), MultiIndex({0}), {{0, MultiIndex({1})}}}), DomainError);
  CHECK_THROWS_AS(s.add_term({RationalMotive(1), MultiIndex({0}), {{1, MultiIndex({0})}}}), DomainError);
  CHECK_THROWS_AS(TruncatedSeries<Rational>(1, -1), DomainError);
}

}  // TEST_SUITE
