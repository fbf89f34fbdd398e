#include <doctest.h>

#include "motzeta/laurent.hpp"
#include "motzeta/motive_classes.hpp"
#include "motzeta/series.hpp"

using namespace motzeta;

TEST_SUITE("motive-ring") {

TEST_CASE("laurent arithmetic and printing") {
  const LaurentMotive L = LaurentMotive::L();
  const LaurentMotive a = L * L - L;
  CHECK(a.to_string() == "L^2 - L");
  CHECK(LaurentMotive::parse("L^2 - L") == a);
  CHECK((a - a).is_zero());
  CHECK((L.pow(3) * LaurentMotive::L(-3)) == LaurentMotive(1));
  CHECK(LaurentMotive::parse("1 + L^-2").to_string() == "1 + L^-2");
  CHECK(LaurentMotive::parse("-5*L^2").coefficient(2) == -5);
  CHECK(a.specialize(3) == 6);
  CHECK(LaurentMotive::L(-2).specialize(3) == Rational(1, 9));
}

TEST_CASE("exact division") {
  const LaurentMotive L = LaurentMotive::L();
  const LaurentMotive p = (L - 1) * (L + 1) * LaurentMotive::L(-4);
  auto q = p.divide_exact(L - 1);
  REQUIRE(q);
  CHECK(*q == (L + 1) * LaurentMotive::L(-4));
  CHECK_FALSE((L + 2).divide_exact(L - 1));
}

TEST_CASE("rational motives compare by cross multiplication") {
  const LaurentMotive L = LaurentMotive::L();
  const RationalMotive a(L * L - 1, L - 1);
  CHECK(a == RationalMotive(L + 1));
  CHECK(RationalMotive(1, L - 1) + RationalMotive(L - 2, L - 1) == RationalMotive(1));
  CHECK(RationalMotive::parse(a.to_string()) == a);
  CHECK(RationalMotive(1, L - 1).specialize(3) == Rational(1, 2));
  CHECK_THROWS_AS(RationalMotive(1, L - 1).specialize(1), DomainError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(LaurentMotive::parse("L^"), ParseError);
  CHECK_THROWS_AS(LaurentMotive::parse("L + * 2"), ParseError);
  CHECK_THROWS_AS(LaurentMotive::parse("x"), ParseError);
  CHECK_THROWS_AS(LaurentMotive::parse("L^99999999999"), ParseError);
}

TEST_CASE("special linear classes") {
  const LaurentMotive L = LaurentMotive::L();
  CHECK(sl_class(1) == LaurentMotive(1));
  CHECK(sl_class(2) == L.pow(3) - L);
  // #SL_3(F_2) = 168
  CHECK(sl_class(3).specialize(2) == 168);
  for (int r = 1; r <= 5; ++r) CHECK(zw_sum_identity(r));
}

TEST_CASE("cell defects") {
  CHECK(z_w_defects(Permutation::identity(3)) == std::vector<int>{0, 0, 0});
  CHECK(z_w_defects(Permutation({3, 2, 1})) == std::vector<int>{2, 1, 0});
  CHECK(z_w_defects(Permutation({2, 3, 1})) == std::vector<int>{1, 1, 0});
  CHECK(Permutation::all(4).size() == 24);
  CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
}

TEST_CASE("compositions") {
  CHECK(compositions(2, 2).size() == 3);
  CHECK(compositions(3, 3).size() == 10);
  CHECK(compositions(0, 4).size() == 1);
}

// sum_k L^{-k((m-r)r+1)} fibration_factor(m,r,0,k) x^k = prod_i (1 - L^{-(m+1-i)} x)^{-1}
TEST_CASE("fibration factor geometric series") {
  const int order = 6;
  for (auto [m, r] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 3}}) {
    TruncatedSeries<LaurentMotive> lhs(1, order), rhs(1, order);
    for (int k = 0; k <= order; ++k)
      lhs.add(MultiIndex({k}), fibration_factor(m, r, 0, k).shifted(-k * ((m - r) * r + 1)));
    rhs.add(MultiIndex({0}), LaurentMotive(1));
    for (int i = 1; i <= r; ++i) {
      TruncatedSeries<LaurentMotive> g(1, order);
      for (int k = 0; k <= order; ++k) g.add(MultiIndex({k}), LaurentMotive::L(-(m + 1 - i) * k));
      rhs = rhs * g;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("fibration factor without the prefactor removed is not the product") {
  const LaurentMotive f = fibration_factor(3, 1, 0, 1);
  CHECK(f == LaurentMotive(1));
  CHECK_FALSE(f == LaurentMotive::L(-3));
}

}  // TEST_SUITE
