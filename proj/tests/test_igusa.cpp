#include <doctest.h>

#include "motzeta/arcs.hpp"
#include "oracles.hpp"

using namespace motzeta;

TEST_SUITE("igusa") {

TEST_CASE("matches direct enumeration") {
  struct Case {
    const char* f;
    unsigned p;
    int n_max;
  };
  for (const Case& c : {Case{"x1", 3, 3}, Case{"x1^2", 5, 2}, Case{"x1^2 - 2", 7, 2}, Case{"x1*x2", 3, 2},
                        Case{"x1^2 + x2^2", 5, 1}, Case{"x1^3 - x2^2", 2, 3}, Case{"x1^2 + x2^2 + x3^2", 3, 1},
                        Case{"x1*x2 - x3^2", 2, 2}}) {
    const Polynomial f = Polynomial::parse(c.f);
    for (int n = 0; n <= c.n_max; ++n) {
      CAPTURE(c.f);
      CAPTURE(n);
      CHECK(igusa_count(f, f.nvars(), c.p, n) == oracle::igusa_count(f, f.nvars(), c.p, n));
    }
  }
}

TEST_CASE("closed forms") {
  const auto z = igusa_coeffs(Polynomial::parse("x1"), 1, 3, 4);
  for (int n = 0; n <= 4; ++n) CHECK(z.coefficient(MultiIndex({n})) == Rational(2, 3) * rpow(3, -n));
  CHECK(igusa_count(Polynomial::parse("x1^2"), 1, 5, 2) == 20);
  CHECK(igusa_count(Polynomial::parse("x1^2"), 1, 5, 1) == 0);
}

TEST_CASE("extra variables multiply counts") {
  const Polynomial f = Polynomial::parse("x1^2");
  for (int n = 0; n <= 2; ++n) CHECK(igusa_count(f, 2, 3, n) == igusa_count(f, 1, 3, n) * ipow(3, n + 1));
}

TEST_CASE("threads agree") {
  CountOptions many;
  many.threads = 3;
  const Polynomial f = Polynomial::parse("x1^2 + x2^2 + x3^2");
  for (int n = 0; n <= 2; ++n) CHECK(igusa_count(f, 3, 3, n) == igusa_count(f, 3, 3, n, many));
}

TEST_CASE("rejects large moduli and composite p") {
  CHECK_THROWS_AS(igusa_coeffs(Polynomial::parse("x1"), 1, 4, 1), DomainError);
  CHECK_THROWS_AS(igusa_coeffs(Polynomial::parse("x1"), 1, 3, 12), DomainError);
}

}  // TEST_SUITE
