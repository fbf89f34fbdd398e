#include <doctest.h>

#include "motzeta/polynomial.hpp"

using namespace motzeta;

TEST_SUITE("polynomial") {

TEST_CASE("parse and print") {
  const Polynomial f = Polynomial::parse("x1^2 + 3*x1*x2 - x3 + 1");
  CHECK(f.nvars() == 3);
  CHECK(f.to_string() == "x1^2 + 3*x1*x2 - x3 + 1");
  CHECK(Polynomial::parse(f.to_string()) == f);
  CHECK(Polynomial::parse("(x1 + x2)^2") == Polynomial::parse("x1^2 + 2*x1*x2 + x2^2"));
  CHECK(Polynomial::parse("-(x1 - 1)") == Polynomial::parse("1 - x1"));
  CHECK(Polynomial::parse("x1 - x1").is_zero());
}

TEST_CASE("malformed input") {
  for (const char* bad : {"", "x1+", "x0", "x1^-1", "(x1", "x1 x2", "2^x1", "y1", "x1^99999999999", "x5000"})
    CHECK_THROWS_AS(Polynomial::parse(bad), ParseError);
}

TEST_CASE("degree and homogeneity") {
  CHECK(Polynomial::parse("x1^2 + x2^2").is_homogeneous());
  CHECK_FALSE(Polynomial::parse("x1^2 + x2").is_homogeneous());
  CHECK(Polynomial::parse("x1^3*x2 + x2").total_degree() == 4);
}

TEST_CASE("derivative, composition, evaluation") {
  const Polynomial f = Polynomial::parse("x1^3 + x1*x2");
  CHECK(f.derivative(1) == Polynomial::parse("3*x1^2 + x2"));
  CHECK(f.derivative(2) == Polynomial::parse("x1").with_nvars(2));
  const Polynomial g = f.compose({Polynomial::parse("x1 + 1"), Polynomial::parse("x1")});
  CHECK(g == Polynomial::parse("(x1 + 1)^3 + (x1 + 1)*x1"));
  CHECK(f.evaluate({Integer(2), Integer(-1)}) == 6);
}

TEST_CASE("systems") {
  const PolySystem s = PolySystem::parse("x1*x2, x3^2");
  CHECK(s.size() == 2);
  CHECK(s.nvars() == 3);
  CHECK(s.degree(0) == 2);
  CHECK(s.all_homogeneous());
  CHECK(PolySystem::parse("x1", 4).nvars() == 4);
  CHECK_THROWS(PolySystem::parse("x5", 2));
}

TEST_CASE("maximal minors") {
  // 2x2 minor of a 2x2 matrix read row-major is the determinant.
  const auto d = plucker_coordinates(2, 2);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == Polynomial::parse("x1*x4 - x2*x3"));
  CHECK(plucker_coordinates(3, 2).size() == 3);
  for (const auto& p : dual_plucker_coordinates(3, 2)) {
    CHECK(p.is_homogeneous());
    CHECK(p.total_degree() == 2);
  }
  CHECK(plucker_coordinates(3, 1).size() == 3);
}

}  // TEST_SUITE
