#include <doctest.h>

#include "fuzz.hpp"
#include "motzeta/arcs.hpp"
#include "motzeta/fixtures.hpp"
#include "motzeta/resolution.hpp"

using namespace motzeta;

namespace {

void matches_counts(const std::string& fixture, const std::string& poly, unsigned q, int order,
                    const ArcConstraint& c = {}) {
  CAPTURE(fixture);
  CAPTURE(q);
  const auto from_resolution =
      specialize(expand(zeta_from_resolution(resolution_fixture(fixture)), order), Rational(q));
  const auto from_counts = zeta_coeffs_from_counts(PolySystem::parse(poly), q, order, c, Leading::one);
  CHECK(from_resolution == from_counts);
}

}  // namespace

TEST_SUITE("resolution-evaluator") {

TEST_CASE("fixtures reproduce arc counts where their classes are valid") {
  matches_counts("smooth", "x1", 3, 5);
  for (unsigned q : {3u, 5u, 7u}) matches_counts("x2", "x1^2", q, 6);
  for (unsigned q : {7u, 13u}) matches_counts("x3", "x1^3", q, 6);
  for (unsigned q : {2u, 3u, 5u}) {
    matches_counts("xy", "x1*x2", q, 4);
    matches_counts("xy-local", "x1*x2", q, 4, ArcConstraint::origin());
  }
  matches_counts("quadric", "x1^2 + x2^2 + x3^2", 5, 4);
  matches_counts("quadric-local", "x1^2 + x2^2 + x3^2", 5, 4, ArcConstraint::origin());
}

TEST_CASE("monomial zeta function") {
  // x^d: (#mu_d) L^-1 T^d / (1 - L^-1 T^d)
  const auto e = expand(zeta_from_resolution(monomial_resolution(3)), 7);
  CHECK(e.coefficient(MultiIndex({3})) == RationalMotive(LaurentMotive::parse("3*L^-1")));
  CHECK(e.coefficient(MultiIndex({6})) == RationalMotive(LaurentMotive::parse("3*L^-2")));
  CHECK(e.coefficient(MultiIndex({4})).is_zero());
}

TEST_CASE("milnor fibres of fixtures") {
  CHECK(milnor_fiber(resolution_fixture("x2")).counting == RationalMotive(2));
  CHECK(milnor_fiber(resolution_fixture("x2")).spectrum == Spectrum::parse("1 + t^(1/2)"));
  CHECK(milnor_fiber(resolution_fixture("xy-local")).counting == RationalMotive(LaurentMotive::parse("1 - L")));
  const MilnorFiber q = milnor_fiber(resolution_fixture("quadric-local"));
  CHECK(q.counting == RationalMotive(LaurentMotive::parse("L + 1")));
  CHECK(q.spectrum == Spectrum::parse("1 + t^(3/2)"));
  CHECK_FALSE(milnor_fiber(resolution_fixture("quadric")).spectrum);
  CHECK_THROWS_AS(milnor_fiber(resolution_fixture("quadric"), true), DomainError);
}

TEST_CASE("hodge spectrum") {
  CHECK(hsp_of_f(resolution_fixture("x2"), 1) == Spectrum::parse("t^(1/2)"));
  CHECK(hsp_of_f(resolution_fixture("x3"), 1) == Spectrum::parse("t^(1/3) + t^(2/3)"));
  CHECK(hsp_of_f(resolution_fixture("quadric-local"), 3) == Spectrum::parse("t^(3/2)"));
  CHECK(hsp_of_f(resolution_fixture("x2"), 1, 2) == Spectrum::parse("-t^(1/2)"));
  CHECK(hsp_of_f(resolution_fixture("smooth"), 1).is_zero());
  CHECK_THROWS_AS(hsp_of_f(resolution_fixture("x2"), 0), DomainError);
}

TEST_CASE("fibre equals minus the limit of the zeta function on random data") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    const ResolutionDatum d = fuzz::resolution(rng);
    REQUIRE(-limit_at_infinity(zeta_from_resolution(d)) == milnor_fiber(d).counting);
  }
}

TEST_CASE("validation") {
  using V = std::vector<Component>;
  const LaurentMotive one(1);
  CHECK_THROWS_AS(ResolutionDatum(V{{"E", 0, 1}}, {{{"E"}, one, {}}}), DomainError);
  CHECK_THROWS_AS(ResolutionDatum(V{{"E", 1, 0}}, {{{"E"}, one, {}}}), DomainError);
  CHECK_THROWS_AS(ResolutionDatum(V{{"E", 1, 1}, {"E", 2, 1}}, {}), DomainError);
  CHECK_THROWS_AS(ResolutionDatum(V{{"E", 1, 1}}, {{{"F"}, one, {}}}), DomainError);
  CHECK_THROWS_AS(ResolutionDatum(V{{"E", 1, 1}}, {{{"E", "E"}, one, {}}}), DomainError);
  CHECK_THROWS_AS(ResolutionDatum(V{{"E", 1, 1}}, {{{"E"}, one, {}}, {{"E"}, one, {}}}), DomainError);
  CHECK_THROWS_AS(resolution_fixture("nope"), DomainError);
}

}  // TEST_SUITE
