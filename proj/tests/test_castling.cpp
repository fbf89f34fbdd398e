#include <doctest.h>

#include "fuzz.hpp"
#include "motzeta/castling.hpp"
#include "motzeta/fixtures.hpp"

using namespace motzeta;

namespace {

const CastlingDatum kQuadric(3, 1, 2, MultiIndex({2}));

std::vector<CastlingDatum> single_data() {
  return {CastlingDatum(3, 1, 2, MultiIndex({2})), CastlingDatum(3, 2, 1, MultiIndex({1})),
          CastlingDatum(5, 2, 3, MultiIndex({1})), CastlingDatum(4, 1, 3, MultiIndex({3}))};
}

RationalSeries two_variable_series() {
  RationalSeries s(2);
  s.add_term({RationalMotive::parse("L^-2"), MultiIndex({1, 1}), {{1, MultiIndex({1, 0})}, {2, MultiIndex({0, 1})}}});
  s.add_term({RationalMotive::parse("L - 1"), MultiIndex({0, 2}), {{3, MultiIndex({1, 1})}}});
  return s;
}

TruncatedSeries<Rational> random_truncated(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  TruncatedSeries<Rational> out(1, order);
  for (int n = 0; n <= order; ++n) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    out.add(MultiIndex({n}), v);
  }
  return out;
}

bool same_fiber(const MilnorFiber& a, const MilnorFiber& b) {
  return a.counting == b.counting && a.spectrum == b.spectrum;
}

}  // namespace

TEST_SUITE("castling") {

TEST_CASE("datum validation") {
  CHECK_THROWS_AS(CastlingDatum(3, 1, 1, MultiIndex({1})), DomainError);
  CHECK_THROWS_AS(CastlingDatum(2, 0, 2, MultiIndex({1})), DomainError);
  CHECK_THROWS_AS(CastlingDatum(2, 1, 1, MultiIndex({0})), DomainError);
  CHECK_THROWS_AS(CastlingDatum(2, 1, 1, MultiIndex()), DomainError);
  CHECK(kQuadric.degrees(2) == MultiIndex({4}));
  CHECK(kQuadric.dimension(2) == 6);
  CHECK(kQuadric.swapped().swapped().r1 == 1);
}

TEST_CASE("transfer operators are involutions") {
  std::mt19937 rng(99);
  const int order = 8;
  for (const CastlingDatum& c : single_data()) {
    for (int i = 0; i < 10; ++i) {
      const RationalSeries z = zeta_from_resolution(fuzz::resolution(rng));
      CHECK(series_equal(castle_zeta(castle_zeta(z, c), c.swapped()), z, order));
      CHECK(series_equal(castle_local_zeta(castle_local_zeta(z, c), c.swapped()), z, order));
      const auto t = random_truncated(rng, order);
      CHECK(castle_igusa(castle_igusa(t, 5, c), 5, c.swapped()) == t);
      CHECK(castle_counting(castle_counting(t, 3, c), 3, c.swapped()) == t);
      // Start on the side whose transfer multiplies, so the first step divides exactly.
      Spectrum h = fuzz::spectrum(rng);
      if (c.r1 > c.r2) h = castle_spectrum(h, c.swapped());
      CHECK(castle_spectrum(castle_spectrum(h, c), c.swapped()) == h);
      MilnorFiber s{RationalMotive(fuzz::laurent(rng)), fuzz::spectrum(rng)};
      if (c.r1 > c.r2) s = castle_milnor(s, c.swapped());
      CHECK(same_fiber(castle_milnor(castle_milnor(s, c), c.swapped()), s));
    }
    // b must contain the roots the transfer removes.
    std::vector<Rational> roots{Rational(5, 3)};
    for (int i = 1; i <= c.r1; ++i)
      for (int j = 0; j < c.d[0]; ++j) roots.push_back(Rational(i + j, c.d[0]));
    const BFunction b = BFunction::from(roots);
    CHECK(castle_bfunction(castle_bfunction(b, c), c.swapped()) == b);
  }
  const CastlingDatum multi(3, 1, 2, MultiIndex({1, 2}));
  const RationalSeries z2 = two_variable_series();
  CHECK(series_equal(castle_zeta(castle_zeta(z2, multi), multi.swapped()), z2, 6));
  CHECK(series_equal(castle_local_zeta(castle_local_zeta(z2, multi), multi.swapped()), z2, 6));
}

TEST_CASE("equal ranks fix everything") {
  std::mt19937 rng(5);
  for (const CastlingDatum& c : {CastlingDatum(2, 1, 1, MultiIndex({1})), CastlingDatum(4, 2, 2, MultiIndex({3}))}) {
    const RationalSeries z = zeta_from_resolution(fuzz::resolution(rng));
    CHECK(series_equal(castle_zeta(z, c), z, 8));
    CHECK(series_equal(castle_local_zeta(z, c), z, 8));
    const auto t = random_truncated(rng, 6);
    CHECK(castle_igusa(t, 7, c) == t);
    const Spectrum h = fuzz::spectrum(rng);
    CHECK(castle_spectrum(h, c) == h);
    const BFunction b = BFunction::from({Rational(1, 2), 2});
    CHECK(castle_bfunction(b, c) == b);
    MilnorFiber s{RationalMotive(fuzz::laurent(rng)), h};
    CHECK(same_fiber(castle_milnor(s, c), s));
  }
}

TEST_CASE("counting realization commutes with expansion") {
  std::mt19937 rng(8);
  for (const CastlingDatum& c : single_data()) {
    const RationalSeries z = zeta_from_resolution(fuzz::resolution(rng));
    for (unsigned q : {2u, 3u, 5u}) {
      const auto lhs = specialize(expand(castle_zeta(z, c), 7), q);
      const auto rhs = castle_counting(specialize(expand(z, 7), q), q, c);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("global and local routes agree") {
  for (const char* name : {"quadric", "x2", "smooth"}) {
    const RationalSeries z = zeta_from_resolution(resolution_fixture(name));
    const CastlingDatum c = std::string(name) == "quadric" ? kQuadric : CastlingDatum(3, 1, 2, MultiIndex({std::string(name) == "x2" ? 2 : 1}));
    CHECK(route_equality(z, c, 8));
  }
  const RationalSeries z = zeta_from_resolution(resolution_fixture("quadric"));
  CHECK(series_equal(local_to_global(global_to_local(z, 3, MultiIndex({2})), 3, MultiIndex({2})), z, 8));
}

TEST_CASE("milnor fibre transfer follows the local zeta transfer") {
  const ResolutionDatum local = resolution_fixture("quadric-local");
  const RationalMotive lhs = -limit_at_infinity(castle_local_zeta(zeta_from_resolution(local), kQuadric));
  CHECK(lhs == castle_milnor(milnor_fiber(local), kQuadric).counting);
}

TEST_CASE("spectrum transfer") {
  const Spectrum h1 = Spectrum::parse("t^(3/2)");
  const Spectrum h2 = castle_spectrum(h1, kQuadric);
  CHECK(h2 == Spectrum::parse("-t^(3/2) + t^2 + t^(7/2)"));
  CHECK(spectrum_relation_holds(h1, h2, kQuadric));
  CHECK_FALSE(spectrum_relation_holds(h1, h2 + Spectrum(1), kQuadric));
}

TEST_CASE("b-function roots") {
  // Sum of three squares: b(s) = (s+1)(s+3/2); its partner is det(X^T X) on 3x2 matrices.
  const BFunction b2 = castle_bfunction(BFunction::from({1, Rational(3, 2)}), kQuadric);
  CHECK(b2 == BFunction::from({1, 1, Rational(3, 2), Rational(3, 2)}));
  CHECK(b2.to_string() == "{1, 1, 3/2, 3/2}");
  CHECK_THROWS_AS(castle_bfunction(BFunction::from({Rational(7, 2)}), kQuadric.swapped()), DomainError);
}

TEST_CASE("fixtures satisfy the castling identity") {
  const CastlingFixture torus = castling_fixture("torus-m3");
  CHECK(verify_castling(torus.sys1, torus.sys2, torus.datum, 2, 3, Leading::any).all_equal);
  const CastlingFixture sym = castling_fixture("symmetric-m2");
  for (unsigned q : {2u, 3u}) CHECK(verify_castling(sym.sys1, sym.sys2, sym.datum, q, 3, Leading::any).all_equal);
  const CastlingFixture quad = castling_fixture("quadric-m3");
  for (Leading l : {Leading::one, Leading::any}) {
    const IdentityReport r = verify_castling(quad.sys1, quad.sys2, quad.datum, 3, 2, l);
    CHECK(r.all_equal);
    CHECK(r.verified_order == 2);
    CHECK(r.coefficients.size() == 3);
  }
}

TEST_CASE("a constant factor on the partner only shows in leading-one counts") {
  const CastlingFixture quad = castling_fixture("quadric-m3");
  const PolySystem scaled(6, {quad.sys2[0] * Polynomial::constant(2, 6)});
  CHECK_FALSE(verify_castling(quad.sys1, scaled, quad.datum, 3, 2, Leading::one).all_equal);
  CHECK(verify_castling(quad.sys1, scaled, quad.datum, 3, 2, Leading::any).all_equal);
}

TEST_CASE("counts without the n = 0 term break the identity") {
  const CastlingFixture quad = castling_fixture("quadric-m3");
  const auto z1 = zeta_coeffs_from_counts(quad.sys1, 3, 2, {}, Leading::one);
  const auto z2 = zeta_coeffs_from_counts(quad.sys2, 3, 2, {}, Leading::one);
  const IdentityReport r = compare_series("plain", z2, castle_counting(z1, 3, quad.datum), 2);
  CHECK_FALSE(r.all_equal);
  CHECK(r.verified_order == 1);
}

TEST_CASE("full-rank reduction") {
  const Polynomial f = Polynomial::parse("x1^2 + x2^2 + x3^2");
  for (Leading l : {Leading::one, Leading::any}) CHECK(full_rank_reduction_check(f, 3, 2, 3, 2, l).all_equal);
  CHECK(full_rank_reduction_check(Polynomial::parse("x1"), 2, 1, 3, 3, Leading::one).all_equal);
}

}  // TEST_SUITE
