#include "motzeta/fixtures.hpp"

namespace motzeta {

namespace {

Polynomial sum_of_squares(const std::vector<Polynomial>& xs) {
  Polynomial out(0);
  for (const auto& x : xs) out += x * x;
  return out;
}

std::vector<Polynomial> coordinates(int n) {
  std::vector<Polynomial> out;
  for (int i = 1; i <= n; ++i) out.push_back(Polynomial::variable(i, n));
  return out;
}

Stratum stratum(std::vector<std::string> ids, const std::string& cls, const std::string& spectrum) {
  Stratum s{std::move(ids), LaurentMotive::parse(cls), std::nullopt};
  if (!spectrum.empty()) s.spectrum = Spectrum::parse(spectrum);
  return s;
}

}  // namespace

std::vector<std::string> castling_fixture_names() { return {"torus-m3", "quadric-m3", "symmetric-m2"}; }

CastlingFixture castling_fixture(const std::string& name) {
  if (name == "torus-m3") {
    // Coordinates of a 3x1 matrix against the complementary 2x2 minors of a
    // 3x2 matrix, each invariant of degree r_j.
    return {name, "coordinates of M_{3,1} vs signed 2x2 minors of M_{3,2}",
            PolySystem(3, coordinates(3)), PolySystem(6, dual_plucker_coordinates(3, 2)),
            CastlingDatum(3, 1, 2, MultiIndex({1, 1, 1})), Leading::any};
  }
  if (name == "quadric-m3") {
    const auto minors = dual_plucker_coordinates(3, 2);
    return {name, "x1^2+x2^2+x3^2 on M_{3,1} vs the sum of squared 2x2 minors on M_{3,2}",
            PolySystem(3, {sum_of_squares(coordinates(3))}),
            PolySystem(6, {sum_of_squares(minors).with_nvars(6)}),
            CastlingDatum(3, 1, 2, MultiIndex({2})), Leading::one};
  }
  if (name == "symmetric-m2") {
    return {name, "(x1, x2) on M_{2,1} on both sides", PolySystem(2, coordinates(2)),
            PolySystem(2, plucker_coordinates(2, 1)), CastlingDatum(2, 1, 1, MultiIndex({1, 1})),
            Leading::any};
  }
  throw DomainError("unknown castling fixture '" + name + "'");
}

ResolutionDatum monomial_resolution(int d) {
  if (d < 1) throw DomainError("degree must be >= 1");
  std::string spectrum;
  for (int k = 0; k < d; ++k) {
    if (k) spectrum += " + ";
    spectrum += k == 0 ? std::string("1") : "t^(" + std::to_string(k) + "/" + std::to_string(d) + ")";
  }
  return ResolutionDatum({{"E", d, 1}}, {stratum({"E"}, std::to_string(d), spectrum)},
                         d == 1 ? "" : "q = 1 mod " + std::to_string(d));
}

std::vector<std::string> resolution_fixture_names() {
  return {"smooth", "x2", "x3", "xy", "xy-local", "quadric", "quadric-local"};
}

int resolution_fixture_dimension(const std::string& name) {
  if (name == "smooth" || name == "x2" || name == "x3") return 1;
  if (name == "xy" || name == "xy-local") return 2;
  if (name == "quadric" || name == "quadric-local") return 3;
  throw DomainError("unknown resolution fixture '" + name + "'");
}

ResolutionDatum resolution_fixture(const std::string& name) {
  if (name == "smooth") return monomial_resolution(1);
  if (name == "x2") return monomial_resolution(2);
  if (name == "x3") return monomial_resolution(3);
  if (name == "xy") {
    return ResolutionDatum({{"E1", 1, 1}, {"E2", 1, 1}},
                           {stratum({"E1"}, "L - 1", "t - 1"), stratum({"E2"}, "L - 1", "t - 1"),
                            stratum({"E1", "E2"}, "1", "1")});
  }
  if (name == "xy-local") {
    return ResolutionDatum({{"E1", 1, 1}, {"E2", 1, 1}}, {stratum({"E1", "E2"}, "1", "1")});
  }
  // Blow-up of the origin for x1^2+x2^2+x3^2: exceptional divisor E (N=2,
  // nu=3) meeting the strict transform S along a conic. The double cover of
  // E minus the conic is the affine quadric x^2+y^2+z^2 = 1.
  if (name == "quadric") {
    return ResolutionDatum({{"E", 2, 3}, {"S", 1, 1}},
                           {stratum({"E"}, "L^2 + L", "t^2 + t^(3/2)"),
                            stratum({"S"}, "L^2 - 1", ""),
                            stratum({"E", "S"}, "L + 1", "1 + t")},
                           "q = 1 mod 4");
  }
  if (name == "quadric-local") {
    return ResolutionDatum({{"E", 2, 3}, {"S", 1, 1}},
                           {stratum({"E"}, "L^2 + L", "t^2 + t^(3/2)"),
                            stratum({"E", "S"}, "L + 1", "1 + t")},
                           "q = 1 mod 4");
  }
  throw DomainError("unknown resolution fixture '" + name + "'");
}

}  // namespace motzeta
