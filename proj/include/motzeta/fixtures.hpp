#pragma once

// Built-in castling pairs and resolution data.

#include <string>
#include <vector>

#include "motzeta/arcs.hpp"
#include "motzeta/castling.hpp"
#include "motzeta/resolution.hpp"

namespace motzeta {

struct CastlingFixture {
  std::string name;
  std::string description;
  PolySystem sys1;
  PolySystem sys2;
  CastlingDatum datum;
  /// Count used by default when verifying (one for l = 1, any otherwise).
  Leading leading;
};

/// "torus-m3", "quadric-m3", "symmetric-m2".
CastlingFixture castling_fixture(const std::string& name);
std::vector<std::string> castling_fixture_names();

/// f = x^d on A^1: one exceptional stratum whose cover is mu_d.
ResolutionDatum monomial_resolution(int d);

/// "smooth", "x2", "x3", "xy", "xy-local", "quadric", "quadric-local".
ResolutionDatum resolution_fixture(const std::string& name);
std::vector<std::string> resolution_fixture_names();

/// Ambient dimension of a resolution fixture.
int resolution_fixture_dimension(const std::string& name);

}  // namespace motzeta
