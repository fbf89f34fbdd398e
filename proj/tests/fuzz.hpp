#pragma once

// Random inputs for property tests, driven by a seeded std::mt19937.

#include <random>
#include <string>
#include <vector>

#include "motzeta/resolution.hpp"

namespace fuzz {

inline motzeta::LaurentMotive laurent(std::mt19937& rng, int lo = -2, int hi = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(lo, hi), count(0, 3);
  motzeta::LaurentMotive out;
  for (int i = count(rng); i > 0; --i) out += motzeta::LaurentMotive::monomial(coeff(rng), exp(rng));
  return out;
}

inline motzeta::Spectrum spectrum(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), num(-4, 8), den(1, 4), count(0, 3);
  motzeta::Spectrum out;
  for (int i = count(rng); i > 0; --i)
    out += motzeta::Spectrum::monomial(coeff(rng), motzeta::Rational(num(rng), den(rng)));
  return out;
}

/// Up to four components and a random nonempty family of strata.
inline motzeta::ResolutionDatum resolution(std::mt19937& rng) {
  std::uniform_int_distribution<int> ncomp(1, 4), small(1, 5), coin(0, 1);
  const int k = ncomp(rng);
  std::vector<motzeta::Component> comps;
  for (int i = 0; i < k; ++i) comps.push_back({"E" + std::to_string(i + 1), small(rng), small(rng)});
  std::vector<motzeta::Stratum> strata;
  for (int mask = 1; mask < (1 << k); ++mask) {
    if (!coin(rng) && !strata.empty()) continue;
    motzeta::Stratum s;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) s.I.push_back(comps[static_cast<std::size_t>(i)].id);
    s.class_counting = laurent(rng, 0, 3);
    if (coin(rng)) s.spectrum = spectrum(rng);
    strata.push_back(std::move(s));
  }
  return motzeta::ResolutionDatum(std::move(comps), std::move(strata));
}

}  // namespace fuzz
