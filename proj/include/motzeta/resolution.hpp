#pragma once

// Zeta functions and motivic Milnor fibres from user-supplied resolution
// data (numerical data N_i, nu_i and the classes of the strata covers).

#include <optional>
#include <string>
#include <vector>

#include "motzeta/laurent.hpp"
#include "motzeta/series.hpp"
#include "motzeta/spectrum.hpp"

namespace motzeta {

struct Component {
  std::string id;
  int N = 1;
  int nu = 1;
};

struct Stratum {
  std::vector<std::string> I;
  /// Point count of the cover of E_I^o, as a polynomial in L = q.
  LaurentMotive class_counting;
  /// hsp of the Hodge realization of the same cover, when known.
  std::optional<Spectrum> spectrum;
};

class ResolutionDatum {
 public:
  ResolutionDatum(std::vector<Component> components, std::vector<Stratum> strata,
                  std::string valid_q = "");

  const std::vector<Component>& components() const { return components_; }
  const std::vector<Stratum>& strata() const { return strata_; }
  /// Congruence condition on q under which the counting classes are valid.
  const std::string& valid_q() const { return valid_q_; }
  const Component& component(const std::string& id) const;
  bool has_spectra() const;

 private:
  std::vector<Component> components_;
  std::vector<Stratum> strata_;
  std::string valid_q_;
};

/// sum_I (L-1)^{|I|-1} [E_I^o] prod_{i in I} L^{-nu_i} T^{N_i} / (1 - L^{-nu_i} T^{N_i}).
RationalSeries zeta_from_resolution(const ResolutionDatum& datum);

struct MilnorFiber {
  RationalMotive counting;
  std::optional<Spectrum> spectrum;
};

/// sum_I (1-L)^{|I|-1} [E_I^o], and the same sum with L -> t on the spectra.
/// With require_spectrum, throws DomainError if some stratum lacks one.
MilnorFiber milnor_fiber(const ResolutionDatum& datum, bool require_spectrum = false);

/// Marker for the default sign convention of hsp_of_f: the exponent d in
/// (-1)^{d-1} is the dimension of the ambient space.
inline constexpr int kHspSignFromDimension = -1;

/// (-1)^{d-1} (hsp(S_{f,x}) - 1) with d = dim_x unless sign_dimension is given.
Spectrum hsp_of_f(const ResolutionDatum& datum, int dim_x,
                  int sign_dimension = kHspSignFromDimension);

}  // namespace motzeta
