#include "motzeta/resolution.hpp"

#include <algorithm>
#include <set>

namespace motzeta {

ResolutionDatum::ResolutionDatum(std::vector<Component> components, std::vector<Stratum> strata,
                                 std::string valid_q)
    : components_(std::move(components)), strata_(std::move(strata)), valid_q_(std::move(valid_q)) {
  std::set<std::string> ids;
  for (const auto& c : components_) {
    if (c.id.empty()) throw DomainError("component with empty id");
    if (!ids.insert(c.id).second) throw DomainError("duplicate component id '" + c.id + "'");
    if (c.N < 1) throw DomainError("component '" + c.id + "' needs N >= 1");
    if (c.nu < 1) throw DomainError("component '" + c.id + "' needs nu >= 1");
  }
  std::set<std::vector<std::string>> seen;
  for (auto& s : strata_) {
    if (s.I.empty()) throw DomainError("stratum with empty index set");
    std::vector<std::string> key = s.I;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
      throw DomainError("stratum repeats a component");
    for (const auto& id : key)
      if (!ids.count(id)) throw DomainError("stratum references unknown component '" + id + "'");
    if (!seen.insert(key).second) throw DomainError("duplicate stratum");
  }
}

const Component& ResolutionDatum::component(const std::string& id) const {
  for (const auto& c : components_)
    if (c.id == id) return c;
  throw DomainError("unknown component '" + id + "'");
}

bool ResolutionDatum::has_spectra() const {
  return std::all_of(strata_.begin(), strata_.end(), [](const Stratum& s) { return s.spectrum.has_value(); });
}

RationalSeries zeta_from_resolution(const ResolutionDatum& datum) {
  RationalSeries out(1);
  const LaurentMotive l_minus_one = LaurentMotive::L(1) - LaurentMotive(1);
  for (const auto& s : datum.strata()) {
    SeriesTerm term;
    int shift = 0;
    int nu_total = 0;
    for (const auto& id : s.I) {
      const Component& c = datum.component(id);
      shift += c.N;
      nu_total += c.nu;
      term.factors.push_back({c.nu, MultiIndex({c.N})});
    }
    term.coeff = RationalMotive(l_minus_one.pow(static_cast<unsigned>(s.I.size() - 1)) *
                                s.class_counting * LaurentMotive::L(-nu_total));
    term.shift = MultiIndex({shift});
    out.add_term(std::move(term));
  }
  return out;
}

MilnorFiber milnor_fiber(const ResolutionDatum& datum, bool require_spectrum) {
  const LaurentMotive one_minus_l = LaurentMotive(1) - LaurentMotive::L(1);
  const Spectrum one_minus_t = Spectrum(1) - Spectrum::monomial(1, 1);
  LaurentMotive counting;
  Spectrum spectrum;
  bool complete = true;
  for (const auto& s : datum.strata()) {
    const auto k = static_cast<unsigned>(s.I.size() - 1);
    counting += one_minus_l.pow(k) * s.class_counting;
    if (!s.spectrum) {
      complete = false;
      continue;
    }
    Spectrum weight(1);
    for (unsigned i = 0; i < k; ++i) weight = weight * one_minus_t;
    spectrum += weight * *s.spectrum;
  }
  if (require_spectrum && !complete)
    throw DomainError("a stratum lacks spectrum data");
  MilnorFiber out{RationalMotive(counting), std::nullopt};
  if (complete) out.spectrum = spectrum;
  return out;
}

Spectrum hsp_of_f(const ResolutionDatum& datum, int dim_x, int sign_dimension) {
  if (dim_x < 1) throw DomainError("dimension must be >= 1");
  const int d = sign_dimension == kHspSignFromDimension ? dim_x : sign_dimension;
  if (d < 1) throw DomainError("sign dimension must be >= 1");
  const MilnorFiber s = milnor_fiber(datum, true);
  Spectrum reduced = *s.spectrum - Spectrum(1);
  return (d - 1) % 2 == 0 ? reduced : -reduced;
}

}  // namespace motzeta
