#include "motzeta/json_io.hpp"

namespace motzeta {

namespace {

Json index_json(const MultiIndex& n) { return Json(n.entries); }

MultiIndex index_from(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  return MultiIndex(j.get<std::vector<int>>());
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  return guarded("invalid JSON", [&] { return Json::parse(text); });
}

Json to_json(const ResolutionDatum& datum) {
  Json out;
  out["components"] = Json::array();
  for (const auto& c : datum.components())
    out["components"].push_back({{"id", c.id}, {"N", c.N}, {"nu", c.nu}});
  out["strata"] = Json::array();
  for (const auto& s : datum.strata()) {
    Json js{{"I", s.I}, {"class", s.class_counting.to_string()}};
    if (s.spectrum) js["spectrum"] = s.spectrum->to_string();
    out["strata"].push_back(std::move(js));
  }
  out["valid_q"] = datum.valid_q();
  return out;
}

ResolutionDatum resolution_from_json(const Json& j) {
  return guarded("resolution datum", [&] {
    std::vector<Component> components;
    for (const auto& c : j.at("components"))
      components.push_back({c.at("id").get<std::string>(), c.at("N").get<int>(), c.at("nu").get<int>()});
    std::vector<Stratum> strata;
    for (const auto& s : j.at("strata")) {
      Stratum st{s.at("I").get<std::vector<std::string>>(),
                 LaurentMotive::parse(s.at("class").get<std::string>()), std::nullopt};
      if (s.contains("spectrum") && !s.at("spectrum").is_null())
        st.spectrum = Spectrum::parse(s.at("spectrum").get<std::string>());
      strata.push_back(std::move(st));
    }
    const std::string valid = j.contains("valid_q") ? j.at("valid_q").get<std::string>() : "";
    return ResolutionDatum(std::move(components), std::move(strata), valid);
  });
}

Json to_json(const CastlingDatum& datum) {
  return {{"m", datum.m}, {"r1", datum.r1}, {"r2", datum.r2}, {"l", datum.ell}, {"d", datum.d.entries}};
}

CastlingDatum castling_from_json(const Json& j) {
  return guarded("castling datum", [&] {
    CastlingDatum c(j.at("m").get<int>(), j.at("r1").get<int>(), j.at("r2").get<int>(),
                    index_from(j.at("d")));
    if (j.contains("l") && j.at("l").get<int>() != c.ell)
      throw DomainError("castling datum: l does not match the length of d");
    return c;
  });
}

Json to_json(const RationalSeries& series) {
  Json terms = Json::array();
  for (const auto& t : series.terms()) {
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back({{"nu", f.nu}, {"N", index_json(f.N)}});
    terms.push_back({{"coeff", t.coeff.to_string()}, {"shift", index_json(t.shift)}, {"factors", factors}});
  }
  return {{"l", series.ell()}, {"terms", terms}};
}

RationalSeries series_from_json(const Json& j) {
  return guarded("series", [&] {
    RationalSeries out(j.at("l").get<int>());
    for (const auto& t : j.at("terms")) {
      SeriesTerm term;
      term.coeff = RationalMotive::parse(t.at("coeff").get<std::string>());
      term.shift = index_from(t.at("shift"));
      if (t.contains("factors"))
        for (const auto& f : t.at("factors"))
          term.factors.push_back({f.at("nu").get<int>(), index_from(f.at("N"))});
      out.add_term(std::move(term));
    }
    return out;
  });
}

Json to_json(const TruncatedSeries<Rational>& series) {
  Json coeffs = Json::array();
  for (const auto& [n, c] : series.coeffs()) coeffs.push_back({{"n", index_json(n)}, {"value", to_string(c)}});
  return {{"l", series.ell()}, {"order", series.order()}, {"coeffs", coeffs}};
}

Json to_json(const TruncatedSeries<RationalMotive>& series) {
  Json coeffs = Json::array();
  for (const auto& [n, c] : series.coeffs())
    coeffs.push_back({{"n", index_json(n)}, {"value", c.to_string()}});
  return {{"l", series.ell()}, {"order", series.order()}, {"coeffs", coeffs}};
}

Json to_json(const IdentityReport& report) {
  Json coeffs = Json::array();
  for (const auto& c : report.coefficients)
    coeffs.push_back({{"n", index_json(c.n)}, {"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)},
                      {"equal", c.equal}});
  return {{"identity", report.identity},
          {"equal", report.all_equal},
          {"verified_order", report.verified_order},
          {"coefficients", coeffs}};
}

Json to_json(const MilnorFiber& fiber) {
  Json out{{"counting", fiber.counting.to_string()}};
  out["spectrum"] = fiber.spectrum ? Json(fiber.spectrum->to_string()) : Json(nullptr);
  return out;
}

}  // namespace motzeta
