#pragma once

// JSON forms of the library's data. Exact values travel as strings
// ("10/25" style rationals, "L^3 - L" style motives).

#include <json.hpp>

#include "motzeta/arcs.hpp"
#include "motzeta/castling.hpp"
#include "motzeta/resolution.hpp"
#include "motzeta/series.hpp"

namespace motzeta {

using Json = nlohmann::ordered_json;

Json to_json(const ResolutionDatum& datum);
ResolutionDatum resolution_from_json(const Json& j);

Json to_json(const CastlingDatum& datum);
CastlingDatum castling_from_json(const Json& j);

/// {"l":1,"terms":[{"coeff":"...","shift":[..],"factors":[{"nu":1,"N":[..]}]}]}
Json to_json(const RationalSeries& series);
RationalSeries series_from_json(const Json& j);

/// {"l":..,"order":..,"coeffs":[{"n":[..],"value":"..."}]}, zero coefficients omitted.
Json to_json(const TruncatedSeries<Rational>& series);
Json to_json(const TruncatedSeries<RationalMotive>& series);

Json to_json(const IdentityReport& report);
Json to_json(const MilnorFiber& fiber);

/// Parses text, rethrowing JSON syntax and type errors as ParseError.
Json parse_json(const std::string& text);

}  // namespace motzeta
