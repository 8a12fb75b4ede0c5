#pragma once

#include <json.hpp>

#include "cubictheta/series.hpp"

namespace cubictheta {

/// {pi_grade, D, N, terms: [[exponent_numerator, [coeff strings, length phi]], ...], trunc}
/// with trunc null for exact series. Rationals are written as "p/q" strings.
nlohmann::json series_to_json(const PiSeries& f);

/// Inverse of series_to_json; throws ParseError on schema violations.
PiSeries series_from_json(const nlohmann::json& j);

}  // namespace cubictheta
