#include "cubictheta/series_json.hpp"

#include "cubictheta/errors.hpp"

namespace cubictheta {

nlohmann::json series_to_json(const PiSeries& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : t.coeff.coeffs()) coeffs.push_back(to_string(c));
    terms.push_back(nlohmann::json::array({t.exponent, std::move(coeffs)}));
  }
  return {
      {"pi_grade", f.pi_grade()},
      {"D", f.denominator()},
      {"N", f.cyclo_order()},
      {"terms", std::move(terms)},
      {"trunc", f.is_exact() ? nlohmann::json(nullptr) : nlohmann::json(f.trunc())},
  };
}

PiSeries series_from_json(const nlohmann::json& j) {
  try {
    const SeriesContext ctx{j.at("D").get<std::int64_t>(), j.at("N").get<std::int64_t>()};
    const auto cyclo = CycloContext::get(ctx.cyclo_order);
    std::vector<PiSeries::Term> terms;
    for (const auto& t : j.at("terms")) {
      std::vector<Rational> coeffs;
      for (const auto& c : t.at(1)) coeffs.push_back(parse_rational(c.get<std::string>()));
      if (static_cast<int>(coeffs.size()) != cyclo->phi()) throw ParseError("coefficient vector length differs from phi");
      terms.push_back({t.at(0).get<std::int64_t>(), CycloNumber::from_coeffs(cyclo, coeffs)});
    }
    const auto& tr = j.at("trunc");
    const auto trunc = tr.is_null() ? PiSeries::kExact : tr.get<std::int64_t>();
    return PiSeries(ctx, j.at("pi_grade").get<int>(), std::move(terms), trunc);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace cubictheta
