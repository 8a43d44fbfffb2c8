#include "zhu/exactmath/serialize.hpp"

#include <stdexcept>

namespace zhu {

Json to_json(const Rational& x) { return x.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw std::invalid_argument("expected a rational string or integer, got " + j.dump());
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array, got " + j.dump());
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

Poly parse_poly(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
  return poly_from_json(j);
}

}  // namespace zhu
