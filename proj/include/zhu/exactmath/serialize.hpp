#pragma once

#include <json.hpp>

#include "zhu/exactmath/polynomial.hpp"
#include "zhu/exactmath/rational.hpp"

namespace zhu {

using Json = nlohmann::json;

/// Rationals travel as "p/q" or "n" strings. Parsing also accepts JSON integers.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// Polynomials travel as arrays of rational strings, lowest degree first.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Parses JSON text holding a polynomial array; throws std::invalid_argument.
Poly parse_poly(const std::string& text);

}  // namespace zhu
