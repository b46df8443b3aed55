#pragma once

// JSON form of a polynomial: an object mapping decimal exponent strings to
// decimal coefficient strings, keys in ascending numeric order. Coefficients
// are strings because they routinely exceed 64 bits.

#include "circ/poly.hpp"
#include "json.hpp" // vendored single-header nlohmann/json

namespace circ {

nlohmann::ordered_json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);

} // namespace circ
