#include "circ/json_io.hpp"

namespace circ {

nlohmann::ordered_json to_json(const Polynomial& p) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  // std::map iteration is ascending by exponent, which fixes the key order
  for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = c.str();
  return obj;
}

Polynomial polynomial_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  Polynomial p;
  for (const auto& [key, val] : j.items()) {
    std::int64_t e = std::stoll(key);
    if (!val.is_string()) throw std::invalid_argument("polynomial JSON coefficients must be strings");
    p += Polynomial::monomial(e, BigInt(val.get<std::string>()));
  }
  return p;
}

} // namespace circ
