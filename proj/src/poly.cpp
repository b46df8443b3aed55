#include "circ/poly.hpp"

#include <sstream>

namespace circ {

void Polynomial::set(std::int64_t exp, BigInt c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = std::move(c);
}

Polynomial Polynomial::monomial(std::int64_t exp, BigInt coeff) {
  Polynomial p;
  p.set(exp, std::move(coeff));
  return p;
}

Polynomial Polynomial::one_plus_power(std::int64_t k) {
  Polynomial p = one();
  p += monomial(k);
  return p;
}

BigInt Polynomial::coeff(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::int64_t Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) + c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) - c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.set(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
  return out;
}

Polynomial Polynomial::operator*(const BigInt& scalar) const {
  Polynomial out;
  if (scalar == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_[e] = c * scalar;
  return out;
}

Polynomial Polynomial::substitute_power(std::int64_t p) const {
  if (p < 1) throw std::invalid_argument("substitute_power: exponent factor must be >= 1");
  Polynomial out;
  for (const auto& [e, c] : terms_) out.terms_[e * p] = c;
  return out;
}

Polynomial Polynomial::cyclic_reduce(std::int64_t modulus) const {
  if (modulus < 1) throw std::invalid_argument("cyclic_reduce: modulus must be >= 1");
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    std::int64_t r = e % modulus;
    if (r < 0) r += modulus;
    out.set(r, out.coeff(r) + c);
  }
  return out;
}

Polynomial Polynomial::divided_exact(const BigInt& k) const {
  if (k == 0) throw std::invalid_argument("divided_exact: division by zero");
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    if (c % k != 0)
      throw NonIntegralCount("coefficient of t^" + std::to_string(e) + " (" + c.str() +
                             ") is not divisible by " + k.str());
    out.terms_[e] = c / k;
  }
  return out;
}

BigInt Polynomial::evaluate(const BigInt& x) const {
  // exponents are sparse, so evaluate term-wise with pow
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) acc += c * boost::multiprecision::pow(x, static_cast<unsigned>(e));
  return acc;
}

BigInt Polynomial::substitute_t2_minus1() const {
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) throw OddExponent("substitute_t2_minus1: exponent " + std::to_string(e) + " is odd");
    acc += (e / 2) % 2 == 0 ? c : -c;
  }
  return acc;
}

bool Polynomial::palindromic(std::int64_t top_exp) const {
  for (const auto& [e, c] : terms_) {
    if (e < 0 || e > top_exp) return false;
    if (coeff(top_exp - e) != c) return false;
  }
  return true;
}

bool Polynomial::all_exponents_even() const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (e % 2 != 0) return false;
  }
  return true;
}

bool Polynomial::all_coefficients_nonnegative() const {
  for (const auto& [e, c] : terms_) {
    (void)e;
    if (c < 0) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs_c != 1 || e == 0) os << abs_c.str();
    if (e > 0) {
      os << "t";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

CyclicPolynomial::CyclicPolynomial(const Polynomial& p, std::int64_t modulus)
    : modulus_(modulus), rep_(p.cyclic_reduce(modulus)) {}

CyclicPolynomial CyclicPolynomial::substitute_power(std::int64_t p) const {
  return CyclicPolynomial(rep_.substitute_power(p), modulus_);
}

} // namespace circ
