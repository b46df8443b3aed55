#pragma once

// Sparse univariate polynomials over arbitrary-precision integers, plus a
// cyclic variant representing classes in Z[t]/(t^N - 1). Every division in
// this project must be exact (orbit counts are integers); inexact division
// throws NonIntegralCount instead of truncating.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "circ/bigint.hpp"

namespace circ {

// An orbit-count average failed to divide exactly: always a logic error in
// the action being averaged, never something to round away.
class NonIntegralCount : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// substitute_t2_minus1 met an odd exponent, so "t^2 := -1" is undefined.
class OddExponent : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Polynomial {
public:
  using Terms = std::map<std::int64_t, BigInt>; // exponent -> nonzero coefficient

  Polynomial() = default;

  static Polynomial monomial(std::int64_t exp, BigInt coeff = 1);
  static Polynomial one() { return monomial(0); }
  // 1 + t^k, the per-orbit factor of every subset enumerator in this project
  static Polynomial one_plus_power(std::int64_t k);

  const Terms& terms() const { return terms_; }
  BigInt coeff(std::int64_t exp) const;
  bool is_zero() const { return terms_.empty(); }
  std::int64_t degree() const; // degree of the zero polynomial is -1

  bool operator==(const Polynomial&) const = default;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const BigInt& scalar) const;

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }

  // t -> t^p without reduction (exponents multiply by p; p >= 1)
  Polynomial substitute_power(std::int64_t p) const;
  // reduce exponents modulo `modulus`, i.e. the image in Z[t]/(t^modulus - 1)
  Polynomial cyclic_reduce(std::int64_t modulus) const;
  // divide every coefficient by k, throwing NonIntegralCount on remainder
  Polynomial divided_exact(const BigInt& k) const;

  BigInt evaluate(const BigInt& x) const;
  BigInt sum_of_coefficients() const { return evaluate(1); }
  BigInt alternating_sum() const { return evaluate(-1); }
  // substitute t^2 := -1 (requires all exponents even): sum c_{2k} (-1)^k
  BigInt substitute_t2_minus1() const;

  // true iff coefficients read the same from both ends of [0, top_exp]
  bool palindromic(std::int64_t top_exp) const;
  bool all_exponents_even() const;
  bool all_coefficients_nonnegative() const;

  // descending human-readable form, e.g. "t^8 + 2t^6 + 2t^4 + 2t^2 + 1"
  std::string to_string() const;

private:
  Terms terms_;
  void set(std::int64_t exp, BigInt c);
};

// A class in Z[t]/(t^N - 1), kept distinct from Polynomial so congruence
// identities cannot be mixed up with plain equality.
class CyclicPolynomial {
public:
  CyclicPolynomial(const Polynomial& p, std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  const Polynomial& representative() const { return rep_; } // exponents in [0, N)

  // t -> t^p, well-defined on Z[t]/(t^N - 1)
  CyclicPolynomial substitute_power(std::int64_t p) const;

  bool operator==(const CyclicPolynomial&) const = default;

private:
  std::int64_t modulus_;
  Polynomial rep_;
};

} // namespace circ
