#pragma once

// Enumeration of circulant (di)graphs of odd prime-power order p^k (k <= 3)
// by valency, via Burnside averaging over multiplier groups.
//
// Each isomorphism criterion contributes one "subproblem": an inclusion-
// exclusion term counting connecting sets up to a specific multiplier
// equivalence. A subproblem is a product of independent factors, each a
// tuple group acting on block-system components; its generating function is
// the product of the factors' orbit-weight enumerators. The signed sum of
// all subproblems is the generating function of isomorphism classes.

#include <string>
#include <utility>
#include <vector>

#include "circ/action.hpp"
#include "circ/bigint.hpp"
#include "circ/poly.hpp"

namespace circ {

enum class Mode { undirected, directed };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s); // accepts "undirected"/"u"/"directed"/"d"

// one independent coordinate of a subproblem: a group of unit tuples acting
// on one component per tuple coordinate
struct IndependentFactor {
  TupleGroup group;
  std::vector<ActionComponent> components;
};

struct SubproblemSpec {
  std::string name;
  int sign = 1; // contribution sign in the total
  std::vector<IndependentFactor> factors;
};

// product over factors of the factor's orbit-weight enumerator
Polynomial evaluate_subproblem(const SubproblemSpec& spec, bool parallel = true);

// the subproblem decompositions for orders p^2 (3 terms) and p^3 (11 terms)
std::vector<SubproblemSpec> build_specs_p2(int p, Mode mode);
std::vector<SubproblemSpec> build_specs_p3(int p, Mode mode);

// all generating functions of one enumeration: elementary subproblem rows in
// canonical order, interleaved with their differences/combinations, ending
// with the total row "A"
struct EnumerationReport {
  int modulus = 0;
  Mode mode = Mode::directed;
  std::vector<std::pair<std::string, Polynomial>> rows;

  bool has_row(const std::string& name) const;
  const Polynomial& row(const std::string& name) const; // throws std::out_of_range
};

EnumerationReport enumerate_prime(int p, Mode mode, bool parallel = true);
EnumerationReport enumerate_p2(int p, Mode mode, bool parallel = true);
EnumerationReport enumerate_p3(int p, Mode mode, bool parallel = true);
// dispatches on n = p, p^2 or p^3 (p an odd prime); throws otherwise
EnumerationReport enumerate_order(int n, Mode mode, bool parallel = true);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail; // empty when pass
};

// per-row structural invariants: palindromic coefficients over [0, n-1],
// nonnegativity, undirected rows supported on even valencies only, and
// endpoint coefficients 1 on elementary rows and the total
std::vector<CheckResult> check_basic_properties(const EnumerationReport& rep);

// the congruence/scalar identities between subproblem rows: ten checks for
// order p^3, two for order p^2, none for prime order
std::vector<CheckResult> check_identities(const EnumerationReport& rep);

// number of self-complementary classes counted by a total generating
// function: directed A(-1); undirected A with t^2 := -1 (throws OddExponent
// if the row has an odd exponent)
BigInt self_complementary_count(const Polynomial& genfn, Mode mode);

} // namespace circ
