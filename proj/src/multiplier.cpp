#include "circ/multiplier.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "circ/layers.hpp"

namespace circ {

std::string to_string(Mode mode) { return mode == Mode::undirected ? "undirected" : "directed"; }

Mode mode_from_string(const std::string& s) {
  if (s == "undirected" || s == "u") return Mode::undirected;
  if (s == "directed" || s == "d") return Mode::directed;
  throw std::invalid_argument("unknown mode: " + s + " (expected undirected|directed)");
}

Polynomial evaluate_subproblem(const SubproblemSpec& spec, bool parallel) {
  Polynomial out = Polynomial::one();
  for (const auto& f : spec.factors) {
    const Polynomial factor = f.group.pair_congruence_modulus > 0
                                  ? pair_class_enumerator(f.group, f.components, parallel)
                                  : orbit_weight_enumerator(f.group, f.components, parallel);
    out = out * factor;
  }
  return out;
}

namespace {

BlockSystem maybe_sym(BlockSystem sys, Mode mode) {
  return mode == Mode::undirected ? symmetrize(sys) : sys;
}

ActionComponent comp(std::vector<BlockSystem> systems) { return ActionComponent{std::move(systems)}; }

int smallest_prime_factor(int n) {
  for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

} // namespace

std::vector<SubproblemSpec> build_specs_p2(int p, Mode mode) {
  const int n = p * p;
  const TupleGroup g1 = single_multiplier_group(n);
  const BlockSystem y0s = maybe_sym(singleton_blocks(layer(p, 2, 0), n), mode);
  const BlockSystem y1s = maybe_sym(singleton_blocks(layer(p, 2, 1), n), mode);
  const BlockSystem y0star = maybe_sym(invariance_blocks(p, 2, 0, 0), mode); // orbits of 1+p

  std::vector<SubproblemSpec> specs;
  // independent multipliers on the coarsened unit layer and on the p-layer
  specs.push_back({"A1", +1, {{g1, {comp({y0star})}}, {g1, {comp({y1s})}}}});
  // one shared multiplier on everything
  specs.push_back({"A21", +1, {{g1, {comp({y0s, y1s})}}}});
  // one shared multiplier, unit layer coarsened (the overlap of the above)
  specs.push_back({"A22", -1, {{g1, {comp({y0star, y1s})}}}});
  return specs;
}

std::vector<SubproblemSpec> build_specs_p3(int p, Mode mode) {
  const int n = p * p * p;
  const TupleGroup g1 = single_multiplier_group(n);
  const TupleGroup g2 = make_pair_group(n, p); // {(a, a') : a' == a mod p}

  const BlockSystem y0s = maybe_sym(singleton_blocks(layer(p, 3, 0), n), mode);
  const BlockSystem y1s = maybe_sym(singleton_blocks(layer(p, 3, 1), n), mode);
  const BlockSystem y2s = maybe_sym(singleton_blocks(layer(p, 3, 2), n), mode);
  const BlockSystem y0star = maybe_sym(invariance_blocks(p, 3, 0, 0), mode);  // orbits of 1+p^2 on units
  const BlockSystem y0sstar = maybe_sym(invariance_blocks(p, 3, 0, 1), mode); // orbits of 1+p on units
  const BlockSystem y1star = maybe_sym(invariance_blocks(p, 3, 1, 0), mode);  // orbits of 1+p on p-layer

  std::vector<SubproblemSpec> specs;
  // three independent multipliers on fully coarsened layers
  specs.push_back({"A1", +1, {{g1, {comp({y0sstar})}}, {g1, {comp({y1star})}}, {g1, {comp({y2s})}}}});
  // one shared multiplier on all elements
  specs.push_back({"A21", +1, {{g1, {comp({y0s, y1s, y2s})}}}});
  specs.push_back({"A22", -1, {{g1, {comp({y0star, y1s, y2s})}}}});
  // shared multiplier on layers 0,1 (coarsened), independent one on layer 2
  specs.push_back({"A31", +1, {{g1, {comp({y0star, y1star})}}, {g1, {comp({y2s})}}}});
  specs.push_back({"A32", -1, {{g1, {comp({y0sstar, y1star})}}, {g1, {comp({y2s})}}}});
  // shared multiplier on layers 1,2, independent one on coarsened layer 0
  specs.push_back({"A41", +1, {{g1, {comp({y1s, y2s})}}, {g1, {comp({y0sstar})}}}});
  specs.push_back({"A42", -1, {{g1, {comp({y1star, y2s})}}, {g1, {comp({y0sstar})}}}});
  // congruent pairs (a, a'): a on layers 1,2 and a' on coarsened layer 0
  specs.push_back({"A51", +1, {{g2, {comp({y1s, y2s}), comp({y0star})}}}});
  specs.push_back({"A521", -1, {{g2, {comp({y1s, y2s}), comp({y0sstar})}}}});
  specs.push_back({"A522", -1, {{g2, {comp({y1star, y2s}), comp({y0star})}}}});
  specs.push_back({"A523", +1, {{g2, {comp({y1star, y2s}), comp({y0sstar})}}}});
  return specs;
}

bool EnumerationReport::has_row(const std::string& name) const {
  for (const auto& [rn, poly] : rows)
    if (rn == name) return true;
  return false;
}

const Polynomial& EnumerationReport::row(const std::string& name) const {
  for (const auto& [rn, poly] : rows)
    if (rn == name) return poly;
  throw std::out_of_range("no such row: " + name);
}

namespace {

EnumerationReport report_from_specs(int n, Mode mode, const std::vector<SubproblemSpec>& specs,
                                    bool parallel) {
  EnumerationReport rep;
  rep.modulus = n;
  rep.mode = mode;
  std::map<std::string, Polynomial> v;
  Polynomial total;
  for (const auto& s : specs) {
    Polynomial val = evaluate_subproblem(s, parallel);
    if (s.sign > 0)
      total += val;
    else
      total -= val;
    v.emplace(s.name, std::move(val));
  }
  auto& rows = rep.rows;
  rows.emplace_back("A1", v.at("A1"));
  rows.emplace_back("A21", v.at("A21"));
  rows.emplace_back("A22", v.at("A22"));
  rows.emplace_back("A2", v.at("A21") - v.at("A22"));
  if (v.count("A31")) {
    rows.emplace_back("A31", v.at("A31"));
    rows.emplace_back("A32", v.at("A32"));
    rows.emplace_back("A3", v.at("A31") - v.at("A32"));
    rows.emplace_back("A41", v.at("A41"));
    rows.emplace_back("A42", v.at("A42"));
    rows.emplace_back("A4", v.at("A41") - v.at("A42"));
    rows.emplace_back("A51", v.at("A51"));
    rows.emplace_back("A521", v.at("A521"));
    rows.emplace_back("A522", v.at("A522"));
    rows.emplace_back("A523", v.at("A523"));
    rows.emplace_back("A52", v.at("A521") + v.at("A522") - v.at("A523"));
    rows.emplace_back("A5", v.at("A51") - v.at("A521") - v.at("A522") + v.at("A523"));
  }
  rows.emplace_back("A", total);
  return rep;
}

} // namespace

EnumerationReport enumerate_prime(int p, Mode mode, bool parallel) {
  if (prime_power_exponent(p, p) != 1) throw std::invalid_argument("enumerate_prime: bad order");
  BlockSystem sys = singleton_blocks(layer(p, 1, 0), p);
  if (mode == Mode::undirected) sys = symmetrize(sys);
  EnumerationReport rep;
  rep.modulus = p;
  rep.mode = mode;
  rep.rows.emplace_back(
      "A", orbit_weight_enumerator(single_multiplier_group(p), std::vector<ActionComponent>{comp({sys})},
                                   parallel));
  return rep;
}

EnumerationReport enumerate_p2(int p, Mode mode, bool parallel) {
  return report_from_specs(p * p, mode, build_specs_p2(p, mode), parallel);
}

EnumerationReport enumerate_p3(int p, Mode mode, bool parallel) {
  return report_from_specs(p * p * p, mode, build_specs_p3(p, mode), parallel);
}

EnumerationReport enumerate_order(int n, Mode mode, bool parallel) {
  if (n < 3) throw std::invalid_argument("order must be an odd prime power >= 3");
  const int p = smallest_prime_factor(n);
  const int k = prime_power_exponent(n, p); // validates n = p^k, p odd prime
  switch (k) {
  case 1:
    return enumerate_prime(p, mode, parallel);
  case 2:
    return enumerate_p2(p, mode, parallel);
  case 3:
    return enumerate_p3(p, mode, parallel);
  default:
    throw std::invalid_argument("order must be p, p^2 or p^3 for an odd prime p");
  }
}

std::vector<CheckResult> check_basic_properties(const EnumerationReport& rep) {
  const std::int64_t top = rep.modulus - 1;
  // rows counting whole equivalence classes of connecting sets: exactly one
  // empty and one full set, so both endpoint coefficients are 1
  static const std::set<std::string> endpoint_rows = {"A",   "A1",  "A21",  "A22",  "A31",  "A32",
                                                      "A41", "A42", "A51",  "A521", "A522", "A523"};
  std::vector<CheckResult> out;
  for (const auto& [name, poly] : rep.rows) {
    std::string why;
    if (!poly.palindromic(top)) why += "not palindromic over [0," + std::to_string(top) + "]; ";
    if (!poly.all_coefficients_nonnegative()) why += "negative coefficient; ";
    if (rep.mode == Mode::undirected && !poly.all_exponents_even()) why += "odd valency present; ";
    if (endpoint_rows.count(name) != 0) {
      if (poly.coeff(0) != 1) why += "constant coefficient != 1; ";
      if (poly.coeff(top) != 1) why += "top coefficient != 1; ";
    }
    out.push_back({"properties(" + name + ")", why.empty(), why});
  }
  return out;
}

namespace {

CheckResult congruence_check(const EnumerationReport& rep, int p, const std::string& lhs,
                             const std::string& rhs) {
  const std::int64_t N = rep.modulus - 1;
  std::ostringstream name;
  name << lhs << "(t) == " << rhs << "(t^" << p << ") (mod t^" << N << " - 1)";
  const CyclicPolynomial L(rep.row(lhs), N);
  const CyclicPolynomial R = CyclicPolynomial(rep.row(rhs), N).substitute_power(p);
  CheckResult res{name.str(), L == R, ""};
  if (!res.pass)
    res.detail = "lhs = " + L.representative().to_string() + "; rhs = " + R.representative().to_string();
  return res;
}

CheckResult scalar_check(const EnumerationReport& rep, const std::string& lhs, const std::string& rhs) {
  const BigInt a = rep.row(lhs).sum_of_coefficients();
  const BigInt b = rep.row(rhs).sum_of_coefficients();
  CheckResult res{lhs + "(1) == " + rhs + "(1)", a == b, ""};
  if (!res.pass) res.detail = a.str() + " != " + b.str();
  return res;
}

} // namespace

std::vector<CheckResult> check_identities(const EnumerationReport& rep) {
  const int p = smallest_prime_factor(rep.modulus);
  const int k = prime_power_exponent(rep.modulus, p);
  std::vector<CheckResult> out;
  if (k == 2) {
    out.push_back(congruence_check(rep, p, "A1", "A1"));
    out.push_back(congruence_check(rep, p, "A22", "A22"));
    return out;
  }
  if (k != 3) return out;
  out.push_back(congruence_check(rep, p, "A31", "A41"));
  out.push_back(congruence_check(rep, p, "A32", "A42"));
  out.push_back(congruence_check(rep, p, "A522", "A521"));
  out.push_back(congruence_check(rep, p, "A3", "A4"));
  out.push_back(congruence_check(rep, p, "A1", "A1"));
  out.push_back(congruence_check(rep, p, "A523", "A523"));
  out.push_back(scalar_check(rep, "A31", "A41"));
  out.push_back(scalar_check(rep, "A32", "A42"));
  out.push_back(scalar_check(rep, "A521", "A522"));
  out.push_back(scalar_check(rep, "A3", "A4"));
  return out;
}

BigInt self_complementary_count(const Polynomial& genfn, Mode mode) {
  return mode == Mode::directed ? genfn.alternating_sum() : genfn.substitute_t2_minus1();
}

} // namespace circ
