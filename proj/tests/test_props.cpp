// Cross-cutting property suites: invariants that hold across modules rather
// than worked examples tied to one function.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "circ/datafile.hpp"
#include "circ/json_io.hpp"
#include "circ/multiplier.hpp"
#include "circ/oracle.hpp"
#include "circ/schur.hpp"

using circ::CyclicPolynomial;
using circ::Mode;
using circ::Polynomial;

TEST_CASE("palindromicity, endpoints and parity of every enumeration") {
  for (const Mode mode : {Mode::undirected, Mode::directed})
    for (const int n : {3, 5, 7, 9, 25, 27}) {
      const auto rep = circ::enumerate_order(n, mode);
      for (const auto& c : circ::check_basic_properties(rep)) {
        INFO("order ", n, " ", circ::to_string(mode), " ", c.name, ": ", c.detail);
        CHECK(c.pass);
      }
      // spot-check the meaning: totals are palindromic with unit endpoints
      const Polynomial& a = rep.row("A");
      CHECK(a.coeff(0) == 1);
      CHECK(a.coeff(n - 1) == 1);
      CHECK(a.palindromic(n - 1));
      if (mode == Mode::undirected) CHECK(a.all_exponents_even());
    }
}

TEST_CASE("Burnside averages are integral for every subproblem") {
  // evaluate_subproblem divides by the group order and throws on any
  // non-integral coefficient; success across all specs is the property
  for (const Mode mode : {Mode::undirected, Mode::directed}) {
    for (const auto& spec : circ::build_specs_p2(5, mode))
      CHECK(circ::evaluate_subproblem(spec).all_coefficients_nonnegative());
    for (const auto& spec : circ::build_specs_p3(3, mode))
      CHECK(circ::evaluate_subproblem(spec).all_coefficients_nonnegative());
  }
}

TEST_CASE("the substitution t -> t^p has order three on the cyclic ring") {
  for (const int p : {3, 5, 7}) {
    const std::int64_t modulus = static_cast<std::int64_t>(p) * p * p - 1;
    const CyclicPolynomial t(Polynomial::monomial(1), modulus);
    CHECK(t.substitute_power(p).substitute_power(p).substitute_power(p) == t);
    CHECK(t.substitute_power(p) != t);
  }
}

TEST_CASE("ring catalogs satisfy the ring axioms") {
  for (const int modulus : {9, 27}) {
    const auto cat = circ::builtin_ring_catalog(modulus);
    for (const auto& ring : cat.rings) {
      INFO("ring ", ring.name, " mod ", modulus);
      CHECK(circ::validate_ring(ring, cat.modulus).empty());
    }
  }
}

TEST_CASE("JSON round trip over the largest frozen polynomials") {
  const auto file =
      circ::load_golden_file(circ::default_data_dir() + "/golden/genfns_order125.txt");
  CHECK(!file.polys.empty());
  for (const auto& [name, poly] : file.polys) {
    INFO(name);
    CHECK(circ::polynomial_from_json(circ::to_json(poly)) == poly);
  }
}

TEST_CASE("symmetrization is idempotent on every invariance system") {
  using circ::symmetrize;
  for (const auto& [i, j] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}}) {
    const auto sys = circ::invariance_blocks(3, 3, i, j);
    CHECK(symmetrize(symmetrize(sys)) == symmetrize(sys));
    CHECK(symmetrize(sys).total_weight() == sys.total_weight());
  }
}

TEST_CASE("independent coordinates factor the full tuple group") {
  // a rank-2 tuple group acting on independent components equals the product
  // of the single-multiplier enumerators
  circ::ActionComponent c0;
  c0.systems = {circ::invariance_blocks(3, 2, 0, 0)};
  circ::ActionComponent c1;
  c1.systems = {circ::singleton_blocks(circ::layer(3, 2, 1), 9)};
  const auto joint = circ::orbit_weight_enumerator(circ::full_tuple_group(9, 2),
                                                   std::vector{c0, c1});
  const auto f0 = circ::orbit_weight_enumerator(circ::single_multiplier_group(9),
                                                std::vector{c0});
  const auto f1 = circ::orbit_weight_enumerator(circ::single_multiplier_group(9),
                                                std::vector{c1});
  CHECK(joint == f0 * f1);
}

TEST_CASE("congruence-class factorization agrees with the exhaustive sum") {
  circ::ActionComponent upper;
  upper.systems = {circ::singleton_blocks(circ::layer(3, 2, 1), 9)};
  circ::ActionComponent lower;
  lower.systems = {circ::invariance_blocks(3, 2, 0, 0)};
  const auto g = circ::make_pair_group(9, 3);
  const std::vector comps{upper, lower};
  CHECK(circ::pair_class_enumerator(g, comps) == circ::orbit_weight_enumerator(g, comps));
}

TEST_CASE("self-complementary counts are consistent between definitions") {
  // directed: A(-1); undirected: A with t^2 := -1. For the undirected total
  // at order 9 every class survives negation of t^2 in pairs except none.
  const auto u9 = circ::enumerate_p2(3, Mode::undirected).row("A");
  CHECK(circ::self_complementary_count(u9, Mode::undirected) == u9.substitute_t2_minus1());
  const auto d9 = circ::enumerate_p2(3, Mode::directed).row("A");
  CHECK(circ::self_complementary_count(d9, Mode::directed) == d9.alternating_sum());
}
