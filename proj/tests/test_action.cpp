#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "circ/action.hpp"

using circ::ActionComponent;
using circ::CycleMonomial;
using circ::element_cycles;
using circ::full_tuple_group;
using circ::invariance_blocks;
using circ::layer;
using circ::make_pair_group;
using circ::orbit_weight_enumerator;
using circ::pair_class_enumerator;
using circ::Polynomial;
using circ::single_multiplier_group;
using circ::singleton_blocks;
using circ::symmetrize;
using circ::TupleGroup;
using circ::unit_inverse;
using circ::units;

TEST_CASE("units and inverses") {
  CHECK(units(9) == std::vector<int>{1, 2, 4, 5, 7, 8});
  CHECK(units(27).size() == 18);
  CHECK(units(125).size() == 100);
  CHECK(unit_inverse(2, 9) == 5);
  CHECK(unit_inverse(4, 27) == 7);
  for (int u : units(27)) CHECK(u * unit_inverse(u, 27) % 27 == 1);
  CHECK_THROWS_AS(unit_inverse(3, 9), std::invalid_argument);
}

TEST_CASE("cycle structure of a multiplier on singleton systems") {
  // x -> 2x on the nonzero residues mod 9: a 6-cycle on the units and a
  // 2-cycle on {3, 6}
  ActionComponent comp;
  comp.systems = {singleton_blocks(layer(3, 2, 0), 9), singleton_blocks(layer(3, 2, 1), 9)};
  const CycleMonomial m2 = element_cycles(2, comp);
  CHECK(m2.factors == std::vector<std::pair<int, int>>{{2, 1}, {6, 1}});
  CHECK(m2.to_string() == "x2x6");
  CHECK(m2.subset_enumerator() ==
        Polynomial::one_plus_power(2) * Polynomial::one_plus_power(6));

  const CycleMonomial id = element_cycles(1, comp);
  CHECK(id.factors == std::vector<std::pair<int, int>>(8, {1, 1}));
  CHECK(id.to_string() == "x1^8");
}

TEST_CASE("cycle structure on weighted blocks") {
  // the symmetrized order-9 systems: one weight-6 block and one weight-2 block
  ActionComponent comp;
  comp.systems = {symmetrize(invariance_blocks(3, 2, 0, 0)),
                  symmetrize(singleton_blocks(layer(3, 2, 1), 9))};
  const CycleMonomial id = element_cycles(1, comp);
  CHECK(id.factors == std::vector<std::pair<int, int>>{{1, 2}, {1, 6}});
  CHECK(id.to_string() == "x1[w2]x1[w6]");
  CHECK(id.subset_enumerator() ==
        Polynomial::one_plus_power(2) * Polynomial::one_plus_power(6));

  // a multiplier must permute every system's blocks
  ActionComponent bad;
  bad.systems = {singleton_blocks(layer(3, 2, 0), 9)};
  CHECK_THROWS_AS(element_cycles(3, bad), std::invalid_argument);
}

TEST_CASE("tuple group construction") {
  CHECK(single_multiplier_group(27).size() == 18);
  CHECK(single_multiplier_group(27).arity == 1);
  CHECK(full_tuple_group(9, 2).size() == 36);
  CHECK(make_pair_group(27, 3).size() == 162);
  CHECK(make_pair_group(125, 5).size() == 2500);
  CHECK(make_pair_group(343, 7).size() == 14406);
  CHECK(make_pair_group(27, 3).pair_congruence_modulus == 3);
  CHECK(single_multiplier_group(27).pair_congruence_modulus == 0);
  for (const auto& pair : make_pair_group(27, 3).elements) CHECK(pair[0] % 3 == pair[1] % 3);
  CHECK_THROWS_AS(make_pair_group(27, 4), std::invalid_argument); // 4 does not divide 27
  CHECK_THROWS_AS(make_pair_group(27, 1), std::invalid_argument);
}

TEST_CASE("orbit-weight enumerator, worked order-9 subproblems") {
  const TupleGroup g = single_multiplier_group(9);

  // full multiplier equivalence on both layers, undirected: the average of
  // 2 (1+t^2)^4 + 4 (1+t^2)(1+t^6) over the six units
  ActionComponent all_sym;
  all_sym.systems = {symmetrize(singleton_blocks(layer(3, 2, 0), 9)),
                     symmetrize(singleton_blocks(layer(3, 2, 1), 9))};
  const Polynomial a21u = orbit_weight_enumerator(g, std::vector{all_sym});
  CHECK(a21u == Polynomial::one() + Polynomial::monomial(2, 2) + Polynomial::monomial(4, 2) +
                    Polynomial::monomial(6, 2) + Polynomial::monomial(8));

  // units constrained to orbits of 4, layer 1 free, directed:
  // ((1+t^3)^2 (1+t)^2 + (1+t^6)(1+t^2)) / 2
  ActionComponent overlap;
  overlap.systems = {invariance_blocks(3, 2, 0, 0), singleton_blocks(layer(3, 2, 1), 9)};
  const Polynomial a22d = orbit_weight_enumerator(g, std::vector{overlap});
  Polynomial want = Polynomial::one();
  for (int e = 1; e <= 8; ++e) want += Polynomial::monomial(e, e == 4 ? 2 : 1);
  CHECK(a22d == want);
  CHECK(a22d.sum_of_coefficients() == 10);

  // serial and parallel paths agree
  CHECK(orbit_weight_enumerator(g, std::vector{overlap}, false) == a22d);
}

TEST_CASE("congruence pair groups factor through their classes") {
  // the order-27 two-coordinate subproblem: coordinate 0 acts on the upper
  // layers, coordinate 1 on the unit blocks
  ActionComponent upper;
  upper.systems = {singleton_blocks(layer(3, 3, 1), 27), singleton_blocks(layer(3, 3, 2), 27)};
  ActionComponent unit_blocks;
  unit_blocks.systems = {invariance_blocks(3, 3, 0, 0)};
  const std::vector<ActionComponent> comps{upper, unit_blocks};

  const TupleGroup pairs = make_pair_group(27, 3);
  const Polynomial factored = pair_class_enumerator(pairs, comps);
  const Polynomial exhaustive = orbit_weight_enumerator(pairs, comps);
  CHECK(factored == exhaustive);
  CHECK(pair_class_enumerator(pairs, comps, false) == factored);

  // the factored path requires the congruence flag and two coordinates
  CHECK_THROWS_AS(pair_class_enumerator(single_multiplier_group(27), std::vector{upper}),
                  std::invalid_argument);
}
