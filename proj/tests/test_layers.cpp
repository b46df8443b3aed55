#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "circ/layers.hpp"

using circ::BlockSystem;
using circ::invariance_blocks;
using circ::invariance_multiplier;
using circ::layer;
using circ::prime_power_exponent;
using circ::singleton_blocks;
using circ::symmetrize;

TEST_CASE("prime power recognition") {
  CHECK(prime_power_exponent(3, 3) == 1);
  CHECK(prime_power_exponent(9, 3) == 2);
  CHECK(prime_power_exponent(27, 3) == 3);
  CHECK(prime_power_exponent(343, 7) == 3);
  CHECK_THROWS_AS(prime_power_exponent(12, 3), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_exponent(27, 5), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_exponent(8, 2), std::invalid_argument); // p must be odd
  CHECK_THROWS_AS(prime_power_exponent(1, 3), std::invalid_argument);
}

TEST_CASE("layers partition the nonzero residues by valuation") {
  CHECK(layer(3, 3, 0) ==
        std::vector<int>{1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, 25, 26});
  CHECK(layer(3, 3, 1) == std::vector<int>{3, 6, 12, 15, 21, 24});
  CHECK(layer(3, 3, 2) == std::vector<int>{9, 18});
  CHECK(layer(3, 2, 1) == std::vector<int>{3, 6});
  CHECK(layer(5, 2, 0).size() == 20);
  CHECK(layer(5, 2, 1) == std::vector<int>{5, 10, 15, 20});

  // sizes: |Y_i| = phi(p^{k-i}) = p^{k-i-1}(p-1)
  for (int i = 0; i < 3; ++i)
    CHECK(layer(7, 3, i).size() == std::size_t(6) * (i == 0 ? 49 : i == 1 ? 7 : 1));
  CHECK_THROWS_AS(layer(3, 3, 3), std::invalid_argument);
}

TEST_CASE("invariance multipliers 1 + p^(k-i-j-1)") {
  CHECK(invariance_multiplier(3, 2, 0, 0) == 4);
  CHECK(invariance_multiplier(3, 3, 0, 0) == 10);
  CHECK(invariance_multiplier(3, 3, 0, 1) == 4);
  CHECK(invariance_multiplier(3, 3, 1, 0) == 4);
  CHECK(invariance_multiplier(5, 3, 0, 0) == 26);
  CHECK(invariance_multiplier(5, 3, 0, 1) == 6);
  CHECK(invariance_multiplier(5, 3, 1, 0) == 6);
  CHECK(invariance_multiplier(7, 3, 0, 0) == 50);
}

TEST_CASE("block systems of the three order-27 invariance conditions") {
  // orbits of 10 on the units: six blocks of three
  const BlockSystem y0_star = invariance_blocks(3, 3, 0, 0);
  CHECK(y0_star.modulus == 27);
  CHECK(y0_star.blocks == std::vector<std::vector<int>>{{1, 10, 19},
                                                        {2, 11, 20},
                                                        {4, 13, 22},
                                                        {5, 14, 23},
                                                        {7, 16, 25},
                                                        {8, 17, 26}});
  CHECK(y0_star.total_weight() == 18);

  // orbits of 4 on the units: two blocks of nine
  const BlockSystem y0_star_star = invariance_blocks(3, 3, 0, 1);
  CHECK(y0_star_star.blocks == std::vector<std::vector<int>>{{1, 4, 7, 10, 13, 16, 19, 22, 25},
                                                             {2, 5, 8, 11, 14, 17, 20, 23, 26}});

  // orbits of 4 on the middle layer: two blocks of three
  const BlockSystem y1_star = invariance_blocks(3, 3, 1, 0);
  CHECK(y1_star.blocks == std::vector<std::vector<int>>{{3, 12, 21}, {6, 15, 24}});

  // order 9: orbits of 4 on the units
  const BlockSystem y0_star_9 = invariance_blocks(3, 2, 0, 0);
  CHECK(y0_star_9.blocks == std::vector<std::vector<int>>{{1, 4, 7}, {2, 5, 8}});
}

TEST_CASE("singleton systems") {
  const auto l1 = layer(3, 2, 1);
  const BlockSystem s = singleton_blocks(l1, 9);
  CHECK(s.blocks == std::vector<std::vector<int>>{{3}, {6}});
  CHECK(s.total_weight() == 2);
  CHECK(s.weight(0) == 1);
}

TEST_CASE("symmetrization merges blocks with their negations") {
  // {1,4,7} and {2,5,8} are each other's negations mod 9
  const BlockSystem merged = symmetrize(invariance_blocks(3, 2, 0, 0));
  CHECK(merged.blocks == std::vector<std::vector<int>>{{1, 2, 4, 5, 7, 8}});
  CHECK(merged.weight(0) == 6);

  // mod 27 the six orbit blocks of 10 pair up into three symmetric blocks
  const BlockSystem y0s = symmetrize(invariance_blocks(3, 3, 0, 0));
  CHECK(y0s.blocks == std::vector<std::vector<int>>{{1, 8, 10, 17, 19, 26},
                                                    {2, 7, 11, 16, 20, 25},
                                                    {4, 5, 13, 14, 22, 23}});

  // blocks already closed under negation are untouched
  const BlockSystem y2 = singleton_blocks(layer(3, 3, 2), 27); // {9}, {18}
  const BlockSystem y2s = symmetrize(y2);
  CHECK(y2s.blocks == std::vector<std::vector<int>>{{9, 18}});

  // idempotence
  CHECK(symmetrize(y0s) == y0s);
  CHECK(symmetrize(merged) == merged);

  // weight is preserved
  CHECK(y0s.total_weight() == 18);
}
