#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "circ/datafile.hpp"
#include "circ/schur.hpp"

using circ::BigInt;
using circ::Mode;
using circ::Polynomial;
using circ::RingCatalog;
using circ::RingEntry;

namespace {

RingCatalog catalog(int modulus) {
  return circ::load_ring_catalog(circ::default_data_dir() + "/srings_z" +
                                 std::to_string(modulus) + ".txt");
}

} // namespace

TEST_CASE("catalogs load and satisfy the ring axioms") {
  const RingCatalog c9 = catalog(9);
  CHECK(c9.modulus == 9);
  CHECK(c9.rings.size() == 7);
  CHECK(c9.supports(Mode::undirected));
  CHECK(c9.supports(Mode::directed));

  const RingCatalog c27 = catalog(27);
  CHECK(c27.modulus == 27);
  CHECK(c27.rings.size() == 8);
  CHECK(c27.supports(Mode::undirected));
  CHECK(!c27.supports(Mode::directed));

  for (const auto& cat : {c9, c27})
    for (const auto& ring : cat.rings) {
      INFO("ring ", ring.name, " mod ", cat.modulus);
      CHECK(circ::validate_ring(ring, cat.modulus).empty());
    }

  CHECK(circ::builtin_ring_catalog(9).rings.size() == 7);
  CHECK(circ::builtin_ring_catalog(27).rings.size() == 8);
  CHECK_THROWS_AS(circ::builtin_ring_catalog(25), std::invalid_argument);
}

TEST_CASE("axiom violations are reported") {
  const RingCatalog c9 = catalog(9);
  // drop the zero set: no longer a partition of Z_9, and {0} is missing
  RingEntry broken = c9.rings.front();
  broken.basic_sets.erase(broken.basic_sets.begin());
  CHECK(!circ::validate_ring(broken, 9).empty());

  // split a negation-closed set so that negation no longer maps sets to sets
  RingEntry asym;
  asym.name = "asym";
  asym.basic_sets = {{0}, {1, 2, 4}, {5, 7, 8}, {3}, {6}};
  const auto violations = circ::validate_ring(asym, 9);
  CHECK(!violations.empty());
}

TEST_CASE("subring order on the partition lattice") {
  const RingCatalog c9 = catalog(9);
  const auto& coarsest = c9.rings.front(); // two basic sets
  const auto& finest = c9.rings.back();    // singletons
  CHECK(coarsest.basic_sets.size() == 2);
  CHECK(finest.basic_sets.size() == 9);
  CHECK(circ::is_subring(coarsest, finest));
  CHECK(!circ::is_subring(finest, coarsest));
  for (const auto& ring : c9.rings) {
    CHECK(circ::is_subring(ring, ring));
    CHECK(circ::is_subring(coarsest, ring));
    CHECK(circ::is_subring(ring, finest));
  }
}

TEST_CASE("labelled generating functions count unions of basic sets") {
  const RingCatalog c9 = catalog(9);
  const auto& finest = c9.rings.back();
  CHECK(circ::labelled_genfn(finest, 9, Mode::directed).sum_of_coefficients() == 256);
  CHECK(circ::labelled_genfn(finest, 9, Mode::undirected).sum_of_coefficients() == 16);
  const auto& coarsest = c9.rings.front();
  CHECK(circ::labelled_genfn(coarsest, 9, Mode::directed) ==
        Polynomial::one() + Polynomial::monomial(8));
}

TEST_CASE("order-9 recursion reproduces the reference scalars") {
  const auto file =
      circ::load_golden_file(circ::default_data_dir() + "/golden/structural_order9.txt");
  const RingCatalog c9 = catalog(9);
  for (const Mode mode : {Mode::undirected, Mode::directed}) {
    const auto rep = circ::structural_enumeration(c9, mode);
    const std::string m = mode == Mode::undirected ? "u" : "d";
    for (std::size_t i = 0; i < c9.rings.size(); ++i) {
      const std::string tag = std::to_string(i + 1) + "." + m + ".9";
      INFO("ring index ", i + 1, " mode ", m);
      CHECK(rep.labelled[i].sum_of_coefficients() == file.scalars.at("f" + tag));
      CHECK(rep.unlabelled[i].sum_of_coefficients() == file.scalars.at("g" + tag));
      CHECK(rep.unlabelled[i].all_coefficients_nonnegative());
    }
    CHECK(rep.total.sum_of_coefficients() == file.scalars.at("g." + m + ".9"));
  }
  CHECK(file.scalars.at("g.u.9") == 8);
  CHECK(file.scalars.at("g.d.9") == 51);
  CHECK(file.scalars.at("g7.d.9") == 38);
}

TEST_CASE("order-27 recursion reproduces the reference polynomials") {
  const auto file =
      circ::load_golden_file(circ::default_data_dir() + "/golden/structural_order27.txt");
  const RingCatalog c27 = catalog(27);
  const auto rep = circ::structural_enumeration(c27, Mode::undirected);
  for (std::size_t i = 0; i < c27.rings.size(); ++i) {
    const std::string tag = std::to_string(i + 1) + ".z27";
    INFO("ring index ", i + 1);
    CHECK(rep.labelled[i] == file.polys.at("f" + tag));
    CHECK(rep.unlabelled[i] == file.polys.at("g" + tag));
  }
  CHECK(rep.total == file.polys.at("g.z27"));
  CHECK(rep.total.sum_of_coefficients() == 928);

  // the two methods count the same classes
  CHECK(rep.total == circ::enumerate_p3(3, Mode::undirected).row("A"));

  // the catalog is not complete for directed enumeration
  CHECK_THROWS_AS(circ::structural_enumeration(c27, Mode::directed), std::invalid_argument);
}

TEST_CASE("order-9 structural totals equal the multiplier totals") {
  const RingCatalog c9 = catalog(9);
  for (const Mode mode : {Mode::undirected, Mode::directed})
    CHECK(circ::structural_enumeration(c9, mode).total ==
          circ::enumerate_p2(3, mode).row("A"));
}

TEST_CASE("brute-force group orders confirm one catalog entry") {
  const RingCatalog c9 = catalog(9);
  // the finest partition: color automorphisms are exactly the translations
  const auto& finest = c9.rings.back();
  const auto orders = circ::brute_color_group_orders(finest, 9);
  CHECK(orders.aut == finest.aut_order);
  CHECK(orders.normalizer == finest.normalizer_order);
  CHECK(orders.aut == 9);
  CHECK(orders.normalizer == 54);
}

TEST_CASE("catalog parser rejects malformed files") {
  const std::string path = "/tmp/circ_bad_catalog.txt";
  {
    std::ofstream out(path);
    out << "version 1\nmodulus 9\nring S1\naut_order 10\nnormalizer_order 10\n"
        << "set 0\nset 1 2 4 5 7 8\n"; // missing the {3, 6} residues and "end"
  }
  CHECK_THROWS(circ::load_ring_catalog(path));
  CHECK_THROWS(circ::load_ring_catalog("/nonexistent/catalog.txt"));
  std::remove(path.c_str());
}
