#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "circ/datafile.hpp"
#include "circ/json_io.hpp"
#include "circ/multiplier.hpp"

using circ::BigInt;
using circ::EnumerationReport;
using circ::Mode;
using circ::Polynomial;

namespace {

std::string suffix(Mode mode, int order) {
  return std::string(".") + (mode == Mode::undirected ? "u" : "d") + "." + std::to_string(order);
}

// every reference entry for this order/mode must match the computed row
void check_against_reference(const EnumerationReport& rep, const circ::GoldenFile& file) {
  const std::string suf = suffix(rep.mode, rep.modulus);
  int seen = 0;
  for (const auto& [name, want] : file.polys) {
    if (name.size() <= suf.size() || name.substr(name.size() - suf.size()) != suf) continue;
    const std::string row = name.substr(0, name.size() - suf.size());
    INFO("reference entry ", name);
    CHECK(rep.row(row) == want);
    ++seen;
  }
  CHECK(seen > 0);
}

} // namespace

TEST_CASE("mode names") {
  CHECK(circ::mode_from_string("undirected") == Mode::undirected);
  CHECK(circ::mode_from_string("u") == Mode::undirected);
  CHECK(circ::mode_from_string("directed") == Mode::directed);
  CHECK(circ::mode_from_string("d") == Mode::directed);
  CHECK(circ::to_string(Mode::undirected) == "undirected");
  CHECK_THROWS_AS(circ::mode_from_string("bidirected"), std::invalid_argument);
}

TEST_CASE("prime order enumeration") {
  const EnumerationReport u3 = circ::enumerate_prime(3, Mode::undirected);
  CHECK(u3.row("A") == Polynomial::one() + Polynomial::monomial(2));
  const EnumerationReport d3 = circ::enumerate_prime(3, Mode::directed);
  CHECK(d3.row("A") == Polynomial::one() + Polynomial::monomial(1) + Polynomial::monomial(2));

  // order 5 directed: (1/4)[(1+t)^4 + (1+t^2)^2 + 2(1+t^4)]
  const EnumerationReport d5 = circ::enumerate_prime(5, Mode::directed);
  CHECK(d5.row("A") == Polynomial::one() + Polynomial::monomial(1) + Polynomial::monomial(2, 2) +
                           Polynomial::monomial(3) + Polynomial::monomial(4));
  CHECK(d5.row("A").sum_of_coefficients() == 6);
  CHECK(circ::enumerate_prime(7, Mode::directed).row("A").sum_of_coefficients() == 14);
  CHECK(circ::enumerate_prime(7, Mode::undirected).row("A").sum_of_coefficients() == 4);
}

TEST_CASE("order 9 rows match the reference polynomials") {
  const auto file = circ::load_golden_file(circ::default_data_dir() + "/golden/genfns_order9.txt");
  for (const Mode mode : {Mode::undirected, Mode::directed}) {
    const EnumerationReport rep = circ::enumerate_p2(3, mode);
    CHECK(rep.modulus == 9);
    CHECK(rep.rows.size() == 5); // A1, A21, A22, A2, A
    check_against_reference(rep, file);
    // the combination row restates the signed total
    CHECK(rep.row("A") == rep.row("A1") + rep.row("A21") - rep.row("A22"));
    CHECK(rep.row("A2") == rep.row("A21") - rep.row("A22"));
  }
}

TEST_CASE("order 27 rows match the reference polynomials") {
  const auto file = circ::load_golden_file(circ::default_data_dir() + "/golden/genfns_order27.txt");
  for (const Mode mode : {Mode::undirected, Mode::directed}) {
    const EnumerationReport rep = circ::enumerate_p3(3, mode);
    CHECK(rep.modulus == 27);
    CHECK(rep.rows.size() == 17);
    check_against_reference(rep, file);
    CHECK(rep.row("A") == rep.row("A1") + rep.row("A2") + rep.row("A3") + rep.row("A4") +
                              rep.row("A5"));
    for (const auto& c : circ::check_identities(rep)) {
      INFO(c.name, ": ", c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("order 125 rows match the reference polynomials and totals") {
  const auto dir = circ::default_data_dir();
  const auto file = circ::load_golden_file(dir + "/golden/genfns_order125.txt");
  const auto totals = circ::load_golden_file(dir + "/golden/totals_p3.txt");
  for (const Mode mode : {Mode::undirected, Mode::directed}) {
    const EnumerationReport rep = circ::enumerate_p3(5, mode);
    check_against_reference(rep, file);
    const std::string suf = suffix(mode, 125);
    for (const auto& [name, row] : rep.rows) {
      INFO("total of ", name, suf);
      CHECK(row.sum_of_coefficients() == totals.scalars.at(name + suf));
    }
    for (const auto& c : circ::check_identities(rep)) {
      INFO(c.name, ": ", c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("order p^2 congruence identities") {
  for (const int p : {3, 5, 7})
    for (const Mode mode : {Mode::undirected, Mode::directed}) {
      const auto checks = circ::check_identities(circ::enumerate_p2(p, mode));
      CHECK(checks.size() == 2);
      for (const auto& c : checks) {
        INFO("p = ", p, " ", circ::to_string(mode), " ", c.name, ": ", c.detail);
        CHECK(c.pass);
      }
    }
}

TEST_CASE("self-complementary counts match the reference scalars") {
  const auto file = circ::load_golden_file(circ::default_data_dir() + "/golden/selfcomp.txt");
  for (const Mode mode : {Mode::undirected, Mode::directed}) {
    const EnumerationReport rep = circ::enumerate_p3(3, mode);
    const std::string suf = suffix(mode, 27);
    int seen = 0;
    for (const auto& [name, want] : file.scalars) {
      if (name.rfind("sc.", 0) != 0) continue;
      if (name.size() <= suf.size() || name.substr(name.size() - suf.size()) != suf) continue;
      const std::string row = name.substr(3, name.size() - 3 - suf.size());
      INFO(name);
      CHECK(circ::self_complementary_count(rep.row(row), mode) == want);
      ++seen;
    }
    CHECK(seen == 16);
  }
  // spot values: the directed total and the vanishing undirected one
  CHECK(file.scalars.at("sc.A.d.27") == 457);
  CHECK(file.scalars.at("sc.A.u.27") == 0);
}

TEST_CASE("dispatch by order") {
  CHECK(circ::enumerate_order(9, Mode::directed).row("A") ==
        circ::enumerate_p2(3, Mode::directed).row("A"));
  CHECK(circ::enumerate_order(7, Mode::undirected).rows.size() == 1);
  CHECK(circ::enumerate_order(27, Mode::undirected).modulus == 27);
  CHECK_THROWS_AS(circ::enumerate_order(15, Mode::directed), std::invalid_argument);
  CHECK_THROWS_AS(circ::enumerate_order(8, Mode::directed), std::invalid_argument);
  CHECK_THROWS_AS(circ::enumerate_order(81, Mode::directed), std::invalid_argument);
  CHECK_THROWS_AS(circ::enumerate_order(1, Mode::directed), std::invalid_argument);
}

TEST_CASE("report rows survive a JSON round trip") {
  const EnumerationReport rep = circ::enumerate_p2(3, Mode::directed);
  for (const auto& [name, row] : rep.rows) {
    const nlohmann::ordered_json j = circ::to_json(row);
    CHECK(circ::polynomial_from_json(j) == row);
  }
}

TEST_CASE("basic structural properties hold") {
  for (const Mode mode : {Mode::undirected, Mode::directed})
    for (const int n : {3, 5, 9, 25, 27}) {
      const EnumerationReport rep = circ::enumerate_order(n, mode);
      for (const auto& c : circ::check_basic_properties(rep)) {
        INFO("order ", n, " ", circ::to_string(mode), " ", c.name, ": ", c.detail);
        CHECK(c.pass);
      }
    }
}
