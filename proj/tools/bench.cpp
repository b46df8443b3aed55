// Timing harness comparing the serial reference kernels against the OpenMP
// kernels and the factored congruence-class path. Every variant must produce
// the identical exact result; a mismatch aborts with a nonzero exit.
//
//   usage: bench [--full]
//
// --full adds the two multi-minute items: the exhaustive 14406-element pair
// sum at order 343 and the directed order-9 canonical-form scan.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "circ/multiplier.hpp"
#include "circ/oracle.hpp"
#include "circ/schur.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using circ::Mode;
using circ::Polynomial;

int failures = 0;

// run every variant, print its time, and require all results identical
void compare(const std::string& label,
             const std::vector<std::pair<std::string, std::function<Polynomial()>>>& variants) {
  std::printf("%s\n", label.c_str());
  Polynomial reference;
  bool have_reference = false;
  for (const auto& [name, fn] : variants) {
    const auto t0 = std::chrono::steady_clock::now();
    const Polynomial result = fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = !have_reference || result == reference;
    std::printf("  %-28s %9.3fs  total %s%s\n", name.c_str(), secs,
                result.sum_of_coefficients().str().c_str(), ok ? "" : "  ** MISMATCH **");
    if (!ok) ++failures;
    if (!have_reference) {
      reference = result;
      have_reference = true;
    }
  }
}

// the two-coordinate congruence subproblem at order p^3: upper layers on one
// coordinate, unit blocks on the other
std::pair<circ::TupleGroup, std::vector<circ::ActionComponent>> pair_subproblem(int p) {
  const int n = p * p * p;
  circ::ActionComponent upper;
  upper.systems = {circ::singleton_blocks(circ::layer(p, 3, 1), n),
                   circ::singleton_blocks(circ::layer(p, 3, 2), n)};
  circ::ActionComponent unit_blocks;
  unit_blocks.systems = {circ::invariance_blocks(p, 3, 0, 0)};
  return {circ::make_pair_group(n, p), {upper, unit_blocks}};
}

} // namespace

int main(int argc, char** argv) {
  bool full = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full") == 0) {
      full = true;
    } else {
      std::fprintf(stderr, "usage: bench [--full]\n");
      return 2;
    }
  }
#ifdef _OPENMP
  if (const char* env = std::getenv("CIRC_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
  std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; the parallel variants run serially\n\n");
#endif

  {
    const auto [group, comps] = pair_subproblem(5);
    compare("congruence pair sum, order 125 (2500 elements)",
            {{"exhaustive serial", [&] { return orbit_weight_enumerator(group, comps, false); }},
             {"exhaustive parallel", [&] { return orbit_weight_enumerator(group, comps, true); }},
             {"factored serial", [&] { return pair_class_enumerator(group, comps, false); }},
             {"factored parallel", [&] { return pair_class_enumerator(group, comps, true); }}});
  }
  {
    const auto [group, comps] = pair_subproblem(7);
    std::vector<std::pair<std::string, std::function<Polynomial()>>> variants;
    if (full)
      variants.emplace_back("exhaustive serial",
                            [&] { return orbit_weight_enumerator(group, comps, false); });
    variants.emplace_back("factored serial",
                          [&] { return pair_class_enumerator(group, comps, false); });
    variants.emplace_back("factored parallel",
                          [&] { return pair_class_enumerator(group, comps, true); });
    compare("congruence pair sum, order 343 (14406 elements)", variants);
  }

  compare("full enumeration, order 343 directed",
          {{"parallel", [] { return circ::enumerate_p3(7, Mode::directed).row("A"); }},
           {"serial", [] { return circ::enumerate_p3(7, Mode::directed, false).row("A"); }}});

  compare("canonical forms, order 9 undirected (16 masks)",
          {{"serial", [] { return circ::brute_iso_classes(9, Mode::undirected, false); }},
           {"parallel", [] { return circ::brute_iso_classes(9, Mode::undirected, true); }}});
  if (full)
    compare("canonical forms, order 9 directed (256 masks)",
            {{"serial", [] { return circ::brute_iso_classes(9, Mode::directed, false); }},
             {"parallel", [] { return circ::brute_iso_classes(9, Mode::directed, true); }}});

  compare("criterion orbit scan, order 27 undirected (8192 masks)",
          {{"serial", [] { return circ::criterion_orbit_count(3, 3, Mode::undirected, false); }},
           {"parallel", [] { return circ::criterion_orbit_count(3, 3, Mode::undirected, true); }}});

  {
    const auto cat = circ::builtin_ring_catalog(9);
    const auto& ring = cat.rings.back();
    const auto as_poly = [&](bool parallel) {
      const auto orders = circ::brute_color_group_orders(ring, 9, parallel);
      return Polynomial::monomial(1, orders.aut) + Polynomial::monomial(2, orders.normalizer);
    };
    compare("color-automorphism scan over 9! permutations",
            {{"serial", [&] { return as_poly(false); }},
             {"parallel", [&] { return as_poly(true); }}});
  }

  if (failures > 0) {
    std::fprintf(stderr, "\n%d kernel mismatches\n", failures);
    return 1;
  }
  std::printf("\nall variants agree\n");
  return 0;
}
