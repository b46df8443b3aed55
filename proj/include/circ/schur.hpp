#pragma once

// Structural (ring-theoretic) enumeration: count circulants of order n by
// which translation-invariant partition algebra their symmetry realizes.
//
// A catalog lists, for one modulus, every relevant partition of Z_n into
// "basic sets" (closed under the ring axioms below) together with the order
// of its color-automorphism group G_i and of that group's normalizer N_i in
// Sym(Z_n). The labelled count f_i(t) of connecting sets compatible with
// ring i overcounts; the exact-symmetry counts g_i(t) follow by the lattice
// recursion implemented here, and their sum is the isomorphism-class
// generating function — an independent check on the multiplier method.

#include <string>
#include <vector>

#include "circ/bigint.hpp"
#include "circ/multiplier.hpp"
#include "circ/poly.hpp"

namespace circ {

struct RingEntry {
  std::string name;
  BigInt aut_order;        // |G_i|, color automorphisms in Sym(Z_n)
  BigInt normalizer_order; // |N_i|, normalizer of G_i in Sym(Z_n)
  std::vector<std::vector<int>> basic_sets; // sorted residue lists, one of them {0}
};

struct RingCatalog {
  int modulus = 0;
  std::vector<Mode> modes; // enumeration modes the catalog is complete for
  std::vector<RingEntry> rings;

  bool supports(Mode mode) const;
};

RingCatalog load_ring_catalog(const std::string& path);
// the catalog shipped with the library (modulus 9 or 27)
RingCatalog builtin_ring_catalog(int modulus);

// ring-axiom violations: {0} a basic set, the sets partition Z_n, negation
// maps basic sets to basic sets, and every product of two basic sets has
// constant coefficient on each basic set. Empty result means valid.
std::vector<std::string> validate_ring(const RingEntry& ring, int modulus);

// true iff every basic set of `coarse` is a union of basic sets of `fine`
bool is_subring(const RingEntry& coarse, const RingEntry& fine);

// product of (1 + t^{|class|}) over the non-zero basic sets, where a class is
// a single basic set (directed) or a negation-merged union (undirected)
Polynomial labelled_genfn(const RingEntry& ring, int modulus, Mode mode);

struct StructuralReport {
  int modulus = 0;
  Mode mode = Mode::directed;
  std::vector<std::string> names;     // ring names, catalog order
  std::vector<Polynomial> labelled;   // f_i
  std::vector<Polynomial> unlabelled; // g_i
  Polynomial total;                   // sum of the g_i
};

// lattice recursion, coarsest ring first:
//   g_i = ( f_i - sum over proper subrings S_j of (N_j/G_j) g_j ) / (N_i/G_i)
// with every ratio and every division exact
StructuralReport structural_enumeration(const RingCatalog& catalog, Mode mode);

// brute-force verification of catalog group orders by scanning all of
// Sym(Z_modulus): the color-automorphism group order and its normalizer's
// order (feasible up to modulus 9)
struct GroupOrders {
  BigInt aut;
  BigInt normalizer;
};
GroupOrders brute_color_group_orders(const RingEntry& ring, int modulus, bool parallel = true);

} // namespace circ
