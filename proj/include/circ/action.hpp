#pragma once

// Multiplicative actions of unit-group tuples on block systems, and the
// orbit-weight subset enumerator:
//
//   (1/|G|) * sum over g in G of prod over cycles of g of (1 + t^w(cycle))
//
// where a cycle's weight w is the total cardinality of the blocks it moves.
// This is Burnside averaging for the action of G on block subsets, graded by
// the number of underlying elements selected; the division is exact by
// construction and throws NonIntegralCount otherwise.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circ/layers.hpp"
#include "circ/poly.hpp"

namespace circ {

// units of Z_n in ascending order
std::vector<int> units(int n);

// multiplicative inverse in Z_n (x must be a unit)
int unit_inverse(int x, int n);

// cycle structure of one multiplier acting on block systems: a multiset of
// (cycle length, block weight) pairs
struct CycleMonomial {
  std::vector<std::pair<int, int>> factors; // sorted (length, weight)

  // product of (1 + t^{length*weight}) over all cycles
  Polynomial subset_enumerator() const;
  // e.g. "x2x6" (weight-1 blocks); non-unit weights annotated as "x2[w3]"
  std::string to_string() const;
  bool operator==(const CycleMonomial&) const = default;
};

// the block systems one multiplier coordinate acts on
struct ActionComponent {
  std::vector<BlockSystem> systems;
};

// cycles of x -> m*x on every system of the component; throws
// std::invalid_argument if m fails to permute some system's blocks
CycleMonomial element_cycles(int m, const ActionComponent& comp);

// a finite group of unit tuples acting coordinate-wise
struct TupleGroup {
  int modulus = 0;
  int arity = 0;
  // nonzero marks the fiber product {(a, a') : a == a' mod this}, which
  // admits the factored enumerator below
  int pair_congruence_modulus = 0;
  std::vector<std::vector<int>> elements;

  std::size_t size() const { return elements.size(); }
};

// {(m) : m unit of Z_n}
TupleGroup single_multiplier_group(int n);
// all unit tuples (Z*_n)^arity
TupleGroup full_tuple_group(int n, int arity);
// {(a, a') : units of Z_n, a' congruent to a mod m}
TupleGroup make_pair_group(int n, int m);

// Burnside orbit-weight enumerator of G acting on `comps` (one component per
// tuple coordinate), summed over every group element. `parallel` selects the
// OpenMP sum; both paths give identical exact results.
Polynomial orbit_weight_enumerator(const TupleGroup& g, std::span<const ActionComponent> comps,
                                   bool parallel = true);

// The same enumerator for a congruence fiber product (pair_congruence_modulus
// set): the double sum factors through congruence classes,
//   sum over classes c of (sum over a in c of term0(a)) * (sum over a' in c of term1(a')),
// turning |G| element terms into 2 sqrt(|G|)-ish of them. Exactly equal to
// orbit_weight_enumerator on the same group.
Polynomial pair_class_enumerator(const TupleGroup& g, std::span<const ActionComponent> comps,
                                 bool parallel = true);

} // namespace circ
