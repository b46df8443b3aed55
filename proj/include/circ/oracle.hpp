#pragma once

// Independent oracles for cross-checking the analytic enumerations:
//  - exhaustive graph-isomorphism classification for tiny orders,
//  - union-find over connecting-set bitmasks under the layered multiplier
//    criterion for orders p^2 and 27,
//  - closed-form divisor/totient formulas for two order-p^2 subproblems.
// Every oracle returns a generating function by valency so results compare
// coefficient-for-coefficient against the main engine.

#include "circ/multiplier.hpp"
#include "circ/poly.hpp"

namespace circ {

// isomorphism classes of circulants of order n by valency, classified by
// lex-minimal adjacency matrix over the whole symmetric group (n <= 9)
Polynomial brute_iso_classes(int n, Mode mode, bool parallel = true);

// isomorphism classes of circulants of order p^k by valency, as orbits of
// connecting-set bitmasks under the layered multiplier criterion. Feasible
// while the mask space fits in 26 bits: k = 1 up to p = 53 undirected and
// p = 23 directed, k = 2 up to p = 7 undirected and p = 5 directed, and
// (3, 3) in both modes.
Polynomial criterion_orbit_count(int p, int k, Mode mode, bool parallel = true);

// closed forms for the order-p^2 subproblems: the independent-pair row
//   A1 = f(t) f(t^p)
// and the shared-multiplier overlap row A22, where f is the divisor/totient
// (necklace) enumerator of one multiplier acting on Z'_p
Polynomial closed_form_A1_p2(int p, Mode mode);
Polynomial closed_form_A22_p2(int p, Mode mode);

} // namespace circ
