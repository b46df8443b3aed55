#pragma once

// Layer decomposition of Z_{p^k} \ {0} by p-adic valuation, and the block
// systems induced by invariance conditions of the form (1+p^s)X = X.
//
// A BlockSystem is a partition of a subset of Z_n into blocks that a
// multiplier subgroup permutes whole. A connecting set compatible with the
// invariance condition is a union of blocks, so enumeration happens on
// blocks, weighted by their cardinality.

#include <cstdint>
#include <span>
#include <vector>

namespace circ {

struct BlockSystem {
  int modulus = 0;
  std::vector<std::vector<int>> blocks; // disjoint sorted residue lists

  int weight(std::size_t b) const { return static_cast<int>(blocks[b].size()); }
  int total_weight() const;
  bool operator==(const BlockSystem&) const = default;
};

// exponent k such that n = p^k (throws if n is not a power of the odd prime p)
int prime_power_exponent(std::int64_t n, int p);

// elements of Z_{p^k} whose p-adic valuation is exactly i (0 <= i < k)
std::vector<int> layer(int p, int k, int i);

// the multiplier 1 + p^{k-i-j-1} defining invariance condition (i, j)
int invariance_multiplier(int p, int k, int i, int j);

// one singleton block per element
BlockSystem singleton_blocks(std::span<const int> elems, int modulus);

// partition of `elems` into orbits of x -> m*x (m must map the set onto itself)
BlockSystem orbit_blocks(std::span<const int> elems, int modulus, int multiplier);

// blocks of layer i under invariance condition (i, j): orbits of
// invariance_multiplier(p, k, i, j) acting on layer(p, k, i)
BlockSystem invariance_blocks(int p, int k, int i, int j);

// merge each block with its negation so every block satisfies B = -B;
// undirected connecting sets (X = -X) are unions of exactly these
BlockSystem symmetrize(const BlockSystem& sys);

} // namespace circ
