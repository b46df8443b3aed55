#pragma once

// Small helpers for exhaustive scans over the symmetric group S_n (n <= 12):
// factorials, lexicographic unranking, and composition. Everything here is
// inline and allocation-light so it can sit inside hot loops.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace circ {

constexpr std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// the rank-th permutation of {0, ..., n-1} in lexicographic order
inline std::vector<int> nth_permutation(int n, std::uint64_t rank) {
  if (n < 0 || n > 20 || rank >= factorial(n)) throw std::invalid_argument("nth_permutation: bad rank");
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool.push_back(i);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  std::uint64_t f = factorial(n);
  for (int i = n; i >= 1; --i) {
    f /= static_cast<std::uint64_t>(i);
    const std::size_t pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

// (a after b): result[i] = a[b[i]]
inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

// pack a permutation of up to 16 points into 4-bit nibbles
inline std::uint64_t encode_permutation(const std::vector<int>& a) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < a.size(); ++i) key |= static_cast<std::uint64_t>(a[i]) << (4 * i);
  return key;
}

} // namespace circ
