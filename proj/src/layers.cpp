#include "circ/layers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace circ {

int BlockSystem::total_weight() const {
  int w = 0;
  for (const auto& b : blocks) w += static_cast<int>(b.size());
  return w;
}

int prime_power_exponent(std::int64_t n, int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
  for (int d = 3; static_cast<std::int64_t>(d) * d <= p; d += 2)
    if (p % d == 0) throw std::invalid_argument("p must be an odd prime");
  int k = 0;
  std::int64_t m = n;
  while (m > 1 && m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1 || k == 0) throw std::invalid_argument("n is not a positive power of p");
  return k;
}

std::vector<int> layer(int p, int k, int i) {
  if (i < 0 || i >= k) throw std::invalid_argument("layer index out of range");
  int n = 1;
  for (int j = 0; j < k; ++j) n *= p;
  int pi = 1;
  for (int j = 0; j < i; ++j) pi *= p;
  std::vector<int> out;
  for (int x = 1; x < n; ++x)
    if (x % pi == 0 && (x / pi) % p != 0) out.push_back(x);
  return out;
}

int invariance_multiplier(int p, int k, int i, int j) {
  int e = k - i - j - 1;
  if (e < 1) throw std::invalid_argument("invariance condition exponent must be positive");
  int pe = 1;
  for (int s = 0; s < e; ++s) pe *= p;
  return 1 + pe;
}

BlockSystem singleton_blocks(std::span<const int> elems, int modulus) {
  BlockSystem sys;
  sys.modulus = modulus;
  for (int x : elems) sys.blocks.push_back({x});
  std::sort(sys.blocks.begin(), sys.blocks.end());
  return sys;
}

BlockSystem orbit_blocks(std::span<const int> elems, int modulus, int multiplier) {
  std::set<int> todo(elems.begin(), elems.end());
  if (todo.size() != elems.size()) throw std::invalid_argument("orbit_blocks: repeated element");
  BlockSystem sys;
  sys.modulus = modulus;
  while (!todo.empty()) {
    int start = *todo.begin();
    std::vector<int> orbit;
    int x = start;
    do {
      if (!todo.erase(x))
        throw std::invalid_argument("orbit_blocks: multiplier does not preserve the set");
      orbit.push_back(x);
      x = static_cast<int>((static_cast<std::int64_t>(x) * multiplier) % modulus);
    } while (x != start);
    std::sort(orbit.begin(), orbit.end());
    sys.blocks.push_back(std::move(orbit));
  }
  std::sort(sys.blocks.begin(), sys.blocks.end());
  return sys;
}

BlockSystem invariance_blocks(int p, int k, int i, int j) {
  int n = 1;
  for (int s = 0; s < k; ++s) n *= p;
  auto elems = layer(p, k, i);
  return orbit_blocks(elems, n, invariance_multiplier(p, k, i, j));
}

BlockSystem symmetrize(const BlockSystem& sys) {
  // union-find over block indices: join each block with the block containing
  // its negation (negation of a block is always a block of the same layer
  // systems used here; verified by lookup)
  std::map<int, std::size_t> owner;
  for (std::size_t b = 0; b < sys.blocks.size(); ++b)
    for (int x : sys.blocks[b]) owner[x] = b;

  std::vector<std::size_t> parent(sys.blocks.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
    for (int x : sys.blocks[b]) {
      int neg = (sys.modulus - x % sys.modulus) % sys.modulus;
      auto it = owner.find(neg);
      if (it == owner.end())
        throw std::invalid_argument("symmetrize: element negation leaves the system");
      std::size_t ra = find(b), rb = find(it->second);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }

  std::map<std::size_t, std::vector<int>> merged;
  for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
    auto& dst = merged[find(b)];
    dst.insert(dst.end(), sys.blocks[b].begin(), sys.blocks[b].end());
  }
  BlockSystem out;
  out.modulus = sys.modulus;
  for (auto& [root, blk] : merged) {
    std::sort(blk.begin(), blk.end());
    out.blocks.push_back(std::move(blk));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

} // namespace circ
