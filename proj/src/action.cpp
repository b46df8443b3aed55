#include "circ/action.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace circ {

std::vector<int> units(int n) {
  if (n < 1) throw std::invalid_argument("units: modulus must be positive");
  std::vector<int> out;
  for (int x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) out.push_back(x);
  return out;
}

int unit_inverse(int x, int n) {
  std::int64_t a = ((x % n) + n) % n, b = n, u = 1, v = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) throw std::invalid_argument("unit_inverse: not a unit");
  return static_cast<int>(((u % n) + n) % n);
}

Polynomial CycleMonomial::subset_enumerator() const {
  Polynomial out = Polynomial::one();
  for (auto [len, w] : factors)
    out = out * Polynomial::one_plus_power(static_cast<std::int64_t>(len) * w);
  return out;
}

std::string CycleMonomial::to_string() const {
  std::map<std::pair<int, int>, int> mult; // (length, weight) -> multiplicity
  for (auto f : factors) ++mult[f];
  std::ostringstream os;
  for (const auto& [f, count] : mult) {
    os << "x" << f.first;
    if (f.second != 1) os << "[w" << f.second << "]";
    if (count != 1) os << "^" << count;
  }
  return os.str();
}

CycleMonomial element_cycles(int m, const ActionComponent& comp) {
  CycleMonomial out;
  for (const BlockSystem& sys : comp.systems) {
    const int n = sys.modulus;
    if (m <= 0 || m >= n || std::gcd(m, n) != 1)
      throw std::invalid_argument("element_cycles: multiplier must be a unit of the block modulus");
    std::map<int, int> owner; // residue -> block index
    for (std::size_t b = 0; b < sys.blocks.size(); ++b)
      for (int x : sys.blocks[b]) owner[x] = static_cast<int>(b);
    std::vector<int> image(sys.blocks.size());
    for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
      std::vector<int> mb;
      mb.reserve(sys.blocks[b].size());
      for (int x : sys.blocks[b]) mb.push_back(static_cast<int>((static_cast<std::int64_t>(x) * m) % n));
      std::sort(mb.begin(), mb.end());
      const auto it = owner.find(mb.front());
      if (it == owner.end() || sys.blocks[static_cast<std::size_t>(it->second)] != mb)
        throw std::invalid_argument("element_cycles: multiplier does not permute the blocks");
      image[b] = it->second;
    }
    std::vector<bool> seen(sys.blocks.size(), false);
    for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
      if (seen[b]) continue;
      int len = 0;
      std::size_t cur = b;
      while (!seen[cur]) {
        seen[cur] = true;
        ++len;
        cur = static_cast<std::size_t>(image[cur]);
      }
      out.factors.emplace_back(len, sys.weight(b));
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

TupleGroup single_multiplier_group(int n) {
  TupleGroup g;
  g.modulus = n;
  g.arity = 1;
  for (int u : units(n)) g.elements.push_back({u});
  return g;
}

TupleGroup full_tuple_group(int n, int arity) {
  if (arity < 1) throw std::invalid_argument("full_tuple_group: arity must be >= 1");
  TupleGroup g;
  g.modulus = n;
  g.arity = arity;
  const auto us = units(n);
  std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
  std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
  while (true) {
    for (int i = 0; i < arity; ++i) tuple[static_cast<std::size_t>(i)] = us[idx[static_cast<std::size_t>(i)]];
    g.elements.push_back(tuple);
    int pos = arity - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == us.size()) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return g;
}

TupleGroup make_pair_group(int n, int m) {
  if (m < 2 || n % m != 0) throw std::invalid_argument("make_pair_group: congruence modulus must divide n");
  TupleGroup g;
  g.modulus = n;
  g.arity = 2;
  g.pair_congruence_modulus = m;
  const auto us = units(n);
  for (int a : us)
    for (int a2 : us)
      if ((a - a2) % m == 0) g.elements.push_back({a, a2});
  return g;
}

namespace {

// --- dense accumulation kernel -------------------------------------------
//
// Every element term is a product of factors (1 + t^k) with total degree at
// most the summed block weight, so a flat coefficient array beats the sparse
// map by a wide margin in the inner loop.

using Dense = std::vector<BigInt>;

// multiply c (degree `deg`) by (1 + t^k) in place; c must have room
void mul_one_plus_power(Dense& c, int& deg, int k) {
  for (int e = deg; e >= 0; --e)
    if (c[static_cast<std::size_t>(e)] != 0)
      c[static_cast<std::size_t>(e + k)] += c[static_cast<std::size_t>(e)];
  deg += k;
}

void add_into(Dense& acc, const Dense& term) {
  for (std::size_t e = 0; e < term.size(); ++e)
    if (term[e] != 0) acc[e] += term[e];
}

Polynomial dense_to_poly(const Dense& c) {
  Polynomial out;
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) out += Polynomial::monomial(static_cast<std::int64_t>(e), c[e]);
  return out;
}

int component_capacity(const ActionComponent& comp) {
  int cap = 0;
  for (const auto& sys : comp.systems) cap += sys.total_weight();
  return cap;
}

// cycle factors of every distinct multiplier value of one tuple coordinate
using ExpCache = std::unordered_map<int, std::vector<int>>;

ExpCache build_exp_cache(const TupleGroup& g, int coord, const ActionComponent& comp) {
  ExpCache cache;
  for (const auto& tuple : g.elements) {
    const int m = tuple[static_cast<std::size_t>(coord)];
    if (cache.count(m) != 0) continue;
    std::vector<int> exps;
    for (auto [len, w] : element_cycles(m, comp).factors) exps.push_back(len * w);
    cache.emplace(m, std::move(exps));
  }
  return cache;
}

// product over all coordinates' cycle factors, written into `term`
void element_term(const std::vector<int>& tuple, const std::vector<ExpCache>& caches, Dense& term,
                  int cap) {
  term.assign(static_cast<std::size_t>(cap) + 1, 0);
  term[0] = 1;
  int deg = 0;
  for (std::size_t i = 0; i < caches.size(); ++i)
    for (int k : caches[i].at(tuple[i])) mul_one_plus_power(term, deg, k);
}

} // namespace

Polynomial orbit_weight_enumerator(const TupleGroup& g, std::span<const ActionComponent> comps,
                                   bool parallel) {
  if (g.elements.empty()) throw std::invalid_argument("orbit_weight_enumerator: empty group");
  if (static_cast<int>(comps.size()) != g.arity)
    throw std::invalid_argument("orbit_weight_enumerator: component count must match tuple arity");

  int cap = 0;
  std::vector<ExpCache> caches;
  for (int i = 0; i < g.arity; ++i) {
    cap += component_capacity(comps[static_cast<std::size_t>(i)]);
    caches.push_back(build_exp_cache(g, i, comps[static_cast<std::size_t>(i)]));
  }

  Dense acc(static_cast<std::size_t>(cap) + 1, 0);
  const std::int64_t count = static_cast<std::int64_t>(g.elements.size());
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      Dense local(static_cast<std::size_t>(cap) + 1, 0);
      Dense term;
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < count; ++i) {
        element_term(g.elements[static_cast<std::size_t>(i)], caches, term, cap);
        add_into(local, term);
      }
#pragma omp critical(circ_owe_reduce)
      add_into(acc, local);
    }
  } else
#else
  (void)parallel;
#endif
  {
    Dense term;
    for (std::int64_t i = 0; i < count; ++i) {
      element_term(g.elements[static_cast<std::size_t>(i)], caches, term, cap);
      add_into(acc, term);
    }
  }
  return dense_to_poly(acc).divided_exact(static_cast<std::int64_t>(g.elements.size()));
}

Polynomial pair_class_enumerator(const TupleGroup& g, std::span<const ActionComponent> comps,
                                 bool parallel) {
  if (g.arity != 2 || g.pair_congruence_modulus <= 0)
    throw std::invalid_argument("pair_class_enumerator: group is not a congruence fiber product");
  if (comps.size() != 2)
    throw std::invalid_argument("pair_class_enumerator: exactly two components required");

  const int n = g.modulus;
  const int m = g.pair_congruence_modulus;
  const auto us = units(n);

  // per-congruence-class sums of element terms, one per coordinate
  std::array<std::map<int, Polynomial>, 2> class_sums;
  for (int side = 0; side < 2; ++side) {
    const ActionComponent& comp = comps[static_cast<std::size_t>(side)];
    const int cap = component_capacity(comp);
    std::map<int, Dense> sums;
    const std::int64_t count = static_cast<std::int64_t>(us.size());
    auto accumulate = [&](std::map<int, Dense>& into, int a) {
      Dense term(static_cast<std::size_t>(cap) + 1, 0);
      term[0] = 1;
      int deg = 0;
      for (auto [len, w] : element_cycles(a, comp).factors) mul_one_plus_power(term, deg, len * w);
      const auto it = into.try_emplace(a % m, Dense(static_cast<std::size_t>(cap) + 1, 0)).first;
      add_into(it->second, term);
    };
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel
      {
        std::map<int, Dense> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < count; ++i) accumulate(local, us[static_cast<std::size_t>(i)]);
#pragma omp critical(circ_pair_reduce)
        for (auto& [cls, dense] : local) {
          const auto it = sums.try_emplace(cls, Dense(static_cast<std::size_t>(cap) + 1, 0)).first;
          add_into(it->second, dense);
        }
      }
    } else
#else
    (void)parallel;
#endif
    {
      for (std::int64_t i = 0; i < count; ++i) accumulate(sums, us[static_cast<std::size_t>(i)]);
    }
    for (auto& [cls, dense] : sums) class_sums[static_cast<std::size_t>(side)][cls] = dense_to_poly(dense);
  }

  Polynomial total;
  for (const auto& [cls, sum0] : class_sums[0]) {
    const auto it = class_sums[1].find(cls);
    if (it == class_sums[1].end())
      throw std::logic_error("pair_class_enumerator: congruence classes out of step");
    total += sum0 * it->second;
  }
  return total.divided_exact(static_cast<std::int64_t>(g.elements.size()));
}

} // namespace circ
