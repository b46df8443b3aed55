#include "circ/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "circ/layers.hpp"
#include "circ/perm.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace circ {

namespace {

// ---- connecting sets as bitmasks ----------------------------------------

// map between nonzero residues and mask bits; undirected mode keys the pair
// {x, n-x} to one bit of weight 2
struct BitIndex {
  int n = 0;
  int weight = 1;
  std::vector<int> elem_of; // bit -> representative element
  std::vector<int> bit_of;  // element -> bit

  int bits() const { return static_cast<int>(elem_of.size()); }
};

BitIndex make_bit_index(int n, Mode mode) {
  BitIndex bi;
  bi.n = n;
  bi.weight = mode == Mode::directed ? 1 : 2;
  bi.bit_of.assign(static_cast<std::size_t>(n), -1);
  for (int x = 1; x < n; ++x) {
    if (mode == Mode::undirected && x > n - x) {
      bi.bit_of[static_cast<std::size_t>(x)] = bi.bit_of[static_cast<std::size_t>(n - x)];
      continue;
    }
    bi.bit_of[static_cast<std::size_t>(x)] = bi.bits();
    bi.elem_of.push_back(x);
  }
  return bi;
}

int valuation(int x, int p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// bit permutation induced by multiplying layer i by m[i]
std::vector<int> layered_bit_perm(const BitIndex& bi, int p, const std::vector<int>& m) {
  std::vector<int> perm(static_cast<std::size_t>(bi.bits()));
  for (int b = 0; b < bi.bits(); ++b) {
    const int x = bi.elem_of[static_cast<std::size_t>(b)];
    const int i = valuation(x, p);
    const int y = static_cast<int>(static_cast<std::int64_t>(x) * m[static_cast<std::size_t>(i)] % bi.n);
    perm[static_cast<std::size_t>(b)] = bi.bit_of[static_cast<std::size_t>(y)];
  }
  return perm;
}

// byte-sliced application of a bit permutation to 32-bit masks
struct PermTables {
  std::array<std::array<std::uint32_t, 256>, 4> t{};

  std::uint32_t apply(std::uint32_t m) const {
    return t[0][m & 255] | t[1][(m >> 8) & 255] | t[2][(m >> 16) & 255] | t[3][(m >> 24) & 255];
  }
};

PermTables make_tables(const std::vector<int>& perm) {
  PermTables pt;
  for (int bp = 0; bp < 4; ++bp)
    for (int val = 0; val < 256; ++val) {
      std::uint32_t r = 0;
      for (int bit = 0; bit < 8; ++bit) {
        if ((val >> bit & 1) == 0) continue;
        const std::size_t idx = static_cast<std::size_t>(bp * 8 + bit);
        if (idx < perm.size()) r |= 1u << perm[idx];
      }
      pt.t[static_cast<std::size_t>(bp)][static_cast<std::size_t>(val)] = r;
    }
  return pt;
}

// ---- admissible multiplier tuples per invariance regime ------------------

std::uint64_t tuple_key(const std::vector<int>& t) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < t.size(); ++i) key |= static_cast<std::uint64_t>(t[i]) << (10 * i);
  return key;
}

std::vector<std::vector<int>> tuple_subgroup_generators(const std::vector<std::vector<int>>& elems,
                                                        int n) {
  std::unordered_set<std::uint64_t> closure;
  std::vector<int> identity(elems.front().size(), 1);
  closure.insert(tuple_key(identity));
  std::vector<std::vector<int>> gens;
  const auto mul = [n](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      out[i] = static_cast<int>(static_cast<std::int64_t>(a[i]) * b[i] % n);
    return out;
  };
  const auto close = [&]() {
    std::vector<std::vector<int>> frontier;
    frontier.reserve(closure.size());
    std::vector<int> buf(identity.size());
    for (std::uint64_t key : closure) {
      for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = static_cast<int>((key >> (10 * i)) & 1023);
      frontier.push_back(buf);
    }
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& a : frontier)
        for (const auto& g : gens) {
          auto q = mul(a, g);
          if (closure.insert(tuple_key(q)).second) next.push_back(std::move(q));
        }
      frontier.swap(next);
    }
  };
  for (const auto& e : elems) {
    if (closure.count(tuple_key(e)) != 0) continue;
    gens.push_back(e);
    close();
  }
  if (closure.size() != elems.size())
    throw std::logic_error("admissible tuple set is not closed under multiplication");
  return gens;
}

// the per-regime generator tables and the regime-test tables for one (p, k)
struct CriterionPlan {
  int p = 0, k = 0, n = 0;
  BitIndex bi;
  std::vector<PermTables> tests;                  // k=2: {R}; k=3: {R00, R01, R10}
  std::vector<std::vector<PermTables>> gen_tables; // indexed by regime id
};

CriterionPlan make_plan(int p, int k, Mode mode) {
  CriterionPlan plan;
  plan.p = p;
  plan.k = k;
  plan.n = 1;
  for (int i = 0; i < k; ++i) plan.n *= p;
  if (prime_power_exponent(plan.n, p) != k) throw std::invalid_argument("bad prime power");
  plan.bi = make_bit_index(plan.n, mode);
  if (plan.bi.bits() > 26)
    throw std::invalid_argument("criterion_orbit_count: mask space exceeds 2^26");

  const auto test_for = [&](int layer, int mult) {
    std::vector<int> m(static_cast<std::size_t>(k), 1);
    m[static_cast<std::size_t>(layer)] = mult;
    return make_tables(layered_bit_perm(plan.bi, p, m));
  };
  if (k == 2) {
    plan.tests.push_back(test_for(0, 1 + p));
  } else if (k == 3) {
    plan.tests.push_back(test_for(0, 1 + p * p));
    plan.tests.push_back(test_for(0, 1 + p));
    plan.tests.push_back(test_for(1, 1 + p));
  }

  // admissible tuples per regime: held invariance failures force congruences
  const auto us = units(plan.n);
  const int regimes = k == 1 ? 1 : (k == 2 ? 2 : 8);
  plan.gen_tables.resize(static_cast<std::size_t>(regimes));
  for (int rid = 0; rid < regimes; ++rid) {
    if (k == 3) {
      const bool r00 = (rid & 4) != 0, r01 = (rid & 2) != 0;
      if (r00 && !r01) continue; // impossible: invariance under 1+p implies it under 1+p^2
    }
    std::vector<std::vector<int>> admissible;
    std::vector<int> t(static_cast<std::size_t>(k));
    const auto admit = [&](auto&& self, int coord) -> void {
      if (coord == k) {
        if (k == 2 && (rid & 1) != 0 && t[0] != t[1]) return;
        if (k == 3) {
          const bool r00 = (rid & 4) != 0, r01 = (rid & 2) != 0, r10 = (rid & 1) != 0;
          if (r00 && ((t[1] - t[0]) % (p * p) != 0 || (t[2] - t[1]) % p != 0)) return;
          if (r01 && (t[1] - t[0]) % p != 0) return;
          if (r10 && (t[2] - t[1]) % p != 0) return;
        }
        admissible.push_back(t);
        return;
      }
      for (int u : us) {
        t[static_cast<std::size_t>(coord)] = u;
        self(self, coord + 1);
      }
    };
    admit(admit, 0);
    for (const auto& g : tuple_subgroup_generators(admissible, plan.n))
      plan.gen_tables[static_cast<std::size_t>(rid)].push_back(
          make_tables(layered_bit_perm(plan.bi, p, g)));
  }
  return plan;
}

int regime_of(const CriterionPlan& plan, std::uint32_t mask) {
  int rid = 0;
  if (plan.k == 2) {
    rid = plan.tests[0].apply(mask) != mask ? 1 : 0;
  } else if (plan.k == 3) {
    rid = (plan.tests[0].apply(mask) != mask ? 4 : 0) | (plan.tests[1].apply(mask) != mask ? 2 : 0) |
          (plan.tests[2].apply(mask) != mask ? 1 : 0);
  }
  return rid;
}

Polynomial histogram_to_poly(const std::vector<std::uint64_t>& hist) {
  Polynomial out;
  for (std::size_t v = 0; v < hist.size(); ++v)
    if (hist[v] != 0) out += Polynomial::monomial(static_cast<std::int64_t>(v), hist[v]);
  return out;
}

Polynomial criterion_orbits_serial(const CriterionPlan& plan) {
  const std::size_t M = std::size_t{1} << plan.bi.bits();
  std::vector<std::uint32_t> parent(M);
  std::iota(parent.begin(), parent.end(), 0u);
  const auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
  };
  for (std::size_t m = 0; m < M; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    for (const PermTables& g : plan.gen_tables[static_cast<std::size_t>(regime_of(plan, mask))])
      unite(mask, g.apply(mask));
  }
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(plan.n), 0);
  for (std::size_t m = 0; m < M; ++m)
    if (find(static_cast<std::uint32_t>(m)) == m)
      ++hist[static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(m))) *
             static_cast<std::size_t>(plan.bi.weight)];
  return histogram_to_poly(hist);
}

#ifdef _OPENMP
Polynomial criterion_orbits_parallel(const CriterionPlan& plan) {
  const std::size_t M = std::size_t{1} << plan.bi.bits();
  std::vector<std::atomic<std::uint32_t>> parent(M);
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < static_cast<std::int64_t>(M); ++m)
    parent[static_cast<std::size_t>(m)].store(static_cast<std::uint32_t>(m),
                                              std::memory_order_relaxed);
  const auto find = [&](std::uint32_t x) {
    for (;;) {
      const std::uint32_t px = parent[x].load(std::memory_order_relaxed);
      if (px == x) return x;
      const std::uint32_t gx = parent[px].load(std::memory_order_relaxed);
      parent[x].store(gx, std::memory_order_relaxed); // path halving, benign race
      x = gx;
    }
  };
  const auto unite = [&](std::uint32_t a, std::uint32_t b) {
    for (;;) {
      a = find(a);
      b = find(b);
      if (a == b) return;
      if (a > b) std::swap(a, b);
      std::uint32_t expected = b;
      if (parent[b].compare_exchange_strong(expected, a, std::memory_order_relaxed)) return;
    }
  };
#pragma omp parallel for schedule(dynamic, 4096)
  for (std::int64_t m = 0; m < static_cast<std::int64_t>(M); ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    for (const PermTables& g : plan.gen_tables[static_cast<std::size_t>(regime_of(plan, mask))])
      unite(mask, g.apply(mask));
  }
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(plan.n), 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(static_cast<std::size_t>(plan.n), 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(M); ++m)
      if (find(static_cast<std::uint32_t>(m)) == static_cast<std::uint32_t>(m))
        ++local[static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(m))) *
                static_cast<std::size_t>(plan.bi.weight)];
#pragma omp critical(circ_criterion_hist)
    for (std::size_t v = 0; v < local.size(); ++v) hist[v] += local[v];
  }
  return histogram_to_poly(hist);
}
#endif

} // namespace

Polynomial criterion_orbit_count(int p, int k, Mode mode, bool parallel) {
  if (k < 1 || k > 3) throw std::invalid_argument("criterion_orbit_count: k must be 1, 2 or 3");
  const CriterionPlan plan = make_plan(p, k, mode);
#ifdef _OPENMP
  if (parallel) return criterion_orbits_parallel(plan);
#else
  (void)parallel;
#endif
  return criterion_orbits_serial(plan);
}

// ---- exhaustive isomorphism classification --------------------------------

namespace {

struct CanonicalForm {
  std::array<std::uint16_t, 9> rows{};
  int valency = 0;

  bool operator<(const CanonicalForm& o) const {
    if (rows != o.rows) return rows < o.rows;
    return valency < o.valency;
  }
  bool operator==(const CanonicalForm& o) const = default;
};

CanonicalForm canonicalize(const std::vector<std::vector<std::uint8_t>>& adj, int n, int valency) {
  CanonicalForm best;
  best.rows.fill(0xFFFF);
  best.valency = valency;
  std::array<std::uint16_t, 9> tmp{};
  std::vector<int> q(static_cast<std::size_t>(n));
  std::iota(q.begin(), q.end(), 0);
  do {
    bool better = false, worse = false;
    for (int r = 0; r < n; ++r) {
      const auto& arow = adj[static_cast<std::size_t>(q[static_cast<std::size_t>(r)])];
      std::uint16_t row = 0;
      for (int c = 0; c < n; ++c) row = static_cast<std::uint16_t>((row << 1) | arow[static_cast<std::size_t>(q[static_cast<std::size_t>(c)])]);
      if (!better) {
        if (row > best.rows[static_cast<std::size_t>(r)]) {
          worse = true;
          break;
        }
        if (row < best.rows[static_cast<std::size_t>(r)]) better = true;
      }
      tmp[static_cast<std::size_t>(r)] = row;
    }
    if (better && !worse) {
      for (int r = 0; r < n; ++r) best.rows[static_cast<std::size_t>(r)] = tmp[static_cast<std::size_t>(r)];
    }
  } while (std::next_permutation(q.begin(), q.end()));
  return best;
}

} // namespace

Polynomial brute_iso_classes(int n, Mode mode, bool parallel) {
  if (n < 3 || n > 9 || n % 2 == 0)
    throw std::invalid_argument("brute_iso_classes: order must be odd and between 3 and 9");
  const BitIndex bi = make_bit_index(n, mode);
  const std::int64_t M = std::int64_t{1} << bi.bits();

  std::vector<CanonicalForm> forms(static_cast<std::size_t>(M));
  const auto classify = [&](std::int64_t m) {
    // connecting set of this mask
    std::vector<std::uint8_t> in_set(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < bi.bits(); ++b)
      if ((m >> b) & 1) {
        const int x = bi.elem_of[static_cast<std::size_t>(b)];
        in_set[static_cast<std::size_t>(x)] = 1;
        if (mode == Mode::undirected) in_set[static_cast<std::size_t>(n - x)] = 1;
      }
    int valency = 0;
    for (int x = 1; x < n; ++x) valency += in_set[static_cast<std::size_t>(x)];
    std::vector<std::vector<std::uint8_t>> adj(static_cast<std::size_t>(n),
                                               std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] =
            in_set[static_cast<std::size_t>(((u - v) % n + n) % n)];
    forms[static_cast<std::size_t>(m)] = canonicalize(adj, n, valency);
  };

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t m = 0; m < M; ++m) classify(m);
  } else
#else
  (void)parallel;
#endif
  {
    for (std::int64_t m = 0; m < M; ++m) classify(m);
  }

  std::sort(forms.begin(), forms.end());
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (i == 0 || !(forms[i] == forms[i - 1])) ++hist[static_cast<std::size_t>(forms[i].valency)];
  return histogram_to_poly(hist);
}

// ---- closed forms for order p^2 -------------------------------------------

namespace {

int euler_phi(int r) {
  int result = r;
  for (int d = 2; d * d <= r; ++d) {
    if (r % d != 0) continue;
    result -= result / d;
    while (r % d == 0) r /= d;
  }
  if (r > 1) result -= result / r;
  return result;
}

Polynomial poly_pow(const Polynomial& base, int e) {
  Polynomial out = Polynomial::one();
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

// (1/N) sum over r | N of phi(r) (1 + t^{scale r})^{N/r}
Polynomial necklace_genfn(int N, int scale) {
  Polynomial sum;
  for (int r = 1; r <= N; ++r) {
    if (N % r != 0) continue;
    sum += poly_pow(Polynomial::one_plus_power(static_cast<std::int64_t>(scale) * r), N / r) *
           BigInt(euler_phi(r));
  }
  return sum.divided_exact(N);
}

void require_odd_prime(int p) {
  if (prime_power_exponent(p, p) != 1) throw std::invalid_argument("p must be an odd prime");
}

} // namespace

Polynomial closed_form_A1_p2(int p, Mode mode) {
  require_odd_prime(p);
  const int N = mode == Mode::directed ? p - 1 : (p - 1) / 2;
  const int scale = mode == Mode::directed ? 1 : 2;
  const Polynomial f = necklace_genfn(N, scale);
  return f * f.substitute_power(p);
}

Polynomial closed_form_A22_p2(int p, Mode mode) {
  require_odd_prime(p);
  const int N = mode == Mode::directed ? p - 1 : (p - 1) / 2;
  const int scale = mode == Mode::directed ? 1 : 2;
  Polynomial sum;
  for (int r = 1; r <= N; ++r) {
    if (N % r != 0) continue;
    const Polynomial factor = Polynomial::one_plus_power(static_cast<std::int64_t>(scale) * r) *
                              Polynomial::one_plus_power(static_cast<std::int64_t>(scale) * p * r);
    sum += poly_pow(factor, N / r) * BigInt(euler_phi(r));
  }
  return sum.divided_exact(N);
}

} // namespace circ
