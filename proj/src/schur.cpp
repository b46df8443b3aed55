#include "circ/schur.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "circ/datafile.hpp"
#include "circ/perm.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace circ {

bool RingCatalog::supports(Mode mode) const {
  for (Mode m : modes)
    if (m == mode) return true;
  return false;
}

RingCatalog load_ring_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ring catalog: " + path);

  RingCatalog cat;
  RingEntry cur;
  bool in_ring = false;
  bool ended = false;
  int lineno = 0;
  std::string line;

  auto fail = [&](const std::string& msg) -> void {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  auto flush = [&]() {
    if (!in_ring) return;
    if (cur.basic_sets.empty()) fail("ring without basic sets");
    cat.rings.push_back(cur);
    cur = RingEntry{};
    in_ring = false;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw)) continue;
    if (ended) fail("content after end");
    if (kw == "version") {
      int v = 0;
      if (!(ss >> v) || v != 1) fail("unsupported catalog version");
    } else if (kw == "modulus") {
      if (!(ss >> cat.modulus) || cat.modulus < 2) fail("bad modulus");
    } else if (kw == "modes") {
      std::string tok;
      while (ss >> tok) cat.modes.push_back(mode_from_string(tok));
    } else if (kw == "ring") {
      flush();
      in_ring = true;
      if (!(ss >> cur.name)) fail("ring without a name");
    } else if (kw == "aut_order" || kw == "normalizer_order") {
      if (!in_ring) fail(kw + " outside a ring block");
      std::string v;
      if (!(ss >> v)) fail("missing value for " + kw);
      (kw == "aut_order" ? cur.aut_order : cur.normalizer_order) = BigInt(v);
    } else if (kw == "set") {
      if (!in_ring) fail("set outside a ring block");
      std::vector<int> s;
      int x = 0;
      while (ss >> x) s.push_back(x);
      if (s.empty()) fail("empty basic set");
      std::sort(s.begin(), s.end());
      cur.basic_sets.push_back(std::move(s));
    } else if (kw == "end") {
      flush();
      ended = true;
    } else {
      fail("unknown directive: " + kw);
    }
  }
  if (!ended) fail("missing end");
  if (cat.modulus < 2) fail("missing modulus");
  if (cat.rings.empty()) fail("empty catalog");
  if (cat.modes.empty()) cat.modes = {Mode::undirected, Mode::directed};
  return cat;
}

RingCatalog builtin_ring_catalog(int modulus) {
  if (modulus != 9 && modulus != 27)
    throw std::invalid_argument("no built-in ring catalog for modulus " + std::to_string(modulus));
  return load_ring_catalog(default_data_dir() + "/srings_z" + std::to_string(modulus) + ".txt");
}

namespace {

std::string set_to_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// index of each residue's basic set, or empty if the sets fail to partition Z_n
std::vector<int> owner_map(const RingEntry& ring, int n) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < ring.basic_sets.size(); ++i)
    for (int x : ring.basic_sets[i]) {
      if (x < 0 || x >= n || owner[static_cast<std::size_t>(x)] != -1) return {};
      owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
  for (int v : owner)
    if (v == -1) return {};
  return owner;
}

} // namespace

std::vector<std::string> validate_ring(const RingEntry& ring, int n) {
  std::vector<std::string> bad;
  const std::vector<int> owner = owner_map(ring, n);
  if (owner.empty()) {
    bad.push_back(ring.name + ": basic sets do not partition Z_" + std::to_string(n));
    return bad;
  }
  if (ring.basic_sets[static_cast<std::size_t>(owner[0])].size() != 1)
    bad.push_back(ring.name + ": {0} is not a basic set");

  // negation closure, set-wise
  for (const auto& s : ring.basic_sets) {
    int target = owner[static_cast<std::size_t>((n - s[0] % n) % n)];
    for (int x : s)
      if (owner[static_cast<std::size_t>((n - x) % n)] != target) {
        bad.push_back(ring.name + ": negation of " + set_to_string(s) + " is not a basic set");
        target = -2; // reported once
        break;
      }
    if (target >= 0 &&
        ring.basic_sets[static_cast<std::size_t>(target)].size() != s.size())
      bad.push_back(ring.name + ": negation of " + set_to_string(s) + " has the wrong size");
  }

  // constant structure coefficients: for basic sets S_i, S_j the multiset
  // {x + y} must hit every element of each basic set equally often
  const std::size_t R = ring.basic_sets.size();
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < R; ++j) {
      std::vector<int> cnt(static_cast<std::size_t>(n), 0);
      for (int x : ring.basic_sets[i])
        for (int y : ring.basic_sets[j]) ++cnt[static_cast<std::size_t>((x + y) % n)];
      for (const auto& s : ring.basic_sets) {
        const int want = cnt[static_cast<std::size_t>(s[0])];
        for (int z : s)
          if (cnt[static_cast<std::size_t>(z)] != want) {
            bad.push_back(ring.name + ": product of sets " + std::to_string(i) + "," +
                          std::to_string(j) + " is not constant on " + set_to_string(s));
            break;
          }
      }
    }
  return bad;
}

bool is_subring(const RingEntry& coarse, const RingEntry& fine) {
  std::unordered_map<int, int> cidx;
  for (std::size_t i = 0; i < coarse.basic_sets.size(); ++i)
    for (int x : coarse.basic_sets[i]) cidx[x] = static_cast<int>(i);
  for (const auto& s : fine.basic_sets) {
    const auto first = cidx.find(s[0]);
    if (first == cidx.end()) return false;
    for (int x : s) {
      const auto it = cidx.find(x);
      if (it == cidx.end() || it->second != first->second) return false;
    }
  }
  return true;
}

Polynomial labelled_genfn(const RingEntry& ring, int n, Mode mode) {
  const std::vector<int> owner = owner_map(ring, n);
  if (owner.empty()) throw std::invalid_argument(ring.name + ": basic sets do not partition Z_n");
  Polynomial out = Polynomial::one();
  if (mode == Mode::directed) {
    for (const auto& s : ring.basic_sets)
      if (!(s.size() == 1 && s[0] == 0))
        out = out * Polynomial::one_plus_power(static_cast<std::int64_t>(s.size()));
    return out;
  }
  std::vector<bool> used(ring.basic_sets.size(), false);
  for (std::size_t i = 0; i < ring.basic_sets.size(); ++i) {
    const auto& s = ring.basic_sets[i];
    if (used[i] || (s.size() == 1 && s[0] == 0)) continue;
    used[i] = true;
    std::size_t cls = s.size();
    const int neg = owner[static_cast<std::size_t>((n - s[0]) % n)];
    if (static_cast<std::size_t>(neg) != i) {
      if (used[static_cast<std::size_t>(neg)])
        throw std::logic_error(ring.name + ": negation pairing is inconsistent");
      used[static_cast<std::size_t>(neg)] = true;
      cls += ring.basic_sets[static_cast<std::size_t>(neg)].size();
    }
    out = out * Polynomial::one_plus_power(static_cast<std::int64_t>(cls));
  }
  return out;
}

StructuralReport structural_enumeration(const RingCatalog& cat, Mode mode) {
  if (!cat.supports(mode))
    throw std::invalid_argument("ring catalog for modulus " + std::to_string(cat.modulus) +
                                " does not cover " + to_string(mode) + " enumeration");
  for (const auto& ring : cat.rings)
    if (const auto bad = validate_ring(ring, cat.modulus); !bad.empty())
      throw std::invalid_argument("invalid ring catalog entry: " + bad.front());

  const std::size_t R = cat.rings.size();
  std::vector<BigInt> ratio(R); // N_i / G_i, exact
  for (std::size_t i = 0; i < R; ++i) {
    const RingEntry& ring = cat.rings[i];
    if (ring.aut_order <= 0 || ring.normalizer_order <= 0)
      throw std::invalid_argument(ring.name + ": missing group orders");
    if (ring.normalizer_order % ring.aut_order != 0)
      throw std::invalid_argument(ring.name + ": normalizer order not divisible by group order");
    ratio[i] = ring.normalizer_order / ring.aut_order;
  }

  StructuralReport rep;
  rep.modulus = cat.modulus;
  rep.mode = mode;
  rep.names.reserve(R);
  rep.labelled.reserve(R);
  for (std::size_t i = 0; i < R; ++i) {
    rep.names.push_back(cat.rings[i].name);
    rep.labelled.push_back(labelled_genfn(cat.rings[i], cat.modulus, mode));
  }

  // coarsest first: a proper subring has strictly fewer basic sets
  std::vector<std::size_t> order(R);
  for (std::size_t i = 0; i < R; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cat.rings[a].basic_sets.size() < cat.rings[b].basic_sets.size();
  });

  rep.unlabelled.assign(R, Polynomial{});
  std::vector<bool> done(R, false);
  for (const std::size_t i : order) {
    Polynomial rhs = rep.labelled[i];
    for (std::size_t j = 0; j < R; ++j) {
      if (j == i || !is_subring(cat.rings[j], cat.rings[i])) continue;
      if (!done[j])
        throw std::invalid_argument("catalog contains duplicate partitions: " + cat.rings[j].name +
                                    " and " + cat.rings[i].name);
      rhs -= rep.unlabelled[j] * ratio[j];
    }
    rep.unlabelled[i] = rhs.divided_exact(ratio[i]);
    done[i] = true;
  }
  for (const auto& g : rep.unlabelled) rep.total += g;
  return rep;
}

namespace {

std::vector<int> decode_permutation(std::uint64_t key, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = static_cast<int>((key >> (4 * i)) & 15);
  return out;
}

// grow `closure` until it is the subgroup generated by `gens`
void close_subgroup(std::unordered_set<std::uint64_t>& closure,
                    const std::vector<std::vector<int>>& gens, int n) {
  std::vector<std::vector<int>> frontier;
  frontier.reserve(closure.size());
  for (std::uint64_t key : closure) frontier.push_back(decode_permutation(key, n));
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        auto q = compose(p, g);
        if (closure.insert(encode_permutation(q)).second) next.push_back(std::move(q));
      }
    frontier.swap(next);
  }
}

} // namespace

GroupOrders brute_color_group_orders(const RingEntry& ring, int n, bool parallel) {
  if (n < 2 || n > 9)
    throw std::invalid_argument("brute_color_group_orders: symmetric-group scan limited to modulus <= 9");
  const std::vector<int> owner = owner_map(ring, n);
  if (owner.empty()) throw std::invalid_argument(ring.name + ": basic sets do not partition Z_n");

  // color of the ordered pair (x, y) is the basic set of y - x
  std::vector<std::vector<int>> color(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      color[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          owner[static_cast<std::size_t>(((y - x) % n + n) % n)];

  const auto preserves = [&](const std::vector<int>& p) {
    for (int x = 0; x < n; ++x) {
      const auto& row = color[static_cast<std::size_t>(x)];
      const auto& prow = color[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
      for (int y = 0; y < n; ++y)
        if (prow[static_cast<std::size_t>(p[static_cast<std::size_t>(y)])] !=
            row[static_cast<std::size_t>(y)])
          return false;
    }
    return true;
  };

  const std::int64_t total = static_cast<std::int64_t>(factorial(n));
  std::vector<std::uint64_t> auts;

  const auto scan_chunk = [&](std::int64_t lo, std::int64_t hi, std::vector<std::uint64_t>& out) {
    std::vector<int> p = nth_permutation(n, static_cast<std::uint64_t>(lo));
    for (std::int64_t r = lo; r < hi; ++r) {
      if (preserves(p)) out.push_back(encode_permutation(p));
      std::next_permutation(p.begin(), p.end());
    }
  };

#ifdef _OPENMP
  if (parallel) {
    const int chunks = std::max(1, omp_get_max_threads() * 4);
    std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1)
    for (int c = 0; c < chunks; ++c) {
      const std::int64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
      scan_chunk(lo, hi, found[static_cast<std::size_t>(c)]);
    }
    for (const auto& part : found) auts.insert(auts.end(), part.begin(), part.end());
  } else
#else
  (void)parallel;
#endif
  {
    scan_chunk(0, total, auts);
  }
  std::sort(auts.begin(), auts.end());

  // small generating set by greedy closure
  std::unordered_set<std::uint64_t> member(auts.begin(), auts.end());
  std::unordered_set<std::uint64_t> closure;
  std::vector<int> identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
  closure.insert(encode_permutation(identity));
  std::vector<std::vector<int>> gens;
  for (std::uint64_t key : auts) {
    if (closure.count(key) != 0) continue;
    gens.push_back(decode_permutation(key, n));
    close_subgroup(closure, gens, n);
  }
  if (closure.size() != auts.size())
    throw std::logic_error("generator closure disagrees with the collected group");

  // normalizer scan: p normalizes iff it conjugates every generator back in
  const auto normalizes = [&](const std::vector<int>& p) {
    const auto pinv = inverse_permutation(p);
    for (const auto& g : gens)
      if (member.count(encode_permutation(compose(p, compose(g, pinv)))) == 0) return false;
    return true;
  };

  std::int64_t norm_count = 0;
  const auto count_chunk = [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t local = 0;
    std::vector<int> p = nth_permutation(n, static_cast<std::uint64_t>(lo));
    for (std::int64_t r = lo; r < hi; ++r) {
      if (normalizes(p)) ++local;
      std::next_permutation(p.begin(), p.end());
    }
    return local;
  };

#ifdef _OPENMP
  if (parallel) {
    const int chunks = std::max(1, omp_get_max_threads() * 4);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : norm_count)
    for (int c = 0; c < chunks; ++c) {
      const std::int64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
      norm_count += count_chunk(lo, hi);
    }
  } else
#endif
  {
    norm_count = count_chunk(0, total);
  }

  GroupOrders out;
  out.aut = static_cast<std::int64_t>(auts.size());
  out.normalizer = norm_count;
  return out;
}

} // namespace circ
