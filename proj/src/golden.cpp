#include "circ/golden.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <sstream>

#include "circ/datafile.hpp"
#include "circ/oracle.hpp"
#include "circ/schur.hpp"

namespace circ {

namespace {

struct GoldenKey {
  std::string row;
  Mode mode = Mode::directed;
  int order = 0;
};

// names of the form "<row>.<u|d>.<order>", e.g. "A22.u.125"
std::optional<GoldenKey> parse_key(const std::string& name) {
  const auto a = name.find('.');
  const auto b = name.rfind('.');
  if (a == std::string::npos || b == a) return std::nullopt;
  GoldenKey key;
  key.row = name.substr(0, a);
  const std::string mode = name.substr(a + 1, b - a - 1);
  if (mode == "u")
    key.mode = Mode::undirected;
  else if (mode == "d")
    key.mode = Mode::directed;
  else
    return std::nullopt;
  key.order = std::stoi(name.substr(b + 1));
  return key;
}

class Failures {
public:
  void add(std::string msg) {
    ++count_;
    if (count_ <= 3) msgs_.push_back(std::move(msg));
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    std::string out;
    for (std::size_t i = 0; i < msgs_.size(); ++i) out += (i ? "; " : "") + msgs_[i];
    if (count_ > static_cast<int>(msgs_.size()))
      out += "; and " + std::to_string(count_ - static_cast<int>(msgs_.size())) + " more";
    return out;
  }

private:
  int count_ = 0;
  std::vector<std::string> msgs_;
};

struct Context {
  AcceptanceOptions opts;
  std::string dir;
  std::map<std::string, GoldenFile> files;
  std::map<std::string, EnumerationReport> reports;

  const GoldenFile& file(const std::string& rel) {
    auto it = files.find(rel);
    if (it == files.end()) it = files.emplace(rel, load_golden_file(dir + "/golden/" + rel)).first;
    return it->second;
  }

  const EnumerationReport& report(int order, Mode mode) {
    const std::string key = std::to_string(order) + "." + to_string(mode);
    auto it = reports.find(key);
    if (it == reports.end())
      it = reports.emplace(key, enumerate_order(order, mode, opts.parallel)).first;
    return it->second;
  }
};

std::string poly_mismatch(const Polynomial& got, const Polynomial& want) {
  for (const auto& [e, c] : want.terms())
    if (got.coeff(e) != c)
      return "coefficient of t^" + std::to_string(e) + " is " + got.coeff(e).str() + ", reference " +
             c.str();
  for (const auto& [e, c] : got.terms())
    if (want.coeff(e) != c)
      return "unexpected term " + c.str() + " t^" + std::to_string(e);
  return "";
}

// ---- the ten criteria -----------------------------------------------------

std::string check_totals(Context& ctx) {
  Failures bad;
  const struct {
    int order;
    Mode mode;
    const char* total;
  } cases[] = {
      {27, Mode::undirected, "928"},
      {27, Mode::directed, "3728891"},
      {125, Mode::undirected, "92233720411499283"},
      {125, Mode::directed, "212676479325586539710725989876778596"},
  };
  for (const auto& c : cases) {
    const BigInt got = ctx.report(c.order, c.mode).row("A").sum_of_coefficients();
    if (got != BigInt(c.total))
      bad.add("order " + std::to_string(c.order) + " " + to_string(c.mode) + ": " + got.str() +
              " != " + c.total);
  }
  return bad.summary();
}

std::string check_subproblem_totals(Context& ctx) {
  Failures bad;
  const GoldenFile& totals = ctx.file("totals_p3.txt");
  for (const auto& [name, want] : totals.scalars) {
    const auto key = parse_key(name);
    if (!key) {
      bad.add("unparseable reference name " + name);
      continue;
    }
    const BigInt got = ctx.report(key->order, key->mode).row(key->row).sum_of_coefficients();
    if (got != want) bad.add(name + ": " + got.str() + " != " + want.str());
  }
  return bad.summary();
}

std::string check_final_genfns(Context& ctx) {
  Failures bad;
  for (const char* rel : {"genfns_order27.txt", "genfns_order125.txt"}) {
    const GoldenFile& file = ctx.file(rel);
    for (const auto& [name, want] : file.polys) {
      const auto key = parse_key(name);
      if (!key || key->row != "A") continue;
      if (const auto why = poly_mismatch(ctx.report(key->order, key->mode).row("A"), want);
          !why.empty())
        bad.add(name + ": " + why);
    }
  }
  return bad.summary();
}

std::string check_subproblem_genfns(Context& ctx) {
  Failures bad;
  for (const char* rel : {"genfns_order9.txt", "genfns_order27.txt", "genfns_order125.txt"}) {
    const GoldenFile& file = ctx.file(rel);
    for (const auto& [name, want] : file.polys) {
      const auto key = parse_key(name);
      if (!key) {
        bad.add("unparseable reference name " + name);
        continue;
      }
      if (const auto why =
              poly_mismatch(ctx.report(key->order, key->mode).row(key->row), want);
          !why.empty())
        bad.add(name + ": " + why);
    }
  }
  // the directed order-27 breakdown at one interior valency, kept as scalars
  const GoldenFile& selfcomp = ctx.file("selfcomp.txt");
  for (const auto& [name, want] : selfcomp.scalars) {
    if (name.rfind("val13.", 0) != 0) continue;
    const auto key = parse_key(name.substr(6));
    if (!key) {
      bad.add("unparseable reference name " + name);
      continue;
    }
    const BigInt got = ctx.report(key->order, key->mode).row(key->row).coeff(13);
    if (got != want) bad.add(name + ": " + got.str() + " != " + want.str());
  }
  return bad.summary();
}

std::string check_structural(Context& ctx) {
  Failures bad;

  // order 27, undirected: full polynomial recursion
  const RingCatalog cat27 = load_ring_catalog(ctx.dir + "/srings_z27.txt");
  const StructuralReport rep27 = structural_enumeration(cat27, Mode::undirected);
  const GoldenFile& s27 = ctx.file("structural_order27.txt");
  for (std::size_t i = 0; i < cat27.rings.size(); ++i) {
    const std::string suffix = std::to_string(i + 1) + ".z27";
    if (const auto* want = &s27.polys.at("f" + suffix);
        !poly_mismatch(rep27.labelled[i], *want).empty())
      bad.add("f" + suffix + ": " + poly_mismatch(rep27.labelled[i], *want));
    if (const auto* want = &s27.polys.at("g" + suffix);
        !poly_mismatch(rep27.unlabelled[i], *want).empty())
      bad.add("g" + suffix + ": " + poly_mismatch(rep27.unlabelled[i], *want));
  }
  if (const auto why = poly_mismatch(rep27.total, s27.polys.at("g.z27")); !why.empty())
    bad.add("g.z27: " + why);
  if (const auto why = poly_mismatch(rep27.total, ctx.report(27, Mode::undirected).row("A"));
      !why.empty())
    bad.add("structural total vs multiplier total (27 undirected): " + why);

  // order 9: scalar recursion in both modes, plus brute-force group orders
  const RingCatalog cat9 = load_ring_catalog(ctx.dir + "/srings_z9.txt");
  const GoldenFile& s9 = ctx.file("structural_order9.txt");
  for (const Mode mode : {Mode::undirected, Mode::directed}) {
    const StructuralReport rep9 = structural_enumeration(cat9, mode);
    const std::string m = mode == Mode::undirected ? "u" : "d";
    for (std::size_t i = 0; i < cat9.rings.size(); ++i) {
      const std::string fi = "f" + std::to_string(i + 1) + "." + m + ".9";
      const std::string gi = "g" + std::to_string(i + 1) + "." + m + ".9";
      if (rep9.labelled[i].sum_of_coefficients() != s9.scalars.at(fi))
        bad.add(fi + ": " + rep9.labelled[i].sum_of_coefficients().str() + " != " +
                s9.scalars.at(fi).str());
      if (rep9.unlabelled[i].sum_of_coefficients() != s9.scalars.at(gi))
        bad.add(gi + ": " + rep9.unlabelled[i].sum_of_coefficients().str() + " != " +
                s9.scalars.at(gi).str());
    }
    const BigInt total = rep9.total.sum_of_coefficients();
    if (total != s9.scalars.at("g." + m + ".9"))
      bad.add("g." + m + ".9: " + total.str() + " != " + s9.scalars.at("g." + m + ".9").str());
    if (const auto why = poly_mismatch(rep9.total, ctx.report(9, mode).row("A")); !why.empty())
      bad.add("structural total vs multiplier total (9 " + to_string(mode) + "): " + why);
  }
  for (const auto& ring : cat9.rings) {
    const GroupOrders orders = brute_color_group_orders(ring, 9, ctx.opts.parallel);
    if (orders.aut != ring.aut_order)
      bad.add(ring.name + " automorphism order: " + orders.aut.str() + " != " +
              ring.aut_order.str());
    if (orders.normalizer != ring.normalizer_order)
      bad.add(ring.name + " normalizer order: " + orders.normalizer.str() + " != " +
              ring.normalizer_order.str());
  }
  return bad.summary();
}

std::string check_identities_suite(Context& ctx) {
  Failures bad;
  for (const int order : {27, 125, 343})
    for (const Mode mode : {Mode::undirected, Mode::directed}) {
      const auto checks = check_identities(ctx.report(order, mode));
      if (checks.size() != 10)
        bad.add("order " + std::to_string(order) + " " + to_string(mode) + ": expected 10 checks");
      for (const auto& c : checks)
        if (!c.pass)
          bad.add("order " + std::to_string(order) + " " + to_string(mode) + ": " + c.name);
    }
  return bad.summary();
}

std::string check_selfcomp(Context& ctx) {
  Failures bad;
  const GoldenFile& selfcomp = ctx.file("selfcomp.txt");
  for (const auto& [name, want] : selfcomp.scalars) {
    if (name.rfind("sc.", 0) != 0) continue;
    const auto key = parse_key(name.substr(3));
    if (!key) {
      bad.add("unparseable reference name " + name);
      continue;
    }
    const BigInt got =
        self_complementary_count(ctx.report(key->order, key->mode).row(key->row), key->mode);
    if (got != want) bad.add(name + ": " + got.str() + " != " + want.str());
  }
  return bad.summary();
}

std::string check_closed_forms(Context& ctx) {
  Failures bad;
  const GoldenFile& closed49 = ctx.file("closed_forms_order49.txt");
  for (const int p : {3, 5, 7, 11, 13})
    for (const Mode mode : {Mode::undirected, Mode::directed}) {
      const Polynomial a1 = closed_form_A1_p2(p, mode);
      const Polynomial a22 = closed_form_A22_p2(p, mode);
      const std::string tag = "p=" + std::to_string(p) + " " + to_string(mode);
      // against the multiplier engine
      const EnumerationReport& rep = ctx.report(p * p, mode);
      if (const auto why = poly_mismatch(a1, rep.row("A1")); !why.empty())
        bad.add("A1 closed form vs engine, " + tag + ": " + why);
      if (const auto why = poly_mismatch(a22, rep.row("A22")); !why.empty())
        bad.add("A22 closed form vs engine, " + tag + ": " + why);
      // transform congruences mod t^{p^2-1} - 1
      const std::int64_t N = static_cast<std::int64_t>(p) * p - 1;
      for (const auto& [label, poly] : {std::pair<std::string, const Polynomial&>{"A1", a1},
                                        std::pair<std::string, const Polynomial&>{"A22", a22}}) {
        const CyclicPolynomial c(poly, N);
        if (!(c == c.substitute_power(p)))
          bad.add(label + "(t) != " + label + "(t^p) mod t^" + std::to_string(N) + " - 1, " + tag);
      }
    }
  // against the frozen order-49 reference polynomials
  if (const auto why =
          poly_mismatch(closed_form_A1_p2(7, Mode::directed), closed49.polys.at("A1.d.49"));
      !why.empty())
    bad.add("A1.d.49: " + why);
  if (const auto why =
          poly_mismatch(closed_form_A22_p2(7, Mode::directed), closed49.polys.at("A22.d.49"));
      !why.empty())
    bad.add("A22.d.49: " + why);
  return bad.summary();
}

std::string check_oracles(Context& ctx) {
  Failures bad;
  const auto compare = [&](const std::string& label, const Polynomial& got, const Polynomial& want) {
    if (const auto why = poly_mismatch(got, want); !why.empty()) bad.add(label + ": " + why);
  };
  compare("exhaustive order 9 undirected", brute_iso_classes(9, Mode::undirected, ctx.opts.parallel),
          ctx.report(9, Mode::undirected).row("A"));
  compare("exhaustive order 9 directed", brute_iso_classes(9, Mode::directed, ctx.opts.parallel),
          ctx.report(9, Mode::directed).row("A"));
  compare("criterion orbits (3,3) undirected",
          criterion_orbit_count(3, 3, Mode::undirected, ctx.opts.parallel),
          ctx.report(27, Mode::undirected).row("A"));
  compare("criterion orbits (3,2) undirected",
          criterion_orbit_count(3, 2, Mode::undirected, ctx.opts.parallel),
          ctx.report(9, Mode::undirected).row("A"));
  compare("criterion orbits (3,2) directed",
          criterion_orbit_count(3, 2, Mode::directed, ctx.opts.parallel),
          ctx.report(9, Mode::directed).row("A"));
  compare("criterion orbits (5,2) undirected",
          criterion_orbit_count(5, 2, Mode::undirected, ctx.opts.parallel),
          ctx.report(25, Mode::undirected).row("A"));
  if (ctx.opts.long_run)
    compare("criterion orbits (3,3) directed",
            criterion_orbit_count(3, 3, Mode::directed, ctx.opts.parallel),
            ctx.report(27, Mode::directed).row("A"));
  return bad.summary();
}

std::string check_property_suites(Context& ctx) {
  Failures bad;
  // structural invariants of every cached enumeration
  for (const int order : {9, 25, 49, 27, 125, 343})
    for (const Mode mode : {Mode::undirected, Mode::directed})
      for (const auto& c : check_basic_properties(ctx.report(order, mode)))
        if (!c.pass)
          bad.add("order " + std::to_string(order) + " " + to_string(mode) + " " + c.name + ": " +
                  c.detail);

  // exhaustive Burnside sums agree with the factored fast paths (order 27)
  for (const Mode mode : {Mode::undirected, Mode::directed})
    for (const auto& spec : build_specs_p3(3, mode)) {
      Polynomial exhaustive = Polynomial::one();
      for (const auto& factor : spec.factors)
        exhaustive =
            exhaustive * orbit_weight_enumerator(factor.group, factor.components, ctx.opts.parallel);
      if (!(exhaustive == ctx.report(27, mode).row(spec.name)))
        bad.add("exhaustive vs factored " + spec.name + " (" + to_string(mode) + ")");
    }

  // the substitution t -> t^p has order three modulo t^{p^3-1} - 1
  for (const int p : {3, 5, 7}) {
    const std::int64_t N = static_cast<std::int64_t>(p) * p * p - 1;
    const CyclicPolynomial t(Polynomial::monomial(1), N);
    const CyclicPolynomial t3 = t.substitute_power(p).substitute_power(p).substitute_power(p);
    if (!(t3 == t) || t.substitute_power(p) == t)
      bad.add("t -> t^p is not of order 3 mod t^" + std::to_string(N) + " - 1");
  }

  // ring catalogs satisfy the ring axioms
  for (const int modulus : {9, 27}) {
    const RingCatalog cat = load_ring_catalog(ctx.dir + "/srings_z" + std::to_string(modulus) +
                                              ".txt");
    for (const auto& ring : cat.rings)
      for (const auto& violation : validate_ring(ring, cat.modulus)) bad.add(violation);
  }
  return bad.summary();
}

} // namespace

std::vector<CriterionResult> run_reference_checks(const AcceptanceOptions& opts) {
  Context ctx;
  ctx.opts = opts;
  ctx.dir = opts.data_dir.empty() ? default_data_dir() : opts.data_dir;

  std::vector<CriterionResult> out;
  const auto run = [&](int number, const std::string& name, auto&& body) {
    CriterionResult r;
    r.number = number;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = body(ctx);
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  };

  run(1, "isomorphism-class totals", check_totals);
  run(2, "subproblem totals", check_subproblem_totals);
  run(3, "final generating functions", check_final_genfns);
  run(4, "subproblem generating functions", check_subproblem_genfns);
  run(5, "structural recursion", check_structural);
  run(6, "transform identities", check_identities_suite);
  run(7, "self-complementary counts", check_selfcomp);
  run(8, "closed forms at order p^2", check_closed_forms);
  run(9, "independent oracles", check_oracles);
  run(10, "property suites", check_property_suites);
  return out;
}

std::string format_criterion(const CriterionResult& r) {
  std::ostringstream os;
  os.width(2);
  os << r.number << " " << (r.pass ? "PASS" : "FAIL") << " " << r.name;
  os << " (" << std::fixed;
  os.precision(2);
  os << r.seconds << "s)";
  if (!r.pass) os << "\n      " << r.detail;
  return os.str();
}

} // namespace circ
