// circulant: command-line front end for the enumeration engine, the
// structural method, the oracles and the reference-verification suite.
//
// Exit status: 0 success, 1 a requested verification failed, 2 invalid input.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "circ/datafile.hpp"
#include "circ/golden.hpp"
#include "circ/json_io.hpp"
#include "circ/multiplier.hpp"
#include "circ/oracle.hpp"
#include "circ/schur.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using circ::BigInt;
using circ::Mode;
using circ::Polynomial;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;

// "A21" -> "A_21"; the total row "A" stays bare
std::string pretty_row(const std::string& name) {
  return name.size() > 1 ? name.substr(0, 1) + "_" + name.substr(1) : name;
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::int64_t power(int p, int k) {
  std::int64_t n = 1;
  while (k-- > 0) n *= p;
  return n;
}

void apply_thread_cap() {
#ifdef _OPENMP
  if (const char* env = std::getenv("CIRC_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

void print_csv(const Polynomial& poly) {
  std::cout << "valency,count\n";
  for (const auto& [e, c] : poly.terms()) std::cout << e << "," << c.str() << "\n";
}

struct EnumerateArgs {
  int p = 3;
  int k = 3;
  std::string mode = "directed";
  std::string format = "text";
  std::string row = "A";
  bool by_valency = false;
  bool detail = false;
  bool serial = false;
};

int cmd_enumerate(const EnumerateArgs& args) {
  const circ::EnumerationReport rep =
      circ::enumerate_order(power(args.p, args.k), circ::mode_from_string(args.mode),
                            !args.serial);
  if (args.format == "json") {
    nlohmann::ordered_json out;
    out["order"] = rep.modulus;
    out["mode"] = circ::to_string(rep.mode);
    out["total"] = rep.row("A").sum_of_coefficients().str();
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    if (args.detail)
      for (const auto& [name, poly] : rep.rows) rows[name] = circ::to_json(poly);
    else
      rows[args.row] = circ::to_json(rep.row(args.row));
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (args.format == "csv") {
    if (args.detail) {
      std::cerr << "csv renders a single polynomial; --detail is a table (use json)\n";
      return kExitInvalidInput;
    }
    print_csv(rep.row(args.row));
    return kExitOk;
  }
  if (args.detail) {
    for (const auto& [name, poly] : rep.rows) {
      std::cout << pretty_row(name) << " = " << poly.sum_of_coefficients().str() << "\n";
      if (args.by_valency) std::cout << "  " << poly.to_string() << "\n";
    }
    return kExitOk;
  }
  if (args.by_valency)
    std::cout << rep.row(args.row).to_string() << "\n";
  else
    std::cout << rep.row(args.row).sum_of_coefficients().str() << "\n";
  return kExitOk;
}

int cmd_selfcomp(const EnumerateArgs& args) {
  const Mode mode = circ::mode_from_string(args.mode);
  const circ::EnumerationReport rep =
      circ::enumerate_order(power(args.p, args.k), mode, !args.serial);
  if (args.format == "csv") {
    std::cerr << "self-complementary counts are per subproblem, not per valency (use json)\n";
    return kExitInvalidInput;
  }
  if (args.format == "json") {
    nlohmann::ordered_json out;
    out["order"] = rep.modulus;
    out["mode"] = circ::to_string(rep.mode);
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (const auto& [name, poly] : rep.rows)
      rows[name] = circ::self_complementary_count(poly, mode).str();
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& [name, poly] : rep.rows)
    std::cout << pretty_row(name) << " = " << circ::self_complementary_count(poly, mode).str()
              << "\n";
  return kExitOk;
}

int cmd_identities(const EnumerateArgs& args) {
  const circ::EnumerationReport rep =
      circ::enumerate_order(power(args.p, args.k), circ::mode_from_string(args.mode),
                            !args.serial);
  const auto checks = circ::check_identities(rep);
  std::size_t passed = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    passed += c.pass ? 1 : 0;
  }
  std::cout << passed << "/" << checks.size() << " pass\n";
  return passed == checks.size() ? kExitOk : kExitVerifyFailed;
}

struct StructuralArgs {
  int n = 27;
  std::string mode = "undirected";
  std::string catalog;
  std::string format = "text";
  bool by_valency = false;
};

int cmd_structural(const StructuralArgs& args) {
  const circ::RingCatalog cat = args.catalog.empty() ? circ::builtin_ring_catalog(args.n)
                                                     : circ::load_ring_catalog(args.catalog);
  const Mode mode = circ::mode_from_string(args.mode);
  const circ::StructuralReport rep = circ::structural_enumeration(cat, mode);
  if (args.format == "csv") {
    print_csv(rep.total);
    return kExitOk;
  }
  if (args.format == "json") {
    nlohmann::ordered_json out;
    out["modulus"] = rep.modulus;
    out["mode"] = circ::to_string(rep.mode);
    nlohmann::ordered_json rings = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.names.size(); ++i)
      rings.push_back({{"name", rep.names[i]},
                       {"labelled", circ::to_json(rep.labelled[i])},
                       {"exact", circ::to_json(rep.unlabelled[i])}});
    out["rings"] = rings;
    out["total"] = circ::to_json(rep.total);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < rep.names.size(); ++i) {
    std::cout << rep.names[i] << ": f(1) = " << rep.labelled[i].sum_of_coefficients().str()
              << ", g(1) = " << rep.unlabelled[i].sum_of_coefficients().str() << "\n";
    if (args.by_valency) std::cout << "  g = " << rep.unlabelled[i].to_string() << "\n";
  }
  std::cout << "g(1) = " << rep.total.sum_of_coefficients().str() << "\n";
  if (args.by_valency) std::cout << "g = " << rep.total.to_string() << "\n";
  return kExitOk;
}

struct OracleArgs {
  int p = 3;
  int k = 2;
  int n = 9;
  std::string mode = "directed";
  bool long_run = false;
  bool serial = false;
};

int report_match(const std::string& label, const Polynomial& got, const Polynomial& want) {
  if (got == want) {
    std::cout << got.sum_of_coefficients().str() << " (matches analytic)\n";
    return kExitOk;
  }
  std::cout << got.sum_of_coefficients().str() << " (MISMATCH: analytic total "
            << want.sum_of_coefficients().str() << ")\n";
  std::cerr << label << " disagrees with the analytic engine\n";
  return kExitVerifyFailed;
}

int cmd_oracle_brute(const OracleArgs& args) {
  const Mode mode = circ::mode_from_string(args.mode);
  const Polynomial got = circ::brute_iso_classes(args.n, mode, !args.serial);
  return report_match("exhaustive scan", got, circ::enumerate_order(args.n, mode).row("A"));
}

int cmd_oracle_criterion(const OracleArgs& args) {
  const Mode mode = circ::mode_from_string(args.mode);
  if (args.p == 3 && args.k == 3 && mode == Mode::directed && !args.long_run) {
    std::cerr << "the directed (3,3) scan covers 2^26 masks; pass --long-run to confirm\n";
    return kExitInvalidInput;
  }
  const Polynomial got = circ::criterion_orbit_count(args.p, args.k, mode, !args.serial);
  return report_match("criterion scan", got,
                      circ::enumerate_order(power(args.p, args.k), mode).row("A"));
}

int cmd_oracle_closedform(const OracleArgs& args) {
  const Mode mode = circ::mode_from_string(args.mode);
  const Polynomial a1 = circ::closed_form_A1_p2(args.p, mode);
  const Polynomial a22 = circ::closed_form_A22_p2(args.p, mode);
  const circ::EnumerationReport rep = circ::enumerate_p2(args.p, mode, !args.serial);
  int status = kExitOk;
  const auto line = [&](const std::string& name, const Polynomial& got, const Polynomial& want) {
    const bool ok = got == want;
    std::cout << pretty_row(name) << " total = " << got.sum_of_coefficients().str()
              << (ok ? " (matches analytic)" : " (MISMATCH)") << "\n";
    if (!ok) status = kExitVerifyFailed;
  };
  line("A1", a1, rep.row("A1"));
  line("A22", a22, rep.row("A22"));
  const std::int64_t modulus = static_cast<std::int64_t>(args.p) * args.p - 1;
  for (const auto& [name, poly] :
       {std::pair<std::string, const Polynomial&>{"A1", a1}, {"A22", a22}}) {
    const circ::CyclicPolynomial c(poly, modulus);
    const bool ok = c == c.substitute_power(args.p);
    std::cout << "congruence " << pretty_row(name) << "(t) == " << pretty_row(name)
              << "(t^p) mod t^" << modulus << " - 1: " << (ok ? "holds" : "FAILS") << "\n";
    if (!ok) status = kExitVerifyFailed;
  }
  return status;
}

int cmd_golden(bool long_run, bool serial) {
  circ::AcceptanceOptions opts;
  opts.long_run = long_run;
  opts.parallel = !serial;
  bool all_pass = true;
  for (const auto& r : circ::run_reference_checks(opts)) {
    std::cout << circ::format_criterion(r) << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
  apply_thread_cap();

  CLI::App app{"Exact enumeration of circulant graphs and digraphs of odd prime-power order"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };
  const auto add_pk = [](CLI::App* cmd, EnumerateArgs& a) {
    cmd->add_option("--p", a.p, "odd prime")->required();
    cmd->add_option("--k", a.k, "exponent of the order p^k")->check(CLI::Range(1, 3));
    cmd->add_option("--mode", a.mode, "undirected or directed")->required();
    cmd->add_flag("--serial", a.serial, "disable the parallel kernels");
  };

  EnumerateArgs enum_args;
  CLI::App* enumerate = app.add_subcommand("enumerate", "count isomorphism classes by valency");
  add_pk(enumerate, enum_args);
  enumerate->add_flag("--by-valency", enum_args.by_valency, "print the full polynomial");
  enumerate->add_flag("--detail", enum_args.detail, "print the per-subproblem breakdown");
  enumerate->add_option("--row", enum_args.row, "which generating function to print");
  add_format(enumerate, enum_args.format);

  EnumerateArgs sc_args;
  CLI::App* selfcomp =
      app.add_subcommand("selfcomp", "count self-complementary classes per subproblem");
  add_pk(selfcomp, sc_args);
  add_format(selfcomp, sc_args.format);

  EnumerateArgs id_args;
  CLI::App* identities =
      app.add_subcommand("identities", "verify the transform identities between subproblems");
  add_pk(identities, id_args);

  StructuralArgs str_args;
  CLI::App* structural =
      app.add_subcommand("structural", "enumerate via the partition-algebra recursion");
  structural->add_option("--n", str_args.n, "modulus (9 or 27 with the built-in catalogs)")
      ->required();
  structural->add_option("--mode", str_args.mode, "undirected or directed");
  structural->add_option("--catalog", str_args.catalog, "path to an alternative ring catalog");
  structural->add_flag("--by-valency", str_args.by_valency, "print the full polynomials");
  add_format(structural, str_args.format);

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "independent brute-force verifications");
  oracle->require_subcommand(1);
  CLI::App* brute = oracle->add_subcommand("brute", "canonical forms over all relabelings");
  brute->add_option("--n", oracle_args.n, "order (odd, at most 9)")->required();
  brute->add_option("--mode", oracle_args.mode, "undirected or directed")->required();
  brute->add_flag("--serial", oracle_args.serial, "disable the parallel kernels");
  CLI::App* criterion =
      oracle->add_subcommand("criterion", "orbit scan of connecting-set bitmasks");
  criterion->add_option("--p", oracle_args.p, "odd prime")->required();
  criterion->add_option("--k", oracle_args.k, "exponent of the order p^k")
      ->check(CLI::Range(1, 3));
  criterion->add_option("--mode", oracle_args.mode, "undirected or directed")->required();
  criterion->add_flag("--long-run", oracle_args.long_run, "allow the 2^26-mask directed scan");
  criterion->add_flag("--serial", oracle_args.serial, "disable the parallel kernels");
  CLI::App* closedform =
      oracle->add_subcommand("closedform", "order p^2 closed forms and congruences");
  closedform->add_option("--p", oracle_args.p, "odd prime")->required();
  closedform->add_option("--mode", oracle_args.mode, "undirected or directed")->required();

  bool golden_long = false;
  bool golden_serial = false;
  CLI::App* golden = app.add_subcommand("golden", "run the reference-verification suite");
  golden->add_flag("--long-run", golden_long, "include the 2^26-mask directed scan");
  golden->add_flag("--serial", golden_serial, "disable the parallel kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*enumerate || *selfcomp || *identities) {
      const EnumerateArgs& a = *enumerate ? enum_args : *selfcomp ? sc_args : id_args;
      if (!is_odd_prime(a.p)) {
        std::cerr << "p must be an odd prime\n";
        return kExitInvalidInput;
      }
      if (*enumerate) return cmd_enumerate(a);
      if (*selfcomp) return cmd_selfcomp(a);
      return cmd_identities(a);
    }
    if (*structural) return cmd_structural(str_args);
    if (*oracle) {
      if ((*criterion || *closedform) && !is_odd_prime(oracle_args.p)) {
        std::cerr << "p must be an odd prime\n";
        return kExitInvalidInput;
      }
      if (*brute) return cmd_oracle_brute(oracle_args);
      if (*criterion) return cmd_oracle_criterion(oracle_args);
      return cmd_oracle_closedform(oracle_args);
    }
    return cmd_golden(golden_long, golden_serial);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
