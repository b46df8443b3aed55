#pragma once

// The reference-verification suite: ten numbered checks, each comparing an
// independent computation path against frozen reference data (data/golden/)
// or against another path. Used by the acceptance test binary and by the
// CLI's `golden` subcommand.

#include <string>
#include <vector>

#include "circ/multiplier.hpp"

namespace circ {

struct AcceptanceOptions {
  bool long_run = false;  // adds the 2^26-mask directed order-27 orbit scan
  bool parallel = true;
  std::string data_dir;   // empty: default_data_dir()
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail; // failure summary, empty when pass
  double seconds = 0.0;
};

std::vector<CriterionResult> run_reference_checks(const AcceptanceOptions& opts = {});

// render one result as the canonical one-line form, e.g.
// " 3 PASS final generating functions (0.41s)"
std::string format_criterion(const CriterionResult& r);

} // namespace circ
