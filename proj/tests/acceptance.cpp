// Acceptance gate: runs the ten reference checks and prints one line per
// criterion. Exit status 0 iff every criterion passed.
//
//   usage: acceptance [--long-run] [--serial] [--data-dir DIR]
//
// --long-run adds the full directed order-27 mask scan to criterion 9.

#include <algorithm>
#include <cstdio>
#include <string>

#include "circ/golden.hpp"

int main(int argc, char** argv) {
  circ::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--long-run") {
      opts.long_run = true;
    } else if (arg == "--serial") {
      opts.parallel = false;
    } else if (arg == "--data-dir" && i + 1 < argc) {
      opts.data_dir = argv[++i];
    } else {
      std::fprintf(stderr, "usage: acceptance [--long-run] [--serial] [--data-dir DIR]\n");
      return 2;
    }
  }

  const auto results = circ::run_reference_checks(opts);
  bool all_pass = true;
  for (const auto& r : results) {
    std::puts(circ::format_criterion(r).c_str());
    all_pass = all_pass && r.pass;
  }
  std::printf("%zu/%zu criteria passed\n",
              static_cast<std::size_t>(
                  std::count_if(results.begin(), results.end(), [](auto& r) { return r.pass; })),
              results.size());
  return all_pass ? 0 : 1;
}
