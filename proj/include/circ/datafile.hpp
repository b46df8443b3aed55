#pragma once

// Plain-text data files holding reference polynomials and scalars:
//   version 1
//   poly <name>        one "<exp> <coeff>" pair per line, closed by "end"
//   scalar <name> <value>
// '#' starts a comment. Values are decimal, arbitrary precision.

#include <map>
#include <string>

#include "circ/poly.hpp"

namespace circ {

// Directory holding the ring catalogs and reference files: the CIRC_DATA_DIR
// environment variable if set, otherwise the source tree's data/ directory.
std::string default_data_dir();

struct GoldenFile {
  std::map<std::string, Polynomial> polys;
  std::map<std::string, BigInt> scalars;
};

GoldenFile load_golden_file(const std::string& path);

} // namespace circ
