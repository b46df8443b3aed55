#include "circ/datafile.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef CIRC_SOURCE_DATA_DIR
#define CIRC_SOURCE_DATA_DIR "data"
#endif

namespace circ {

std::string default_data_dir() {
  if (const char* env = std::getenv("CIRC_DATA_DIR"); env && *env) return env;
  return CIRC_SOURCE_DATA_DIR;
}

GoldenFile load_golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  GoldenFile out;
  std::string line;
  std::string poly_name;
  Polynomial current;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "version") {
      int v = 0;
      if (!(ls >> v) || v != 1) fail("unsupported data file version");
    } else if (tok == "poly") {
      if (!poly_name.empty()) fail("poly block not closed");
      if (!(ls >> poly_name)) fail("poly needs a name");
      current = Polynomial();
    } else if (tok == "end") {
      if (poly_name.empty()) fail("end outside poly block");
      if (!out.polys.emplace(poly_name, std::move(current)).second) fail("duplicate poly " + poly_name);
      poly_name.clear();
    } else if (tok == "scalar") {
      std::string name, value;
      if (!(ls >> name >> value)) fail("scalar needs a name and a value");
      if (!out.scalars.emplace(name, BigInt(value)).second) fail("duplicate scalar " + name);
    } else if (!poly_name.empty()) {
      std::int64_t exp = 0;
      std::string coeff;
      std::istringstream ts(tok);
      if (!(ts >> exp) || !(ls >> coeff)) fail("expected '<exp> <coeff>'");
      current += Polynomial::monomial(exp, BigInt(coeff));
    } else {
      fail("unexpected token '" + tok + "'");
    }
  }
  if (!poly_name.empty()) fail("unterminated poly block");
  return out;
}

} // namespace circ
