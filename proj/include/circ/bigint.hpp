#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace circ {

// Exact arbitrary-precision integer. Counts in this project reach ~10^36,
// far past any fixed-width type.
using BigInt = boost::multiprecision::cpp_int;

} // namespace circ
