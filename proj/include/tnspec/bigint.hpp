#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tnspec {

// Exact arbitrary-precision integer. Squared tableau counts sum to n!,
// which overflows 64 bits already at n = 21, so every multiplicity-sized
// quantity in the library is a BigInt.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace tnspec
