#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace solvlen {

// Exact nonnegative integers. Group orders here reach ~2^460 and symbolic
// exponents reach 2^81, far past machine words.
using Natural = boost::multiprecision::cpp_int;

inline Natural natural_pow(const Natural& base, uint64_t exp) {
  Natural r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

} // namespace solvlen
