#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "solvlen/natural.hpp"

namespace solvlen {

/// Prime factorization as (prime, exponent) pairs, primes strictly
/// increasing. The empty factorization is 1. For a solvable group the
/// composition length is exponent_sum() of its order.
struct Factorization {
  std::vector<std::pair<uint64_t, uint64_t>> factors;

  uint64_t exponent_sum() const;
  Natural value() const;
  std::string str() const; // "2^4·3^3", single primes without "^1", "1" if empty

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Trial division over primes <= 10^6. A residual above 10^12 cannot be
// certified prime by that sieve and raises Error; n < 1 raises Error.
Factorization factorize(const Natural& n);

} // namespace solvlen
