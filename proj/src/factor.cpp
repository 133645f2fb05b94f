#include "solvlen/factor.hpp"

#include "solvlen/error.hpp"

namespace solvlen {

uint64_t Factorization::exponent_sum() const {
  uint64_t s = 0;
  for (const auto& [p, e] : factors) s += e;
  return s;
}

Natural Factorization::value() const {
  Natural v = 1;
  for (const auto& [p, e] : factors) v *= natural_pow(Natural(p), e);
  return v;
}

std::string Factorization::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += "·";
    out += std::to_string(p);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Factorization factorize(const Natural& n) {
  if (n < 1) throw Error("factorize: argument must be >= 1");
  Factorization f;
  Natural rest = n;
  auto strip = [&](uint64_t p) {
    uint64_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) f.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (uint64_t d = 5; d <= 1000000; d += 6) {
    if (rest == 1) break;
    strip(d);
    strip(d + 2);
  }
  if (rest != 1) {
    // No factor <= 10^6 remains, so a residual <= 10^12 must be prime.
    if (rest > Natural(1000000000000ll))
      throw Error("factorize: residual " + rest.str() +
                  " exceeds 10^12 after trial division; cannot certify");
    f.factors.emplace_back(static_cast<uint64_t>(rest), 1);
  }
  return f;
}

} // namespace solvlen
