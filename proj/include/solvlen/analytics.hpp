#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "solvlen/families.hpp"
#include "solvlen/natural.hpp"

namespace solvlen {

// Tolerances: exact identities are held to 1e-9; values matched against
// rounded two-decimal prints get the looser windows named in the checks.
inline constexpr double kTightTol = 1e-9;

struct BoundConstants {
  double gamma; // 5 log9 2
  double gamma0; // 2 log7 2
  double delta; // gamma log2(gamma/8) - (gamma+1) log2(gamma+1) + 10
  double delta0; // gamma0 log2(gamma0/5) - (gamma0+1) log2(gamma0+1) + 5
};

/// Computes the four constants from their defining formulas and asserts
/// delta < 3, delta0 < 2.
BoundConstants delta_constants();

struct OptimumResult {
  double r_star; // gamma c / (gamma + 1)
  double value; // f(r_star)
  double grid_argmax; // independent grid + ternary refinement
  double grid_max;
  bool certified; // no sample exceeded value + 1e-9
};

/// Maximum of f(r) = gamma log2(r/8) + log2(c-r) + 10 over (0, c),
/// with a sampling oracle certifying the closed-form optimum.
OptimumResult upper_bound_optimum(double c, uint32_t grid_samples = 100000);

/// 5 log9(k/8) - 2/3 for the five tower constants k.
double x_n(uint32_t k);

/// Exact (a_n, b_n) with a_0 = b_0 = 0, a_n = 3^(b_{n-1}), b_n = 2^(a_n - 1).
/// n >= 4 is refused: a_4 = 3^(2^80) has no exact representation here.
std::pair<Natural, Natural> ab_sequence(uint32_t n);

/// One derived-quotient order p^exponent of the residually solvable
/// tower. Term 13 carries the printed exponent it disagrees with.
struct SymbolicOrder {
  uint32_t prime;
  Natural exponent;
  bool printed_mismatch = false;
  Natural printed_exponent; // only set when printed_mismatch
};

/// First `count` derived-quotient orders (count <= 14), from the
/// recursion and the central-product block orders.
std::vector<SymbolicOrder> derived_quotient_orders(uint32_t count);

/// Exponent sum of the first d derived-quotient orders, d <= 10.
Natural cs_prefix(uint32_t d);

struct CnBounds {
  Natural lower, upper;
};
/// Tightest stated bounds for the minimal nilpotent composition length.
CnBounds cn_bounds(uint32_t d);

struct ReferenceTables {
  // minimal solvable composition lengths for d = 1..8
  static constexpr std::array<uint64_t, 8> c_S = {1, 2, 4, 5, 7, 8, 13, 15};
  // minimal p-group composition lengths
  static constexpr uint64_t beta_any_1 = 1;
  static constexpr uint64_t beta_any_2 = 3;
  static constexpr uint64_t beta_ge5_3 = 6;
  static constexpr uint64_t beta_2_3 = 7;
  static constexpr uint64_t beta_3_3 = 7;
  static constexpr uint64_t beta_ge5_4 = 14;
};

struct InequalityCheck {
  std::string id;
  std::string detail;
  bool pass;
};

/// The constant chains and, for each report, the applicable sandwich
/// inequality (5 log9 c - 2/3 < d for the G towers, the odd-order bound
/// gamma0 log2 c + 2/3 < d for the H towers).
std::vector<InequalityCheck>
inequality_suite(const std::vector<GroupReport>& reports);

} // namespace solvlen
