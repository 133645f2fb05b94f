#include "solvlen/analytics.hpp"

#include <cmath>

#include "solvlen/error.hpp"

namespace solvlen {

namespace {

double log2d(double x) { return std::log(x) / std::log(2.0); }

double f_bound(double gamma, double r, double c) {
  return gamma * log2d(r / 8.0) + log2d(c - r) + 10.0;
}

} // namespace

BoundConstants delta_constants() {
  BoundConstants b;
  b.gamma = 5.0 * std::log(2.0) / std::log(9.0);
  b.gamma0 = 2.0 * std::log(2.0) / std::log(7.0);
  b.delta = b.gamma * log2d(b.gamma / 8.0) -
            (b.gamma + 1.0) * log2d(b.gamma + 1.0) + 10.0;
  b.delta0 = b.gamma0 * log2d(b.gamma0 / 5.0) -
             (b.gamma0 + 1.0) * log2d(b.gamma0 + 1.0) + 5.0;
  if (!(b.delta < 3.0) || !(b.delta0 < 2.0))
    throw Error("bound constants: delta/delta0 left their proven windows");
  return b;
}

OptimumResult upper_bound_optimum(double c, uint32_t grid_samples) {
  if (!(c >= 2.0)) throw Error("optimum: c must be >= 2");
  if (grid_samples < 16) throw Error("optimum: too few samples");
  BoundConstants b = delta_constants();
  OptimumResult res;
  res.r_star = b.gamma * c / (b.gamma + 1.0);
  res.value = f_bound(b.gamma, res.r_star, c);

  // Independent oracle: coarse grid over (0, c), then ternary refinement
  // inside the bracketing cell (f is strictly concave there).
  double step = c / (grid_samples + 1.0);
  double best_r = step, best_v = f_bound(b.gamma, step, c);
  res.certified = true;
  for (uint32_t i = 1; i <= grid_samples; ++i) {
    double r = step * i;
    double v = f_bound(b.gamma, r, c);
    if (v > best_v) {
      best_v = v;
      best_r = r;
    }
    if (v > res.value + kTightTol) res.certified = false;
  }
  double lo = std::max(best_r - step, step * 0.5);
  double hi = std::min(best_r + step, c - step * 0.5);
  for (int it = 0; it < 200; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (f_bound(b.gamma, m1, c) < f_bound(b.gamma, m2, c))
      lo = m1;
    else
      hi = m2;
  }
  res.grid_argmax = (lo + hi) / 2.0;
  res.grid_max = f_bound(b.gamma, res.grid_argmax, c);
  if (res.grid_max > res.value + kTightTol) res.certified = false;
  return res;
}

double x_n(uint32_t k) {
  switch (k) {
    case 7:
    case 15:
    case 23:
    case 39:
    case 47:
      return 5.0 * std::log(k / 8.0) / std::log(9.0) - 2.0 / 3.0;
    default:
      throw Error("x_n: k must be one of 7, 15, 23, 39, 47");
  }
}

std::pair<Natural, Natural> ab_sequence(uint32_t n) {
  if (n >= 4)
    throw Error("ab sequence: a_4 = 3^(2^80) is beyond exact representation");
  Natural a = 0, b = 0;
  for (uint32_t i = 1; i <= n; ++i) {
    // For i <= 3 both exponents fit a machine word (b_2 = 4, a_3 = 81).
    a = natural_pow(Natural(3), b.convert_to<uint64_t>());
    b = natural_pow(Natural(2), a.convert_to<uint64_t>() - 1);
  }
  return {a, b};
}

std::vector<SymbolicOrder> derived_quotient_orders(uint32_t count) {
  if (count > 14)
    throw Error("derived quotient orders: only 14 terms are representable");
  // Blocks contribute 2, 3, then per n >= 1 the pairs (2^(2 a_n), 2) and
  // (3^(2 b_n), 3); the central-product orders are 2^(2n+1) and 3^(2n+1).
  std::vector<SymbolicOrder> seq;
  seq.push_back({2, 1, false, 0});
  seq.push_back({3, 1, false, 0});
  for (uint32_t n = 1; n <= 3 && seq.size() < 14; ++n) {
    auto [a, b] = ab_sequence(n);
    seq.push_back({2, 2 * a, false, 0});
    seq.push_back({2, 1, false, 0});
    SymbolicOrder odd{3, 2 * b, false, 0};
    if (n == 3) {
      // The recursion gives 2*b_3 = 2^81; the printed list shows 2*3^81.
      odd.printed_mismatch = true;
      odd.printed_exponent = 2 * natural_pow(Natural(3), 81);
    }
    seq.push_back(std::move(odd));
    seq.push_back({3, 1, false, 0});
  }
  seq.resize(std::min<size_t>(seq.size(), count));
  return seq;
}

Natural cs_prefix(uint32_t d) {
  if (d < 1 || d > 10) throw Error("cs prefix: d must be in 1..10");
  std::vector<SymbolicOrder> seq = derived_quotient_orders(d);
  Natural sum = 0;
  for (const SymbolicOrder& t : seq) sum += t.exponent;
  return sum;
}

CnBounds cn_bounds(uint32_t d) {
  if (d < 1) throw Error("cn bounds: d must be >= 1");
  Natural two_dm1 = natural_pow(Natural(2), d - 1);
  Natural lower = two_dm1; // 2^(d-1) <= c_N(d)
  Natural upper = two_dm1 * 2 - 1; // c_N(d) <= 2^d - 1
  if (d >= 3) {
    Natural sharper_lower = two_dm1 + 3 * int64_t(d) - 10;
    if (sharper_lower > lower) lower = sharper_lower;
    Natural sharper_upper = two_dm1 * 2 - 2;
    if (sharper_upper < upper) upper = sharper_upper;
    if (lower > upper)
      throw Error("cn bounds: stated bounds cross at d = " +
                  std::to_string(d));
  }
  return {lower, upper};
}

std::vector<InequalityCheck>
inequality_suite(const std::vector<GroupReport>& reports) {
  std::vector<InequalityCheck> out;
  BoundConstants b = delta_constants();
  auto near = [](double v, double target, double tol) {
    return std::fabs(v - target) <= tol;
  };
  auto add = [&](const std::string& id, const std::string& detail,
                 bool pass) { out.push_back({id, detail, pass}); };

  double v99 = std::pow(9.0, 1.0 / 9.0);
  double v95 = std::pow(9.0, 1.0 / 5.0);
  double v75 = std::pow(7.0, 1.0 / 5.0);
  add("const 9^(1/9)", "computed " + std::to_string(v99) + " ~ 1.27",
      near(v99, 1.27, 0.01));
  add("const 9^(1/5)", "computed " + std::to_string(v95) + " ~ 1.55",
      near(v95, 1.55, 0.01));
  add("const 7^(1/5)", "computed " + std::to_string(v75) + " ~ 1.47",
      near(v75, 1.47, 0.01));
  double m413 = std::pow(4.0, 1.0 / 3.0), m312 = std::sqrt(3.0);
  add("chain 9^(1/5) < 4^(1/3) < 3^(1/2) < 2",
      std::to_string(v95) + " < " + std::to_string(m413) + " < " +
          std::to_string(m312) + " < 2",
      v95 < m413 && m413 < m312 && m312 < 2.0);
  double ratio_g = b.gamma / (5.0 * (b.gamma + 1.0));
  double ratio_g0 = b.gamma0 / (2.0 * (b.gamma0 + 1.0));
  add("ratio gamma/(5(gamma+1)) > 1/9",
      "computed " + std::to_string(ratio_g) + " ~ 0.122",
      ratio_g > 1.0 / 9.0 && near(ratio_g, 0.122, 0.001));
  add("ratio gamma0/(2(gamma0+1)) > 1/5",
      "computed " + std::to_string(ratio_g0) + " ~ 0.208",
      ratio_g0 > 1.0 / 5.0 && near(ratio_g0, 0.208, 0.001));

  for (const GroupReport& r : reports) {
    if (r.name.empty() || r.c == 0) continue;
    double c = static_cast<double>(r.c);
    if (r.name[0] == 'G') {
      double lhs = 5.0 * std::log(c) / std::log(9.0) - 2.0 / 3.0;
      add("sandwich " + r.name,
          "5 log9 c - 2/3 = " + std::to_string(lhs) + " < d = " +
              std::to_string(r.d),
          lhs < r.d);
    } else if (r.name[0] == 'H') {
      double lhs = b.gamma0 * log2d(c) + 2.0 / 3.0;
      add("odd-order bound " + r.name,
          "gamma0 log2 c + 2/3 = " + std::to_string(lhs) + " < d = " +
              std::to_string(r.d),
          lhs < r.d);
      if (r.name == "H7")
        add("odd-order minimal-witness H7",
            "log2 c = " + std::to_string(log2d(c)) + " < d = " +
                std::to_string(r.d),
            log2d(c) < r.d);
    }
  }
  return out;
}

} // namespace solvlen
