#include "solvlen/families.hpp"

#include <cmath>
#include <numeric>

#include "solvlen/constructors.hpp"
#include "solvlen/error.hpp"
#include "solvlen/series.hpp"
#include "solvlen/wreath.hpp"

namespace solvlen {

Family parse_family(const std::string& label) {
  if (label == "Gm") return Family::Gm;
  if (label == "G2m") return Family::G2m;
  if (label == "G3m") return Family::G3m;
  if (label == "G4m") return Family::G4m;
  if (label == "G8m") return Family::G8m;
  if (label == "Hm") return Family::Hm;
  if (label == "H3m") return Family::H3m;
  if (label == "Wd") return Family::Wd;
  throw Error("unknown family label '" + label + "'");
}

std::string family_label(Family f) {
  switch (f) {
    case Family::Gm: return "Gm";
    case Family::G2m: return "G2m";
    case Family::G3m: return "G3m";
    case Family::G4m: return "G4m";
    case Family::G8m: return "G8m";
    case Family::Hm: return "Hm";
    case Family::H3m: return "H3m";
    case Family::Wd: return "Wd";
  }
  throw Error("unknown family");
}

namespace {

uint64_t pow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

// Same 10^4 bound the wreath constructions enforce, applied up front so
// closed-form expectations never touch infeasible exponents.
void check_family_degree(Family f, uint32_t r) {
  if (r < 1) throw Error("family: r must be >= 1");
  double degree = 0;
  switch (f) {
    case Family::Gm: degree = std::pow(9.0, r); break;
    case Family::G2m: degree = 2 * std::pow(9.0, r); break;
    case Family::G3m: degree = 3 * std::pow(9.0, r); break;
    case Family::G4m: degree = 4 * std::pow(9.0, r); break;
    case Family::G8m: degree = 8 * std::pow(9.0, r); break;
    case Family::Hm: degree = std::pow(7.0, r); break;
    case Family::H3m: degree = 3 * std::pow(7.0, r); break;
    case Family::Wd: degree = std::pow(2.0, r); break;
  }
  if (degree > 10000)
    throw Error("family " + family_label(f) + " at r = " + std::to_string(r) +
                ": degree exceeds the 10^4 resource guard");
}

PermutationGroup family_base(Family f) {
  switch (f) {
    case Family::G2m: return symmetric_group(2);
    case Family::G3m: return symmetric_group(3);
    case Family::G4m: return symmetric_group(4);
    case Family::G8m: return named_group(NamedGroup::G8);
    case Family::H3m: return named_group(NamedGroup::A3);
    default: throw Error("family has no separate base");
  }
}

} // namespace

PermutationGroup family_group(Family f, uint32_t r) {
  check_family_degree(f, r);
  switch (f) {
    case Family::Gm:
      return iterated_wreath(named_group(NamedGroup::G9), r);
    case Family::Hm:
      return iterated_wreath(named_group(NamedGroup::H7), r);
    case Family::Wd:
      return iterated_wreath(symmetric_group(2), r);
    case Family::G2m:
    case Family::G3m:
    case Family::G4m:
    case Family::G8m:
      return wreath_product(family_base(f), family_group(Family::Gm, r));
    case Family::H3m:
      return wreath_product(family_base(f), family_group(Family::Hm, r));
  }
  throw Error("unknown family");
}

FamilyExpectation family_expected(Family f, uint32_t r) {
  check_family_degree(f, r);
  FamilyExpectation e;
  Natural g9 = 432, h7 = 21;
  switch (f) {
    case Family::Gm: {
      uint64_t m = pow_u64(9, r);
      e = {"G" + std::to_string(m), static_cast<uint32_t>(m), (7 * m - 7) / 8,
           5 * r, natural_pow(g9, (m - 1) / 8)};
      break;
    }
    case Family::G2m:
    case Family::G3m:
    case Family::G4m:
    case Family::G8m: {
      uint64_t m = pow_u64(9, r);
      uint64_t k = f == Family::G2m   ? 15
                   : f == Family::G3m ? 23
                   : f == Family::G4m ? 39
                                      : 47;
      uint64_t base_degree = f == Family::G2m   ? 2
                             : f == Family::G3m ? 3
                             : f == Family::G4m ? 4
                                                : 8;
      Natural base_order = f == Family::G2m   ? 2
                           : f == Family::G3m ? 6
                           : f == Family::G4m ? 24
                                              : 48;
      uint32_t d_base = f == Family::G2m   ? 1
                        : f == Family::G3m ? 2
                        : f == Family::G4m ? 3
                                           : 4;
      e.name = "G" + std::to_string(base_degree * m);
      e.degree = static_cast<uint32_t>(base_degree * m);
      e.c = (k * m - 7) / 8;
      e.d = 5 * r + d_base;
      e.order = natural_pow(base_order, m) * natural_pow(g9, (m - 1) / 8);
      break;
    }
    case Family::Hm: {
      uint64_t m = pow_u64(7, r);
      e = {"H" + std::to_string(m), static_cast<uint32_t>(m), (m - 1) / 3,
           2 * r, natural_pow(h7, (m - 1) / 6)};
      break;
    }
    case Family::H3m: {
      uint64_t m = pow_u64(7, r);
      e = {"H" + std::to_string(3 * m), static_cast<uint32_t>(3 * m),
           (4 * m - 1) / 3, 2 * r + 1,
           natural_pow(Natural(3), m) * natural_pow(h7, (m - 1) / 6)};
      break;
    }
    case Family::Wd: {
      e = {"W" + std::to_string(r), static_cast<uint32_t>(pow_u64(2, r)),
           pow_u64(2, r) - 1, r, natural_pow(Natural(2), pow_u64(2, r) - 1)};
      break;
    }
  }
  return e;
}

GroupReport make_report(const std::string& name, const PermutationGroup& g,
                        std::optional<uint64_t> expected_c,
                        std::optional<uint32_t> expected_d) {
  GroupReport rep;
  rep.name = name;
  rep.degree = g.degree();
  rep.order = factorize(g.order());
  SeriesReport sr = derived_series(g);
  if (!sr.reached_trivial)
    throw Error("report: group is not solvable");
  rep.d = sr.derived_length();
  rep.c = rep.order.exponent_sum();
  rep.transitive = g.is_transitive();
  rep.expected_c = expected_c;
  rep.expected_d = expected_d;
  rep.match = (!expected_c || rep.c == *expected_c) &&
              (!expected_d || rep.d == *expected_d);
  return rep;
}

std::vector<GroupReport>
family_reports_parallel(const std::vector<FamilyRequest>& requests) {
  std::vector<GroupReport> out(requests.size());
  std::vector<std::string> errors(requests.size());
#pragma omp parallel for schedule(dynamic)
  for (ptrdiff_t i = 0; i < static_cast<ptrdiff_t>(requests.size()); ++i) {
    try {
      FamilyExpectation e = family_expected(requests[i].family,
                                            requests[i].r);
      PermutationGroup g = family_group(requests[i].family, requests[i].r);
      out[i] = make_report(e.name, g, e.c, e.d);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (const std::string& e : errors)
    if (!e.empty()) throw Error("family report: " + e);
  return out;
}

PermutationGroup k_subgroup(uint32_t r) {
  if (r < 1 || r > 3)
    throw Error("k subgroup: r must be in 1..3 (degree bound 2*9^r <= 10^4)");
  if (r > 1) return wreath_product(k_subgroup(r - 1),
                                   named_group(NamedGroup::G9));

  // Degree 18 = 9 blocks of size 2. Even-weight base part: t0*tb.
  std::vector<Perm> gens;
  for (uint32_t b = 1; b < 9; ++b) {
    std::vector<uint32_t> img(18);
    std::iota(img.begin(), img.end(), 0u);
    std::swap(img[0], img[1]);
    std::swap(img[2 * b], img[2 * b + 1]);
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  PermutationGroup g9 = named_group(NamedGroup::G9);
  for (const Perm& s : g9.generators()) {
    std::vector<uint32_t> img(18);
    for (uint32_t b = 0; b < 9; ++b)
      for (uint32_t j = 0; j < 2; ++j) img[2 * b + j] = 2 * s[b] + j;
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermutationGroup(18, std::move(gens));
}

KSubgroupInfo k_subgroup_info(uint32_t r) {
  PermutationGroup k = k_subgroup(r);
  PermutationGroup g = family_group(Family::G2m, r);
  KSubgroupInfo info;
  info.r = r;
  info.computed_index = g.order() / k.order();
  uint64_t m = pow_u64(9, r);
  info.recursion_prediction = natural_pow(Natural(2), m / 9);
  info.printed_formula_integral = (m % 18 == 0);
  info.printed_prediction =
      info.printed_formula_integral ? natural_pow(Natural(2), m / 18) : Natural(0);
  SeriesReport sk = derived_series(k);
  SeriesReport sg = derived_series(g);
  if (!sk.reached_trivial || !sg.reached_trivial)
    throw Error("k subgroup: series did not reach the trivial group");
  info.d_k = sk.derived_length();
  info.d_g = sg.derived_length();
  return info;
}

int64_t ceiling_identity_value(uint64_t c) {
  double x = 5.0 * std::log(static_cast<double>(c)) / std::log(9.0) -
             2.0 / 3.0;
  return static_cast<int64_t>(std::ceil(x));
}

} // namespace solvlen
