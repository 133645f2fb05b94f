#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvlen/factor.hpp"
#include "solvlen/group.hpp"

namespace solvlen {

/// The verified group families. G towers are built over the degree-9
/// affine group, H towers over the order-21 Frobenius group, Wd is the
/// iterated degree-2 tower.
enum class Family { Gm, G2m, G3m, G4m, G8m, Hm, H3m, Wd };

Family parse_family(const std::string& label);
std::string family_label(Family f);

/// The family member at tower height r (for Wd, r is d).
PermutationGroup family_group(Family f, uint32_t r);

/// Closed-form expectations for the member, used to cross-check the live
/// computation (never the other way around).
struct FamilyExpectation {
  std::string name; // e.g. "G18"
  uint32_t degree;
  uint64_t c;
  uint32_t d;
  Natural order;
};
FamilyExpectation family_expected(Family f, uint32_t r);

/// One row of a verification table; every computed field comes from live
/// computation (chain order, factorization, derived series, orbits).
struct GroupReport {
  std::string name;
  uint32_t degree = 0;
  Factorization order;
  uint64_t c = 0;
  uint32_t d = 0;
  bool transitive = false;
  std::optional<uint64_t> expected_c;
  std::optional<uint32_t> expected_d;
  bool match = false;

  friend bool operator==(const GroupReport&, const GroupReport&) = default;
};

GroupReport make_report(const std::string& name, const PermutationGroup& g,
                        std::optional<uint64_t> expected_c,
                        std::optional<uint32_t> expected_d);

/// Reports for several members, data-parallel across the members.
struct FamilyRequest {
  Family family;
  uint32_t r;
};
std::vector<GroupReport>
family_reports_parallel(const std::vector<FamilyRequest>& requests);

/// Index-2-per-tower subgroups K of the G2m tower: K18 is generated by the
/// even-weight products t0*tb of block transpositions together with the
/// top copy of the degree-9 group; K at height r+1 is K wr G9. Guarded to
/// r <= 3 by the degree bound.
PermutationGroup k_subgroup(uint32_t r);

struct KSubgroupInfo {
  uint32_t r;
  Natural computed_index; // |G_{2m} : K_{2m}| from the two chain orders
  Natural recursion_prediction; // 2^(m/9), m = 9^r
  bool printed_formula_integral; // whether 2^(m/18) is an integer at this m
  Natural printed_prediction; // meaningful only when integral
  uint32_t d_k; // derived length of K
  uint32_t d_g; // derived length of G_{2m}
};
KSubgroupInfo k_subgroup_info(uint32_t r);

/// ceil(5 log9 c - 2/3), the ceiling-identity side of the G-tower check.
int64_t ceiling_identity_value(uint64_t c);

} // namespace solvlen
