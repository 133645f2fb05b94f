#include <doctest.h>

#include "solvlen/constructors.hpp"
#include "solvlen/error.hpp"
#include "solvlen/families.hpp"
#include "solvlen/series.hpp"

using namespace solvlen;

TEST_CASE("family closed forms at r = 1") {
  struct Expect {
    Family f;
    uint32_t degree;
    uint64_t c;
    uint32_t d;
  };
  std::vector<Expect> expects = {
      {Family::Gm, 9, 7, 5},    {Family::G2m, 18, 16, 6},
      {Family::G3m, 27, 25, 7}, {Family::G4m, 36, 43, 8},
      {Family::G8m, 72, 52, 9}, {Family::Hm, 7, 2, 2},
      {Family::H3m, 21, 9, 3},  {Family::Wd, 2, 1, 1},
  };
  for (const auto& e : expects) {
    CAPTURE(family_label(e.f));
    FamilyExpectation fe = family_expected(e.f, 1);
    CHECK(fe.degree == e.degree);
    CHECK(fe.c == e.c);
    CHECK(fe.d == e.d);
    PermutationGroup g = family_group(e.f, 1);
    GroupReport rep = make_report(fe.name, g, fe.c, fe.d);
    CHECK(rep.match);
    CHECK(rep.transitive);
    CHECK(rep.order.value() == fe.order);
  }
}

TEST_CASE("family r = 2 spot values") {
  FamilyExpectation g81 = family_expected(Family::Gm, 2);
  CHECK(g81.degree == 81);
  CHECK(g81.c == 70);
  CHECK(g81.d == 10);
  CHECK(g81.order == natural_pow(432, 10));
  FamilyExpectation g162 = family_expected(Family::G2m, 2);
  CHECK(g162.c == 151);
  CHECK(g162.d == 11);
  FamilyExpectation h49 = family_expected(Family::Hm, 2);
  CHECK(h49.c == 16);
  CHECK(h49.d == 4);
  CHECK(h49.order == natural_pow(21, 8));
  FamilyExpectation h343 = family_expected(Family::Hm, 3);
  CHECK(h343.c == 114);
  CHECK(h343.d == 6);
}

TEST_CASE("reports never copy expected values into computed fields") {
  PermutationGroup s4 = symmetric_group(4);
  GroupReport rep = make_report("S4", s4, uint64_t(99), uint32_t(3));
  CHECK(rep.c == 4); // live value, not the planted 99
  CHECK(rep.d == 3);
  CHECK_FALSE(rep.match);
  GroupReport good = make_report("S4", s4, uint64_t(4), uint32_t(3));
  CHECK(good.match);
}

TEST_CASE("family parsing and guards") {
  CHECK(parse_family("G8m") == Family::G8m);
  CHECK(family_label(Family::H3m) == "H3m");
  CHECK_THROWS_AS(parse_family("Zz"), Error);
  CHECK_THROWS_AS(family_group(Family::Gm, 0), Error);
  CHECK_THROWS_AS(family_group(Family::Gm, 5), Error); // degree guard
}

TEST_CASE("K18: index 2, full derived length, members of G18") {
  PermutationGroup k18 = k_subgroup(1);
  PermutationGroup g18 = family_group(Family::G2m, 1);
  CHECK(k18.degree() == 18);
  for (const Perm& g : k18.generators()) CHECK(g18.contains(g));
  CHECK(g18.order() / k18.order() == 2);
  CHECK(g18.order() == k18.order() * 2);
  CHECK(derived_series(k18).derived_length() == 6);
  CHECK(derived_series(g18).derived_length() == 6);
}

TEST_CASE("K162: index 2^9 and derived length 11") {
  KSubgroupInfo info = k_subgroup_info(2);
  CHECK(info.computed_index == 512);
  CHECK(info.recursion_prediction == 512);
  CHECK_FALSE(info.printed_formula_integral); // 2^(81/18) is not an integer
  CHECK(info.d_k == 11);
  CHECK(info.d_g == 11);
  // Subgroup sanity at degree 162.
  PermutationGroup k = k_subgroup(2);
  PermutationGroup g = family_group(Family::G2m, 2);
  for (const Perm& p : k.generators()) CHECK(g.contains(p));
  CHECK_THROWS_AS(k_subgroup(0), Error);
  CHECK_THROWS_AS(k_subgroup(4), Error);
}

TEST_CASE("ceiling identity holds for every member except the first") {
  // The identity ceil(5 log9 c - 2/3) = d holds for all computed members
  // with one genuine exception: c = 7, d = 5 gives ceil(3.7614) = 4.
  CHECK(ceiling_identity_value(7) == 4); // the documented anomaly
  struct Member {
    uint64_t c;
    uint32_t d;
  };
  std::vector<Member> rest = {{16, 6}, {25, 7}, {43, 8},  {52, 9},
                              {70, 10}, {151, 11}, {232, 12}, {394, 13},
                              {475, 14}};
  for (const auto& m : rest) {
    CAPTURE(m.c);
    CHECK(ceiling_identity_value(m.c) == static_cast<int64_t>(m.d));
  }
}

TEST_CASE("parallel report batches agree with serial reports") {
  std::vector<FamilyRequest> reqs = {{Family::Gm, 1},
                                     {Family::G2m, 1},
                                     {Family::Hm, 1},
                                     {Family::Wd, 4}};
  std::vector<GroupReport> batch = family_reports_parallel(reqs);
  REQUIRE(batch.size() == reqs.size());
  for (size_t i = 0; i < reqs.size(); ++i) {
    FamilyExpectation e = family_expected(reqs[i].family, reqs[i].r);
    GroupReport serial =
        make_report(e.name, family_group(reqs[i].family, reqs[i].r), e.c, e.d);
    CHECK(batch[i] == serial);
  }
}
