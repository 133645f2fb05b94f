#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "solvlen/constructors.hpp"
#include "solvlen/cycles.hpp"
#include "solvlen/error.hpp"
#include "solvlen/families.hpp"
#include "solvlen/group.hpp"
#include "solvlen/wreath.hpp"

using namespace solvlen;

namespace {

// The order-oracle corpus: every built-in group of order <= 10^4.
struct CorpusEntry {
  const char* name;
  PermutationGroup group;
};

std::vector<CorpusEntry> corpus() {
  MatrixGroupSpec q8;
  q8.p = 3;
  q8.dim = 2;
  q8.generators = {{{0, 2}, {1, 0}}, {{1, 1}, {1, 2}}};
  std::vector<CorpusEntry> out;
  out.push_back({"S2", symmetric_group(2)});
  out.push_back({"S3", symmetric_group(3)});
  out.push_back({"S4", symmetric_group(4)});
  out.push_back({"A3", cyclic_group(3)});
  out.push_back({"C7", cyclic_group(7)});
  out.push_back({"H7", named_group(NamedGroup::H7)});
  out.push_back({"G8", named_group(NamedGroup::G8)});
  out.push_back({"G9", named_group(NamedGroup::G9)});
  out.push_back({"Q8", matrix_to_perm(q8, MatrixAction::linear_nonzero)});
  out.push_back({"W2", family_group(Family::Wd, 2)});
  out.push_back({"W3", family_group(Family::Wd, 3)});
  out.push_back({"U3(F2)", unitriangular(2, 3)});
  out.push_back({"U4(F2)", unitriangular(2, 4)});
  out.push_back({"U5(F2)", unitriangular(2, 5)});
  out.push_back({"U3(F3)", unitriangular(3, 3)});
  out.push_back({"U4(F3)", unitriangular(3, 4)});
  return out;
}

} // namespace

TEST_CASE("chain orders equal brute-force closure counts") {
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    auto elements = oracle::closure_elements(g.degree(), g.generators(),
                                             12000);
    CHECK(g.order() == elements.size());
  }
}

TEST_CASE("textbook orders") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(1).degree() == 1);
  CHECK(cyclic_group(3).order() == 3);
  CHECK(PermutationGroup(5, {}).order() == 1); // trivial group, empty base
  CHECK(PermutationGroup(5, {}).chain().num_levels() == 0);
  CHECK(named_group(NamedGroup::G9).order() == 432);
  CHECK(named_group(NamedGroup::H7).order() == 21);
}

TEST_CASE("membership: every closure element is contained, nothing else") {
  PermutationGroup g9 = named_group(NamedGroup::G9);
  auto elements = oracle::closure_elements(9, g9.generators(), 1000);
  REQUIRE(elements.size() == 432);
  for (const Perm& e : elements) CHECK(g9.contains(e));
  // Elements of S9 outside the closure must be rejected.
  std::mt19937_64 rng(17);
  std::vector<uint32_t> img(9);
  std::iota(img.begin(), img.end(), 0u);
  int outside = 0;
  for (int i = 0; i < 200; ++i) {
    std::shuffle(img.begin(), img.end(), rng);
    Perm candidate(img);
    bool in_closure = false;
    for (const Perm& e : elements)
      if (e == candidate) {
        in_closure = true;
        break;
      }
    if (!in_closure) {
      ++outside;
      CHECK_FALSE(g9.contains(candidate));
    }
  }
  CHECK(outside > 0);
}

TEST_CASE("membership frequency is exactly |G|/n! on small degrees") {
  auto frequency = [](const PermutationGroup& g) {
    size_t members = 0;
    for (const Perm& p : oracle::all_perms(g.degree()))
      members += g.contains(p);
    return members;
  };
  CHECK(frequency(cyclic_group(3)) == 3); // inside S3 = 6
  CHECK(frequency(symmetric_group(4)) == 24);
  CHECK(frequency(cyclic_group(4)) == 4); // inside S4 = 24
  CHECK(frequency(family_group(Family::Wd, 2)) == 8); // D8 inside S4
  CHECK(frequency(cyclic_group(6)) == 6); // inside S6 = 720
  CHECK(frequency(unitriangular(2, 2)) == 2); // inside S4
}

TEST_CASE("membership soundness for random generator words") {
  for (const PermutationGroup& g :
       {named_group(NamedGroup::G9), family_group(Family::Wd, 4),
        family_group(Family::Hm, 2)}) {
    CHECK(g.chain().check_random_words(50, 50, 20250811));
    std::mt19937_64 rng(5);
    Perm w(g.degree());
    for (int i = 0; i < 200; ++i) {
      w = compose(w, g.generators()[rng() % g.generators().size()]);
      CHECK(g.contains(w));
    }
  }
}

TEST_CASE("chain determinism: rebuilds give identical base and order") {
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    StabilizerChain c1 = StabilizerChain::build(g.degree(), g.generators());
    StabilizerChain c2 = StabilizerChain::build(g.degree(), g.generators());
    CHECK(c1.base() == c2.base());
    CHECK(c1.order() == c2.order());
  }
}

TEST_CASE("base points are smallest moved points") {
  StabilizerChain c = StabilizerChain::build(
      4, {parse_cycles("(3,4)", 4), parse_cycles("(1,2)", 4)});
  REQUIRE(c.num_levels() >= 1);
  CHECK(c.base()[0] == 0);
  CHECK(c.order() == 4);
}

TEST_CASE("chain verification pass and incremental extension") {
  PermutationGroup g = family_group(Family::Gm, 1);
  CHECK(g.chain().verify_serial());
  StabilizerChain c = StabilizerChain::build(9, {});
  CHECK(c.order() == 1);
  for (const Perm& gen : g.generators()) c.extend(gen);
  CHECK(c.order() == 432);
  CHECK(c.verify_serial());
  c.extend(g.generators()[0]); // member: no change
  CHECK(c.order() == 432);
}

TEST_CASE("orbits") {
  CHECK(symmetric_group(5).orbit(0).size() == 5);
  PermutationGroup swap2(4, {parse_cycles("(1,2)", 4)});
  CHECK(swap2.orbit(2) == std::vector<uint32_t>{2});
  CHECK(swap2.orbit(0) == std::vector<uint32_t>{0, 1});
  CHECK_FALSE(swap2.is_transitive());
  CHECK(family_group(Family::Gm, 2).is_transitive()); // degree 81 tower
  CHECK_THROWS_AS(swap2.orbit(17), Error);
}

TEST_CASE("degree mismatches are rejected") {
  PermutationGroup g = symmetric_group(4);
  CHECK_THROWS_AS(g.contains(Perm(5)), Error);
  CHECK_THROWS_AS(PermutationGroup(3, {Perm(4)}), Error);
}
