#include <doctest.h>

#include <thread>

#include "oracle.hpp"
#include "solvlen/constructors.hpp"
#include "solvlen/families.hpp"
#include "solvlen/series.hpp"

using namespace solvlen;

// The OpenMP kernels must reproduce the serial reference results exactly.

TEST_CASE("parallel chain verification equals serial") {
  for (const PermutationGroup& g :
       {family_group(Family::Gm, 2), family_group(Family::Wd, 5),
        unitriangular(2, 7)}) {
    const StabilizerChain& c = g.chain();
    CHECK(c.verify_serial());
    CHECK(c.verify_parallel());
  }
}

TEST_CASE("parallel closure equals serial closure") {
  for (const PermutationGroup& g :
       {named_group(NamedGroup::G9), family_group(Family::Wd, 4),
        named_group(NamedGroup::H7)}) {
    auto serial =
        oracle::closure_elements(g.degree(), g.generators(), 40000);
    auto parallel =
        oracle::closure_elements_parallel(g.degree(), g.generators(), 40000);
    REQUIRE(serial.size() == parallel.size());
    CHECK(serial == parallel);
  }
}

TEST_CASE("parallel subgroup scans equal per-subgroup serial runs") {
  auto subs = maximal_index2_subgroups(family_group(Family::Wd, 5));
  REQUIRE(subs.size() == 31);
  std::vector<uint32_t> serial;
  for (const auto& s : subs)
    serial.push_back(derived_series(s).derived_length());
  CHECK(derived_lengths_parallel(subs) == serial);
}

TEST_CASE("the chain cache fills once under concurrent readers") {
  PermutationGroup g = family_group(Family::Gm, 1);
  std::vector<Natural> orders(8);
  std::vector<std::thread> workers;
  for (size_t t = 0; t < orders.size(); ++t)
    workers.emplace_back([&, t] { orders[t] = g.order(); });
  for (auto& w : workers) w.join();
  for (const Natural& o : orders) CHECK(o == 432);
  // Copies share the cache; the chain object is the same instance.
  PermutationGroup copy = g;
  CHECK(&copy.chain() == &g.chain());
}
