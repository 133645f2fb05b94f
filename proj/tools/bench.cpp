// Serial vs OpenMP comparison for the three data-parallel kernels: chain
// verification, maximal-subgroup derived-length scans, and the brute-force
// closure used by the test oracles.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oracle.hpp"
#include "solvlen/constructors.hpp"
#include "solvlen/families.hpp"
#include "solvlen/series.hpp"
#include "solvlen/wreath.hpp"

using namespace solvlen;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
  auto t0 = Clock::now();
  f();
  return seconds_since(t0);
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-34s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    PermutationGroup g162 = family_group(Family::G2m, 2);
    const auto& chain = g162.chain();
    bool ok1 = true, ok2 = true;
    double ts = timed([&] { ok1 = chain.verify_serial(); });
    double tp = timed([&] { ok2 = chain.verify_parallel(); });
    row("chain verify (degree 162)", ts, tp);
    if (!ok1 || ok1 != ok2) std::printf("  MISMATCH\n");
  }
  {
    PermutationGroup w5 = family_group(Family::Wd, 5);
    std::vector<PermutationGroup> subs = maximal_index2_subgroups(w5);
    std::vector<uint32_t> serial_lengths, parallel_lengths;
    double ts = timed([&] {
      serial_lengths.clear();
      for (const auto& s : subs)
        serial_lengths.push_back(derived_series(s).derived_length());
    });
    double tp = timed([&] { parallel_lengths = derived_lengths_parallel(subs); });
    row("31 maximal subgroup series", ts, tp);
    if (serial_lengths != parallel_lengths) std::printf("  MISMATCH\n");
  }
  {
    PermutationGroup w4 = family_group(Family::Wd, 4);
    std::vector<Perm> a, b;
    double ts = timed([&] {
      a = oracle::closure_elements(w4.degree(), w4.generators(), 40000);
    });
    double tp = timed([&] {
      b = oracle::closure_elements_parallel(w4.degree(), w4.generators(),
                                            40000);
    });
    row("closure oracle (2^15 elements)", ts, tp);
    if (a.size() != b.size()) std::printf("  MISMATCH\n");
  }
  return 0;
}
