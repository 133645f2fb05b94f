// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Degree-243..648 members and H343 are opt-in: pass --opt-in or set
// SOLVLEN_OPT_IN=1.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "solvlen/analytics.hpp"
#include "solvlen/constructors.hpp"
#include "solvlen/families.hpp"
#include "solvlen/series.hpp"
#include "solvlen/wreath.hpp"

using namespace solvlen;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  std::string detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) {
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

template <typename F>
void criterion(int number, const std::string& title, double budget_seconds,
               F&& body) {
  Criterion c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_seconds > 0 && elapsed > budget_seconds)
    c.expect(false, "runtime " + std::to_string(elapsed) + "s over budget " +
                        std::to_string(budget_seconds) + "s");
  std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL",
              number, title.c_str(), elapsed,
              c.detail.empty() ? "" : " -- ", c.detail.c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

GroupReport family_report(Family f, uint32_t r) {
  FamilyExpectation e = family_expected(f, r);
  return make_report(e.name, family_group(f, r), e.c, e.d);
}

} // namespace

int main(int argc, char** argv) {
  bool opt_in = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--opt-in") == 0) opt_in = true;
  if (const char* env = std::getenv("SOLVLEN_OPT_IN"))
    if (env[0] == '1') opt_in = true;

  std::vector<GroupReport> g_members; // for the ceiling criterion

  criterion(1, "degree 9..72 tower table recomputed from scratch", 60.0,
            [&](Criterion& c) {
              struct Want {
                Family f;
                uint64_t cc;
                uint32_t d;
              };
              const Want wants[] = {{Family::Gm, 7, 5},
                                    {Family::G2m, 16, 6},
                                    {Family::G3m, 25, 7},
                                    {Family::G4m, 43, 8},
                                    {Family::G8m, 52, 9}};
              for (const Want& w : wants) {
                GroupReport rep = family_report(w.f, 1);
                g_members.push_back(rep);
                c.expect(rep.c == w.cc && rep.d == w.d,
                         rep.name + " got c=" + std::to_string(rep.c) +
                             ", d=" + std::to_string(rep.d));
              }
              c.expect(g_members[0].order ==
                           Factorization{{{2, 4}, {3, 3}}},
                       "|G9| != 2^4*3^3");
            });

  criterion(2,
            opt_in ? "degree 81/162 members, plus opt-in 243/324/648"
                   : "degree 81/162 members (243/324/648 need --opt-in)",
            opt_in ? 900.0 : 300.0, [&](Criterion& c) {
              GroupReport g81 = family_report(Family::Gm, 2);
              g_members.push_back(g81);
              c.expect(g81.order.value() == natural_pow(432, 10),
                       "|G81| != 432^10");
              c.expect(g81.d == 10 && g81.c == 70, "G81 c/d mismatch");
              GroupReport g162 = family_report(Family::G2m, 2);
              g_members.push_back(g162);
              c.expect(g162.d == 11 && g162.c == 151, "G162 c/d mismatch");
              if (opt_in) {
                const std::pair<Family, std::pair<uint64_t, uint32_t>>
                    extras[] = {{Family::G3m, {232, 12}},
                                {Family::G4m, {394, 13}},
                                {Family::G8m, {475, 14}}};
                for (const auto& [f, want] : extras) {
                  GroupReport rep = family_report(f, 2);
                  g_members.push_back(rep);
                  c.expect(rep.c == want.first && rep.d == want.second,
                           rep.name + " c/d mismatch");
                }
              } else {
                c.note("opt-in members skipped");
              }
            });

  criterion(3, "odd-order towers H7/H21/H49 (H343 opt-in)", 0, [&](Criterion& c) {
    GroupReport h7 = family_report(Family::Hm, 1);
    c.expect(h7.order.value() == 21 && h7.d == 2 && h7.c == 2,
             "H7 mismatch");
    GroupReport h21 = family_report(Family::H3m, 1);
    c.expect(h21.d == 3 && h21.c == 9, "H21 mismatch");
    GroupReport h49 = family_report(Family::Hm, 2);
    c.expect(h49.order.value() == natural_pow(21, 8) && h49.d == 4 &&
                 h49.c == 16,
             "H49 mismatch");
    if (opt_in) {
      GroupReport h343 = family_report(Family::Hm, 3);
      c.expect(h343.d == 6 && h343.c == 114, "H343 mismatch");
    } else {
      c.note("H343 skipped");
    }
  });

  criterion(4, "ceiling identity over every computed tower member", 0,
            [&](Criterion& c) {
              for (const GroupReport& rep : g_members) {
                int64_t got = ceiling_identity_value(rep.c);
                c.expect(got == static_cast<int64_t>(rep.d),
                         rep.name + ": ceil(5log9(" + std::to_string(rep.c) +
                             ")-2/3) = " + std::to_string(got) + " != d = " +
                             std::to_string(rep.d));
              }
            });

  criterion(5, "every maximal subgroup of W_d has smaller derived length", 0,
            [&](Criterion& c) {
              auto t0 = Clock::now();
              double elapsed_d4 = 0;
              for (uint32_t d = 1; d <= 5; ++d) {
                PermutationGroup w = family_group(Family::Wd, d);
                auto subs = maximal_index2_subgroups(w);
                c.expect(subs.size() == (size_t(1) << d) - 1,
                         "W" + std::to_string(d) + " count");
                for (uint32_t len : derived_lengths_parallel(subs))
                  c.expect(len <= d - 1,
                           "W" + std::to_string(d) + " length " +
                               std::to_string(len));
                double elapsed =
                    std::chrono::duration<double>(Clock::now() - t0).count();
                if (d == 4) {
                  elapsed_d4 = elapsed;
                  c.expect(elapsed < 30.0, "d<=4 exceeded 30s");
                }
                if (d == 5)
                  c.expect(elapsed - elapsed_d4 < 120.0, "d=5 exceeded 2min");
              }
            });

  criterion(6, "Hall containments and quotient bounds on W_d and U_n(F2)", 0,
            [&](Criterion& c) {
              std::vector<std::pair<std::string, PermutationGroup>> cases;
              for (uint32_t d = 1; d <= 5; ++d)
                cases.push_back({"W" + std::to_string(d),
                                 family_group(Family::Wd, d)});
              for (uint32_t n = 2; n <= 9; ++n)
                cases.push_back({"U" + std::to_string(n),
                                 unitriangular(2, n)});
              for (const auto& [name, g] : cases) {
                SeriesReport ds = derived_series(g);
                c.expect(ds.reached_trivial, name + " not solvable?");
                uint32_t klass = 1;
                while ((size_t(1) << klass) <
                       (size_t(1) << (ds.terms.size() - 1)))
                  ++klass;
                SeriesReport lcs = lower_central_series(
                    g, (uint32_t(1) << (ds.terms.size() >= 2
                                            ? ds.terms.size() - 2
                                            : 0)) + 2);
                for (size_t i = 0; i + 1 < ds.terms.size(); ++i) {
                  size_t gi = (size_t(1) << i) - 1;
                  if (gi >= lcs.terms.size() && !lcs.reached_trivial) {
                    c.expect(false, name + " lcs truncated");
                    break;
                  }
                  const PermutationGroup& gamma =
                      gi < lcs.terms.size() ? lcs.terms[gi]
                                            : lcs.terms.back();
                  for (const Perm& x : ds.terms[i].generators())
                    c.expect(gamma.contains(x),
                             name + " containment fails at i=" +
                                 std::to_string(i));
                  if (!ds.terms[i + 1].is_trivial())
                    c.expect(quotient_clength(ds, i) >=
                                 (uint64_t(1) << i) + 1,
                             name + " quotient bound at i=" +
                                 std::to_string(i));
                }
              }
            });

  criterion(7, "unitriangular orders and derived lengths", 180.0,
            [&](Criterion& c) {
              for (uint32_t p : {2u, 3u}) {
                uint32_t n_max = p == 2 ? 9 : 6;
                for (uint32_t n = 2; n <= n_max; ++n) {
                  PermutationGroup u = unitriangular(p, n);
                  c.expect(u.order() == natural_pow(p, n * (n - 1) / 2),
                           "order U" + std::to_string(n) + " over F" +
                               std::to_string(p));
                  uint32_t want_d = static_cast<uint32_t>(
                                        std::floor(std::log2(n - 1))) + 1;
                  c.expect(derived_series(u).derived_length() == want_d,
                           "d of U" + std::to_string(n) + " over F" +
                               std::to_string(p));
                }
              }
            });

  criterion(8, "index-2 tower subgroups keep the full derived length", 0,
            [&](Criterion& c) {
              KSubgroupInfo k1 = k_subgroup_info(1);
              c.expect(k1.computed_index == 2, "K18 index");
              c.expect(k1.d_k == 6 && k1.d_g == 6, "K18 derived length");
              KSubgroupInfo k2 = k_subgroup_info(2);
              c.expect(k2.computed_index == 512, "K162 index");
              c.expect(k2.d_k == 11 && k2.d_g == 11, "K162 derived length");
              // The printed index formula is a flagged discrepancy, not a
              // failure: non-integral under the m = 9^r reading.
              c.note(std::string("printed 2^(m/18) formula flagged: ") +
                     (k1.printed_formula_integral ? "integral" :
                                                  "non-integral at m=9"));
            });

  criterion(9, "constants, x_n column, chains, optimum", 0, [&](Criterion& c) {
    BoundConstants b = delta_constants();
    auto near = [](double v, double t, double tol) {
      return std::fabs(v - t) <= tol;
    };
    c.expect(near(b.gamma, 1.5773, 0.001), "gamma");
    c.expect(near(b.gamma0, 0.7124, 0.001), "gamma0");
    c.expect(near(b.delta, 2.78, 0.01) && b.delta < 3, "delta");
    c.expect(near(b.delta0, 1.67, 0.05) && b.delta0 < 2, "delta0");
    const std::pair<uint32_t, double> xs[] = {
        {7, -0.97}, {15, 0.8}, {23, 1.7}, {39, 2.9}, {47, 3.4}};
    for (auto [k, v] : xs)
      c.expect(near(x_n(k), v, 0.05), "x_n at k=" + std::to_string(k));
    c.expect(near(std::pow(9.0, 1.0 / 9.0), 1.27, 0.01), "9^(1/9)");
    c.expect(near(std::pow(9.0, 1.0 / 5.0), 1.55, 0.01), "9^(1/5)");
    c.expect(near(std::pow(7.0, 1.0 / 5.0), 1.47, 0.01), "7^(1/5)");
    double v95 = std::pow(9.0, 0.2), v43 = std::pow(4.0, 1.0 / 3.0);
    c.expect(v95 < v43 && v43 < std::sqrt(3.0) && std::sqrt(3.0) < 2.0,
             "comparison chain");
    for (double cc : {10.0, 100.0, 1000.0}) {
      OptimumResult o = upper_bound_optimum(cc);
      c.expect(std::fabs(o.grid_argmax - o.r_star) / o.r_star <= 1e-6 &&
                   o.certified,
               "optimum at c=" + std::to_string((int)cc));
    }
  });

  criterion(10, "derived quotient sequence and prefix lengths", 0,
            [&](Criterion& c) {
              auto seq = derived_quotient_orders(14);
              const std::pair<uint32_t, uint64_t> first12[] = {
                  {2, 1}, {3, 1}, {2, 2}, {2, 1}, {3, 2}, {3, 1},
                  {2, 6}, {2, 1}, {3, 8}, {3, 1}, {2, 162}, {2, 1}};
              for (size_t i = 0; i < 12; ++i)
                c.expect(seq[i].prime == first12[i].first &&
                             seq[i].exponent == first12[i].second,
                         "sequence term " + std::to_string(i + 1));
              const uint64_t prefix[] = {1, 2, 4, 5, 7, 8, 14, 15};
              for (uint32_t d = 1; d <= 8; ++d) {
                c.expect(cs_prefix(d) == prefix[d - 1],
                         "prefix at d=" + std::to_string(d));
                uint64_t ref = ReferenceTables::c_S[d - 1];
                c.expect(d == 7 ? cs_prefix(d) == ref + 1
                                : cs_prefix(d) == ref,
                         "reference match at d=" + std::to_string(d));
              }
              c.expect(seq[12].printed_mismatch &&
                           seq[12].exponent == natural_pow(2, 81) &&
                           seq[12].printed_exponent ==
                               2 * natural_pow(3, 81),
                       "term 13 flag");
              c.note("term 13 flagged: recursion 3^(2^81) vs printed "
                     "3^(2*3^81)");
            });

  criterion(11, "brute-force oracle reproduces chain orders and series", 0,
            [&](Criterion& c) {
              // order <= 2000 corpus; the larger tower members are covered
              // by the closed-form criteria above.
              MatrixGroupSpec q8;
              q8.p = 3;
              q8.dim = 2;
              q8.generators = {{{0, 2}, {1, 0}}, {{1, 1}, {1, 2}}};
              std::vector<std::pair<std::string, PermutationGroup>> corpus = {
                  {"S4", symmetric_group(4)},
                  {"W2", family_group(Family::Wd, 2)},
                  {"Q8", matrix_to_perm(q8, MatrixAction::linear_nonzero)},
                  {"GL(2,3)", named_group(NamedGroup::G8)},
                  {"G9", named_group(NamedGroup::G9)},
                  {"W3", family_group(Family::Wd, 3)},
                  {"H7", named_group(NamedGroup::H7)},
                  {"A3", named_group(NamedGroup::A3)},
                  {"C7", cyclic_group(7)},
                  {"U4(F3)", unitriangular(3, 4)},
                  {"U5(F2)", unitriangular(2, 5)},
              };
              for (const auto& [name, g] : corpus) {
                auto elements = oracle::closure_elements(g.degree(),
                                                         g.generators(), 2000);
                c.expect(g.order() == elements.size(),
                         name + " order vs closure");
                auto brute = oracle::derived_series_orders(g.degree(),
                                                           elements, 2000);
                SeriesReport sr = derived_series(g);
                c.expect(sr.orders.size() == brute.size(),
                         name + " series length");
                for (size_t i = 0;
                     i < sr.orders.size() && i < brute.size(); ++i)
                  c.expect(sr.orders[i].value() == brute[i],
                           name + " series term " + std::to_string(i));
              }
            });

  std::printf("%s: %d criterion failure(s)\n",
              failures == 0 ? "ALL PASS" : "RESULT", failures);
  return failures == 0 ? 0 : 1;
}
