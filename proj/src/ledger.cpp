#include "solvlen/ledger.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include <nlohmann/json.hpp>

#include "solvlen/analytics.hpp"
#include "solvlen/constructors.hpp"
#include "solvlen/error.hpp"
#include "solvlen/series.hpp"
#include "solvlen/wreath.hpp"

namespace solvlen {

using nlohmann::json;

Suite parse_suite(const std::string& s) {
  if (s == "all") return Suite::all;
  if (s == "families") return Suite::families;
  if (s == "lemma") return Suite::lemma;
  if (s == "hall") return Suite::hall;
  if (s == "analytics") return Suite::analytics;
  if (s == "sequence") return Suite::sequence;
  throw Error("unknown suite '" + s + "'");
}

size_t VerificationLedger::count(LedgerEntry::Status s) const {
  size_t n = 0;
  for (const auto& e : entries) n += e.status == s;
  return n;
}

int VerificationLedger::exit_code() const {
  if (count(LedgerEntry::Status::fail)) return 1;
  if (count(LedgerEntry::Status::skipped)) return 3;
  return 0;
}

namespace {

const char* status_name(LedgerEntry::Status s) {
  switch (s) {
    case LedgerEntry::Status::pass: return "pass";
    case LedgerEntry::Status::fail: return "FAIL";
    case LedgerEntry::Status::flagged: return "flagged";
    case LedgerEntry::Status::skipped: return "skipped";
  }
  return "?";
}

// Shared scheduling: each check is a named closure; once the budget is
// exhausted the remaining checks are recorded as skipped.
struct Runner {
  VerificationLedger& ledger;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double budget_seconds;

  bool over_budget() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
               .count() > budget_seconds;
  }

  void run(const std::string& id, const std::string& claim,
           const std::function<void(std::vector<LedgerEntry>&)>& body) {
    if (over_budget()) {
      ledger.entries.push_back({id, claim, "", "",
                                LedgerEntry::Status::skipped});
      return;
    }
    std::vector<LedgerEntry> batch;
    try {
      body(batch);
    } catch (const std::exception& ex) {
      batch.push_back({id, claim, std::string("error: ") + ex.what(), "",
                       LedgerEntry::Status::fail});
    }
    for (auto& e : batch) ledger.entries.push_back(std::move(e));
  }
};

LedgerEntry check(const std::string& id, const std::string& claim,
                  const std::string& computed, const std::string& expected,
                  bool pass) {
  return {id, claim, computed, expected,
          pass ? LedgerEntry::Status::pass : LedgerEntry::Status::fail};
}

void suite_families(Runner& r, bool opt_in) {
  struct Member {
    Family f;
    uint32_t rr;
    bool optional;
  };
  std::vector<Member> members = {
      {Family::Gm, 1, false},  {Family::G2m, 1, false},
      {Family::G3m, 1, false}, {Family::G4m, 1, false},
      {Family::G8m, 1, false}, {Family::Gm, 2, false},
      {Family::G2m, 2, false}, {Family::G3m, 2, true},
      {Family::G4m, 2, true},  {Family::G8m, 2, true},
      {Family::Hm, 1, false},  {Family::H3m, 1, false},
      {Family::Hm, 2, false},  {Family::H3m, 2, false},
      {Family::Hm, 3, true},   {Family::Wd, 1, false},
      {Family::Wd, 2, false},  {Family::Wd, 3, false},
      {Family::Wd, 4, false},  {Family::Wd, 5, false},
  };
  for (const Member& m : members) {
    if (m.optional && !opt_in) continue; // degree-243..648 and H343 members
    FamilyExpectation e = family_expected(m.f, m.rr);
    r.run("family " + e.name,
          "c,d,order,degree of " + e.name + " match their closed forms",
          [&, e](std::vector<LedgerEntry>& out) {
            PermutationGroup g = family_group(m.f, m.rr);
            GroupReport rep = make_report(e.name, g, e.c, e.d);
            out.push_back(check(
                "family " + e.name + " c,d",
                "closed forms give c = " + std::to_string(e.c) + ", d = " +
                    std::to_string(e.d),
                "c = " + std::to_string(rep.c) + ", d = " +
                    std::to_string(rep.d),
                "c = " + std::to_string(e.c) + ", d = " + std::to_string(e.d),
                rep.match));
            out.push_back(check("family " + e.name + " order",
                                "chain order equals the closed-form order",
                                rep.order.str(),
                                factorize(e.order).str(),
                                rep.order.value() == e.order));
            out.push_back(check("family " + e.name + " transitive",
                                "tower members are transitive",
                                rep.transitive ? "true" : "false", "true",
                                rep.transitive));
            if (family_label(m.f)[0] == 'G') {
              int64_t got = ceiling_identity_value(rep.c);
              out.push_back(check(
                  "ceiling " + e.name,
                  "ceil(5 log9 c - 2/3) = d",
                  std::to_string(got), std::to_string(rep.d),
                  got == static_cast<int64_t>(rep.d)));
            }
          });
  }

  // K subgroups of the degree-2m towers.
  for (uint32_t rr = 1; rr <= 2; ++rr) {
    r.run("k-subgroup r=" + std::to_string(rr),
          "index and derived length of the even-weight subgroup",
          [rr](std::vector<LedgerEntry>& out) {
            KSubgroupInfo info = k_subgroup_info(rr);
            Natural expect_index = rr == 1 ? Natural(2) : Natural(512);
            out.push_back(check(
                "k-subgroup index r=" + std::to_string(rr),
                "recursion gives index 2^(m/9)",
                info.computed_index.str(), expect_index.str(),
                info.computed_index == expect_index &&
                    info.computed_index == info.recursion_prediction));
            out.push_back(check(
                "k-subgroup d r=" + std::to_string(rr),
                "d(K) = d(G_2m)", std::to_string(info.d_k),
                std::to_string(info.d_g), info.d_k == info.d_g));
            // The printed index formula 2^(m/18) disagrees with the
            // recursion when m = 9^r (non-integral); it matches only if
            // its m is read as the full degree 2*9^r. Documented
            // discrepancy, reported with both readings.
            std::string both_readings =
                info.printed_formula_integral
                    ? info.printed_prediction.str()
                    : "2^(m/18) non-integral for m = 9^r; with m = degree "
                      "2*9^r it equals the recursion value " +
                          info.recursion_prediction.str();
            out.push_back(
                {"k-subgroup printed index formula r=" + std::to_string(rr),
                 "printed formula 2^(m/18) vs computed index",
                 info.computed_index.str(), both_readings,
                 info.printed_formula_integral &&
                         info.printed_prediction == info.computed_index
                     ? LedgerEntry::Status::pass
                     : LedgerEntry::Status::flagged});
          });
  }

  // Wreath laws on the pairs the towers use.
  r.run("wreath laws", "order law and derived-length additivity",
        [](std::vector<LedgerEntry>& out) {
          PermutationGroup g9 = named_group(NamedGroup::G9);
          PermutationGroup s2 = symmetric_group(2);
          PermutationGroup h7 = named_group(NamedGroup::H7);
          struct Pair {
            const char* name;
            PermutationGroup base, top;
          };
          std::vector<Pair> pairs = {{"S2 wr S2", s2, s2},
                                     {"S2 wr G9", s2, g9},
                                     {"H7 wr H7", h7, h7},
                                     {"G9 wr G9", g9, g9}};
          for (const Pair& p : pairs) {
            PermutationGroup w = wreath_product(p.base, p.top);
            Natural expect = natural_pow(p.base.order(), p.top.degree()) *
                             p.top.order();
            out.push_back(check(std::string("wreath order ") + p.name,
                                "|base wr top| = |base|^(deg top) * |top|",
                                w.order().str(), expect.str(),
                                w.order() == expect));
            uint32_t dw = derived_series(w).derived_length();
            uint32_t sum = derived_series(p.base).derived_length() +
                           derived_series(p.top).derived_length();
            out.push_back(check(std::string("wreath additivity ") + p.name,
                                "d(base wr top) = d(base) + d(top)",
                                std::to_string(dw), std::to_string(sum),
                                dw == sum));
          }
        });
}

void suite_lemma(Runner& r) {
  for (uint32_t d = 1; d <= 5; ++d) {
    r.run("lemma W" + std::to_string(d),
          "every maximal subgroup of the S2 tower has smaller derived length",
          [d](std::vector<LedgerEntry>& out) {
            PermutationGroup w = family_group(Family::Wd, d);
            std::vector<PermutationGroup> subs = maximal_index2_subgroups(w);
            uint64_t expect_count = (uint64_t(1) << d) - 1;
            out.push_back(check(
                "lemma W" + std::to_string(d) + " count",
                "2^d - 1 maximal subgroups", std::to_string(subs.size()),
                std::to_string(expect_count), subs.size() == expect_count));
            std::vector<uint32_t> lengths = derived_lengths_parallel(subs);
            uint32_t max_len = 0;
            for (uint32_t len : lengths) max_len = std::max(max_len, len);
            out.push_back(check(
                "lemma W" + std::to_string(d) + " lengths",
                "derived length <= d - 1 for all maximal subgroups",
                "max " + std::to_string(max_len),
                "<= " + std::to_string(d - 1), max_len <= d - 1));
          });
  }
}

void suite_hall(Runner& r) {
  struct Case {
    std::string name;
    PermutationGroup g;
  };
  std::vector<Case> cases;
  for (uint32_t d = 2; d <= 5; ++d)
    cases.push_back({"W" + std::to_string(d), family_group(Family::Wd, d)});
  for (uint32_t n = 3; n <= 9; ++n)
    cases.push_back({"U" + std::to_string(n) + "(F2)", unitriangular(2, n)});

  for (const Case& c : cases) {
    r.run("hall " + c.name,
          "derived terms sit inside the 2^i-th lower central terms and "
          "p-group quotients have composition length >= 2^i + 1",
          [&c](std::vector<LedgerEntry>& out) {
            SeriesReport ds = derived_series(c.g);
            uint32_t needed = 1;
            for (size_t i = 1; i + 1 < ds.terms.size(); ++i) needed *= 2;
            SeriesReport lcs = lower_central_series(c.g, needed + 2);
            bool contained = true;
            for (size_t i = 0; i + 1 < ds.terms.size() && contained; ++i) {
              size_t gamma_index = (size_t(1) << i); // gamma_{2^i}, 1-based
              if (gamma_index - 1 >= lcs.terms.size() &&
                  !lcs.reached_trivial) {
                contained = false; // series truncated; cannot certify
                break;
              }
              const PermutationGroup& gamma =
                  gamma_index - 1 < lcs.terms.size()
                      ? lcs.terms[gamma_index - 1]
                      : lcs.terms.back();
              for (const Perm& x : ds.terms[i].generators())
                if (!gamma.contains(x)) {
                  contained = false;
                  break;
                }
            }
            out.push_back(check("hall containment " + c.name,
                                "G^(i) <= gamma_{2^i}(G)",
                                contained ? "holds" : "violated", "holds",
                                contained));
            bool quotients_ok = true;
            std::string detail;
            for (size_t i = 0; i + 1 < ds.terms.size(); ++i) {
              if (ds.terms[i + 1].is_trivial()) break;
              uint64_t q = quotient_clength(ds, i);
              uint64_t bound = (uint64_t(1) << i) + 1;
              if (!detail.empty()) detail += ", ";
              detail += "i=" + std::to_string(i) + ": " + std::to_string(q);
              if (q < bound) quotients_ok = false;
            }
            out.push_back(check("hall quotients " + c.name,
                                "c(G^(i)/G^(i+1)) >= 2^i + 1 while "
                                "G^(i+1) != 1",
                                detail.empty() ? "no applicable i" : detail,
                                "each >= 2^i + 1", quotients_ok));
          });
  }
}

void suite_analytics(Runner& r) {
  r.run("constants", "gamma, gamma0, delta, delta0 from their formulas",
        [](std::vector<LedgerEntry>& out) {
          BoundConstants b = delta_constants();
          auto near = [](double v, double t, double tol) {
            return std::fabs(v - t) <= tol;
          };
          out.push_back(check("gamma", "5 log9 2 ~ 1.5773",
                              std::to_string(b.gamma), "1.5773 +- 0.001",
                              near(b.gamma, 1.5773, 1e-3)));
          out.push_back(check("gamma0", "2 log7 2 ~ 0.7124",
                              std::to_string(b.gamma0), "0.7124 +- 0.001",
                              near(b.gamma0, 0.7124, 1e-3)));
          out.push_back(check("delta", "~ 2.78 and < 3",
                              std::to_string(b.delta), "2.78 +- 0.01, < 3",
                              near(b.delta, 2.78, 0.01) && b.delta < 3));
          out.push_back(check("delta0", "~ 1.67 and < 2",
                              std::to_string(b.delta0), "1.67 +- 0.05, < 2",
                              near(b.delta0, 1.67, 0.05) && b.delta0 < 2));
        });
  r.run("x_n column", "x_n = 5 log9(k/8) - 2/3 for k = 7,15,23,39,47",
        [](std::vector<LedgerEntry>& out) {
          const std::pair<uint32_t, double> expect[] = {
              {7, -0.97}, {15, 0.8}, {23, 1.7}, {39, 2.9}, {47, 3.4}};
          for (auto [k, v] : expect)
            out.push_back(check("x_n k=" + std::to_string(k),
                                "x_n matches its two-decimal print",
                                std::to_string(x_n(k)),
                                std::to_string(v) + " +- 0.05",
                                std::fabs(x_n(k) - v) <= 0.05));
        });
  r.run("optimum", "grid search confirms r* = gamma c/(gamma+1)",
        [](std::vector<LedgerEntry>& out) {
          for (double c : {10.0, 100.0, 1000.0}) {
            OptimumResult o = upper_bound_optimum(c);
            bool close =
                std::fabs(o.grid_argmax - o.r_star) / o.r_star <= 1e-6;
            out.push_back(check(
                "optimum c=" + std::to_string((int)c),
                "sampled argmax within 1e-6 relative of r*",
                std::to_string(o.grid_argmax), std::to_string(o.r_star),
                close && o.certified));
          }
          bool sweep = true;
          BoundConstants b = delta_constants();
          for (uint64_t c = 2; c <= 1000000; ++c) {
            double rs = b.gamma * double(c) / (b.gamma + 1.0);
            double value = b.gamma * std::log2(rs / 8.0) +
                           std::log2(double(c) - rs) + 10.0;
            double fc = (b.gamma + 1.0) * std::log2(double(c)) + 3.0;
            if (!(value < fc)) {
              sweep = false;
              break;
            }
          }
          out.push_back(check("upper bound sweep",
                              "f(r*) < (gamma+1) log2 c + 3 for c up to 10^6",
                              sweep ? "holds" : "violated", "holds", sweep));
        });
  r.run("inequality chains", "constant chains and per-family sandwiches",
        [](std::vector<LedgerEntry>& out) {
          std::vector<FamilyRequest> reqs = {
              {Family::Gm, 1},  {Family::G2m, 1}, {Family::G3m, 1},
              {Family::G4m, 1}, {Family::G8m, 1}, {Family::Hm, 1},
              {Family::H3m, 1}, {Family::Hm, 2}};
          std::vector<GroupReport> reports = family_reports_parallel(reqs);
          for (const InequalityCheck& c : inequality_suite(reports))
            out.push_back(check(c.id, c.id, c.detail, "holds", c.pass));
        });
}

void suite_sequence(Runner& r) {
  r.run("ab recursion", "a_n = 3^(b_{n-1}), b_n = 2^(a_n - 1)",
        [](std::vector<LedgerEntry>& out) {
          const std::pair<Natural, Natural> expect[] = {
              {0, 0}, {1, 1}, {3, 4}, {81, natural_pow(Natural(2), 80)}};
          for (uint32_t n = 0; n <= 3; ++n) {
            auto [a, b] = ab_sequence(n);
            out.push_back(check(
                "ab n=" + std::to_string(n), "exact (a_n, b_n)",
                "(" + a.str() + ", " + b.str() + ")",
                "(" + expect[n].first.str() + ", " + expect[n].second.str() +
                    ")",
                a == expect[n].first && b == expect[n].second));
          }
        });
  r.run("derived quotient orders", "first 12 terms match the printed list",
        [](std::vector<LedgerEntry>& out) {
          std::vector<SymbolicOrder> seq = derived_quotient_orders(14);
          const std::pair<uint32_t, Natural> printed12[] = {
              {2, 1}, {3, 1}, {2, 2}, {2, 1}, {3, 2}, {3, 1},
              {2, 6}, {2, 1}, {3, 8}, {3, 1}, {2, 162}, {2, 1}};
          bool first12 = true;
          for (size_t i = 0; i < 12; ++i)
            if (seq[i].prime != printed12[i].first ||
                seq[i].exponent != printed12[i].second)
              first12 = false;
          out.push_back(check("sequence first 12",
                              "2,3,2^2,2,3^2,3,2^6,2,3^8,3,2^162,2",
                              first12 ? "match" : "mismatch", "match",
                              first12));
          // Term 13: recursion vs print. Documented discrepancy, flagged.
          const SymbolicOrder& t13 = seq[12];
          bool matches_print =
              !t13.printed_mismatch && t13.exponent == t13.printed_exponent;
          out.push_back(
              {"sequence term 13",
               "recursion gives 3^(2^81); printed value is 3^(2*3^81)",
               "3^(2^81), exponent " + t13.exponent.str(),
               "printed exponent " + t13.printed_exponent.str(),
               matches_print ? LedgerEntry::Status::pass
                             : LedgerEntry::Status::flagged});
        });
  r.run("cs prefix", "prefix sums vs the minimal composition lengths",
        [](std::vector<LedgerEntry>& out) {
          const uint64_t expected_prefix[] = {1, 2, 4, 5, 7, 8, 14, 15};
          for (uint32_t d = 1; d <= 8; ++d) {
            Natural got = cs_prefix(d);
            out.push_back(check("cs prefix d=" + std::to_string(d),
                                "prefix composition length",
                                got.str(),
                                std::to_string(expected_prefix[d - 1]),
                                got == expected_prefix[d - 1]));
            bool is_exception = d == 7;
            uint64_t ref = ReferenceTables::c_S[d - 1];
            bool agree = got == ref;
            out.push_back(check(
                "cs vs reference d=" + std::to_string(d),
                "matches the minimal values except the documented d = 7 "
                "exception",
                got.str() + (agree ? " = " : " != ") + std::to_string(ref),
                is_exception ? "differs by 1 at d = 7" : "equal",
                is_exception ? got == ref + 1 : agree));
          }
        });
  r.run("cn bounds", "2-power sandwich for the nilpotent minimum",
        [](std::vector<LedgerEntry>& out) {
          bool ok = true;
          for (uint32_t d = 1; d <= 12; ++d) {
            CnBounds b = cn_bounds(d);
            if (b.lower > b.upper) ok = false;
          }
          out.push_back(check("cn bounds consistency",
                              "lower <= upper for d = 1..12",
                              ok ? "holds" : "violated", "holds", ok));
          CnBounds b1 = cn_bounds(1);
          out.push_back(check("cn bounds d=1", "1 <= c_N(1) <= 1",
                              b1.lower.str() + ".." + b1.upper.str(), "1..1",
                              b1.lower == 1 && b1.upper == 1));
          // Witness side: c(W_d) = 2^d - 1 meets the 2^d - 1 upper bound.
          PermutationGroup w3 = family_group(Family::Wd, 3);
          uint64_t c_w3 = factorize(w3.order()).exponent_sum();
          uint32_t d_w3 = derived_series(w3).derived_length();
          out.push_back(check("beta_2(3) witness",
                              "the degree-8 tower has c = 7 and d = 3",
                              "c = " + std::to_string(c_w3) + ", d = " +
                                  std::to_string(d_w3),
                              "c = 7, d = 3", c_w3 == 7 && d_w3 == 3));
          out.push_back(check("beta table",
                              "beta_p(1,2)=1,3; beta_p(3)=6 (p>=5); "
                              "beta_2(3)=beta_3(3)=7; beta_p(4)=14 (p>=5)",
                              "1,3,6,7,7,14", "1,3,6,7,7,14",
                              ReferenceTables::beta_any_1 == 1 &&
                                  ReferenceTables::beta_any_2 == 3 &&
                                  ReferenceTables::beta_ge5_3 == 6 &&
                                  ReferenceTables::beta_2_3 == 7 &&
                                  ReferenceTables::beta_3_3 == 7 &&
                                  ReferenceTables::beta_ge5_4 == 14));
        });
}

} // namespace

VerificationLedger run_suite(Suite which, const VerifyOptions& opts) {
  VerificationLedger ledger;
  Runner r{ledger, std::chrono::steady_clock::now(), opts.budget_seconds};
  if (which == Suite::all || which == Suite::analytics) suite_analytics(r);
  if (which == Suite::all || which == Suite::sequence) suite_sequence(r);
  if (which == Suite::all || which == Suite::families)
    suite_families(r, opts.opt_in);
  if (which == Suite::all || which == Suite::lemma) suite_lemma(r);
  if (which == Suite::all || which == Suite::hall) suite_hall(r);
  return ledger;
}

std::string VerificationLedger::render(OutputFormat f) const {
  std::string out;
  switch (f) {
    case OutputFormat::markdown: {
      out += "| status | check | computed | expected |\n|---|---|---|---|\n";
      for (const auto& e : entries)
        out += "| " + std::string(status_name(e.status)) + " | " + e.id +
               " | " + e.computed + " | " + e.expected + " |\n";
      break;
    }
    case OutputFormat::csv: {
      out += "status,check,claim,computed,expected\n";
      auto esc = [](std::string s) {
        bool needs = s.find_first_of(",\"\n") != std::string::npos;
        if (!needs) return s;
        std::string o = "\"";
        for (char c : s) {
          if (c == '"') o += '"';
          o += c;
        }
        return o + "\"";
      };
      for (const auto& e : entries)
        out += std::string(status_name(e.status)) + "," + esc(e.id) + "," +
               esc(e.claim) + "," + esc(e.computed) + "," + esc(e.expected) +
               "\n";
      break;
    }
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& e : entries)
        arr.push_back({{"status", status_name(e.status)},
                       {"check", e.id},
                       {"claim", e.claim},
                       {"computed", e.computed},
                       {"expected", e.expected}});
      json j;
      j["entries"] = arr;
      j["counts"] = {{"pass", count(LedgerEntry::Status::pass)},
                     {"fail", count(LedgerEntry::Status::fail)},
                     {"flagged", count(LedgerEntry::Status::flagged)},
                     {"skipped", count(LedgerEntry::Status::skipped)}};
      out = j.dump(2) + "\n";
      break;
    }
  }
  size_t fails = count(LedgerEntry::Status::fail);
  size_t flags = count(LedgerEntry::Status::flagged);
  size_t skips = count(LedgerEntry::Status::skipped);
  if (f != OutputFormat::json)
    out += "total " + std::to_string(entries.size()) + ": " +
           std::to_string(count(LedgerEntry::Status::pass)) + " pass, " +
           std::to_string(fails) + " fail, " + std::to_string(flags) +
           " flagged, " + std::to_string(skips) + " skipped\n";
  return out;
}

} // namespace solvlen
