#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "solvlen/analytics.hpp"
#include "solvlen/constructors.hpp"
#include "solvlen/cycles.hpp"
#include "solvlen/error.hpp"
#include "solvlen/ledger.hpp"
#include "solvlen/series.hpp"
#include "solvlen/tables.hpp"

using namespace solvlen;

namespace {

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::string render_report(const GroupReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return reports_to_json({r}) + "\n";
    case OutputFormat::csv: {
      std::string out = "name,degree,order,c,d,transitive,expected_c,"
                        "expected_d,match\n";
      out += r.name + "," + std::to_string(r.degree) + "," + r.order.str() +
             "," + std::to_string(r.c) + "," + std::to_string(r.d) + "," +
             (r.transitive ? "true" : "false") + ",";
      out += (r.expected_c ? std::to_string(*r.expected_c) : "") + ",";
      out += (r.expected_d ? std::to_string(*r.expected_d) : "") + ",";
      out += r.match ? "true" : "false";
      return out + "\n";
    }
    case OutputFormat::markdown:
    default: {
      std::string out = "# " + r.name + "\n";
      out += "- degree: " + std::to_string(r.degree) + "\n";
      out += "- order: " + r.order.str() + "\n";
      out += "- c: " + std::to_string(r.c);
      if (r.expected_c) out += " (expected " + std::to_string(*r.expected_c) + ")";
      out += "\n- d: " + std::to_string(r.d);
      if (r.expected_d) out += " (expected " + std::to_string(*r.expected_d) + ")";
      out += "\n- transitive: " + std::string(r.transitive ? "yes" : "no");
      if (r.expected_c || r.expected_d)
        out += "\n- match: " + std::string(r.match ? "yes" : "no");
      return out + "\n";
    }
  }
}

// Decimal expansion of a factored order, for --decimal.
std::string decimal_order(const Factorization& f) { return f.value().str(); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvlen: composition length and derived length of solvable "
               "permutation groups, with verification suites"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");

  std::string format_str = "markdown";

  // table
  auto* table_cmd = app.add_subcommand("table", "emit a computed table");
  std::string which = "theorem1a";
  uint32_t r_max = 1;
  uint32_t un_p = 2;
  bool opt_in = false;
  bool decimal = false;
  table_cmd->add_option("--which", which,
                        "theorem1a | theorem1b | un | wd");
  table_cmd->add_option("--r-max", r_max, "tower height (n for un)");
  table_cmd->add_option("--p", un_p, "field characteristic for un (2 or 3)");
  table_cmd->add_flag("--opt-in", opt_in, "include degree-243..648 members");
  table_cmd->add_flag("--decimal", decimal,
                      "append full decimal order expansions");
  table_cmd->add_option("--format", format_str, "markdown | csv | json");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string suite_str = "all";
  double budget = 900.0;
  verify_cmd->add_option("--suite", suite_str,
                         "all | families | lemma | hall | analytics | "
                         "sequence");
  verify_cmd->add_option("--budget-seconds", budget, "time budget");
  verify_cmd->add_flag("--opt-in", opt_in, "include degree-243..648 members");
  verify_cmd->add_option("--format", format_str, "markdown | csv | json");

  // report
  auto* report_cmd = app.add_subcommand("report", "report on one group");
  std::string family_str, mode_str = "linear-all", name_str;
  std::vector<std::string> matrix_strs;
  uint32_t report_r = 1, matrix_p = 3;
  report_cmd->add_option("--family", family_str,
                         "Gm | G2m | G3m | G4m | G8m | Hm | H3m | Wd");
  report_cmd->add_option("--r", report_r, "tower height");
  report_cmd->add_option("--named", name_str,
                         "G8 | G9 | H7 | A3 | S2 | S3 | S4");
  report_cmd->add_option("--matrix", matrix_strs,
                         "matrix generator 'a b;c d', repeatable");
  report_cmd->add_option("--p", matrix_p, "matrix field characteristic");
  report_cmd->add_option("--mode", mode_str,
                         "linear-nonzero | linear-all | affine");
  report_cmd->add_option("--format", format_str, "markdown | csv | json");

  // element
  auto* element_cmd = app.add_subcommand("element", "cycle-notation utility");
  std::vector<std::string> cycle_args;
  uint32_t element_degree = 0;
  bool invert = false;
  element_cmd->add_option("cycles", cycle_args,
                          "cycle expressions, composed left to right")
      ->required();
  element_cmd->add_option("--degree", element_degree, "declared degree");
  element_cmd->add_flag("--inverse", invert, "invert the result");
  element_cmd->add_option("--format", format_str, "markdown | csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_threads(threads);
  try {
    OutputFormat format = parse_format(format_str);
    if (*table_cmd) {
      Table t = cmd_table(parse_table_kind(which), r_max, un_p, opt_in);
      if (decimal) {
        for (size_t i = 0; i < t.reports.size(); ++i)
          t.rows[i].push_back(decimal_order(t.reports[i].order));
        t.columns.push_back("order (decimal)");
      }
      std::cout << t.render(format);
      return 0;
    }
    if (*verify_cmd) {
      VerifyOptions opts;
      opts.budget_seconds = budget;
      opts.opt_in = opt_in;
      VerificationLedger ledger = run_suite(parse_suite(suite_str), opts);
      std::cout << ledger.render(format);
      return ledger.exit_code();
    }
    if (*report_cmd) {
      GroupReport rep;
      if (!family_str.empty()) {
        FamilyExpectation e = family_expected(parse_family(family_str),
                                              report_r);
        rep = make_report(e.name, family_group(parse_family(family_str),
                                               report_r),
                          e.c, e.d);
      } else if (!name_str.empty()) {
        rep = make_report(name_str, named_group(parse_named_group(name_str)),
                          std::nullopt, std::nullopt);
      } else if (!matrix_strs.empty()) {
        MatrixGroupSpec spec;
        spec.p = matrix_p;
        for (const std::string& m : matrix_strs)
          spec.generators.push_back(parse_matrix(m, matrix_p));
        spec.dim = static_cast<uint32_t>(spec.generators[0].size());
        MatrixAction mode = mode_str == "affine" ? MatrixAction::affine
                            : mode_str == "linear-nonzero"
                                ? MatrixAction::linear_nonzero
                                : MatrixAction::linear_all;
        rep = make_report("matrix group", matrix_to_perm(spec, mode),
                          std::nullopt, std::nullopt);
      } else {
        std::cerr << "report: need --family, --named or --matrix\n";
        return 2;
      }
      std::cout << render_report(rep, format);
      return 0;
    }
    if (*element_cmd) {
      uint32_t deg = std::max(element_degree, 1u);
      for (const auto& s : cycle_args)
        deg = std::max(deg, parse_cycles(s, element_degree).degree());
      Perm p(deg);
      for (const auto& s : cycle_args) p = compose(p, parse_cycles(s, deg));
      if (invert) p = inverse(p);
      if (format == OutputFormat::json) {
        std::cout << "{\"cycles\": \"" << format_cycles(p)
                  << "\", \"degree\": " << p.degree() << "}\n";
      } else {
        std::cout << format_cycles(p) << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
