#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solvlen/families.hpp"

namespace solvlen {

enum class TableKind { theorem1a, theorem1b, un, wd };
enum class OutputFormat { markdown, csv, json };

TableKind parse_table_kind(const std::string& s);
OutputFormat parse_format(const std::string& s);

/// A rendered table: named columns, string cells, plus the reports the
/// rows were derived from (for JSON round-trips).
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<GroupReport> reports;

  std::string render(OutputFormat f) const;
};

/// Every cell is computed live: orders via chains, c via factorization,
/// d via derived series, x_n via its formula. r_max is bounded by the
/// family feasibility cutoffs; degree-243..648 members need opt_in.
Table cmd_table(TableKind kind, uint32_t r_max, uint32_t p, bool opt_in);

// JSON (de)serialization of reports, used by the round-trip checks.
std::string reports_to_json(const std::vector<GroupReport>& reports);
std::vector<GroupReport> reports_from_json(const std::string& text);

} // namespace solvlen
