#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solvlen/tables.hpp"

namespace solvlen {

enum class Suite { all, families, lemma, hall, analytics, sequence };
Suite parse_suite(const std::string& s);

struct LedgerEntry {
  enum class Status { pass, fail, flagged, skipped };
  std::string id;
  std::string claim; // the statement being checked
  std::string computed;
  std::string expected;
  Status status = Status::fail;
};

/// Aggregated claim checks. Exit status 0 unless a check failed; flagged
/// entries are documented discrepancies in the reference values and do not
/// fail a run; a truncated run exits 3.
struct VerificationLedger {
  std::vector<LedgerEntry> entries;

  size_t count(LedgerEntry::Status s) const;
  int exit_code() const; // 0 pass/flagged-only, 1 any fail, 3 any skipped
  std::string render(OutputFormat f) const;
};

struct VerifyOptions {
  double budget_seconds = 900.0;
  bool opt_in = false;
};

VerificationLedger run_suite(Suite which, const VerifyOptions& opts);

} // namespace solvlen
