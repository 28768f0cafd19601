#pragma once

#include <map>
#include <string>
#include <vector>

#include "pav/sequences.hpp"

namespace pav {

struct VerifyOptions {
  int n_max = 7;
  int prefix_max = 2;
  int jobs = 1;
};

struct SweepReport {
  std::string suite;
  long long checks = 0;
  std::vector<std::string> mismatches;         // one line per failing check
  std::map<std::string, long long> rule_hits;  // theorem-branch coverage
  bool passed() const { return mismatches.empty(); }
};

// Closed forms against the exhaustive enumerator, query by query, exact.
SweepReport sweep_singles(const VerifyOptions& options);    // single length-3 patterns
SweepReport sweep_pairs(const VerifyOptions& options);      // all 15 pairs
SweepReport sweep_schroder(const VerifyOptions& options);   // {3412, 3421}
// Tabulated leading-term cells and the r-Wilf class structure.
SweepReport sweep_tables(const VerifyOptions& options);
// Sequence identities and inequalities; pure arithmetic, no enumeration.
SweepReport sweep_identities(const VerifyOptions& options);

// Runs the named suites ("singles", "pairs", "schroder", "tables",
// "identities", or "all") in a fixed order.
std::vector<SweepReport> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& options);

std::string format_report(const SweepReport& report);

// Base branch identifier with any complement wrapper stripped.
std::string base_rule(const std::string& rule);

} // namespace pav
