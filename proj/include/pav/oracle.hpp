#pragma once

#include <cstdint>
#include <vector>

#include "pav/query.hpp"
#include "pav/sequences.hpp"

namespace pav {

struct EnumerateOptions {
  bool collect_witnesses = false;
  // Bounds the witness list only; the count is never truncated.
  std::size_t witness_cap = 1000;
  // Worker threads over the top-level branch (first unfixed value); results
  // are independent of the partitioning. <= 0 resolves via PAV_JOBS or the
  // hardware concurrency.
  int jobs = 1;
  // Skip all incremental pruning and test only complete words; slow, kept as
  // the reference mode for differential testing.
  bool force_naive = false;
};

struct OracleResult {
  Count count = 0;
  // Lexicographically sorted, distinct, at most witness_cap entries.
  std::vector<Permutation> witnesses;
};

// Ground-truth count of completions of the prefix that avoid every pattern,
// by exhaustive generation in lexicographic order with subtree pruning.
OracleResult enumerate_avoiders(const PrefixQuery& query, const EnumerateOptions& options = {});

// Entry r (1-based) counts completions with leading term r; the entries sum
// to the unconstrained count.
std::vector<Count> leading_term_vector(int n, const std::vector<Pattern>& patterns, int jobs = 1);

int resolve_jobs(int requested);

} // namespace pav
