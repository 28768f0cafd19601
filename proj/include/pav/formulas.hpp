#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pav/pattern.hpp"
#include "pav/permutation.hpp"
#include "pav/sequences.hpp"

namespace pav {

// Derived order statistics of a prefix relative to [n]. Sentinels 0 and n+1
// bound the gaps; the gaps sum to n - t.
struct PrefixAnalysis {
  int n = 0;
  std::vector<Entry> order_stats;            // prefix values ascending
  std::vector<int> gaps;                     // t+1 entries between sentinels
  std::optional<Entry> min_value;
  std::optional<Entry> max_value;
  std::vector<Entry> heads_of_231;           // values starting a 231 pattern inside the prefix
  std::vector<Entry> with_later_larger;      // values followed by a larger prefix value
  std::optional<int> first_open_gap;         // 1-based index of the first positive gap
};

PrefixAnalysis analyze_prefix(int n, const Permutation& prefix);

// A count together with the identifier of the theorem branch that produced
// it, so sweeps can report case coverage.
struct CountOutcome {
  Count count;
  std::string rule;
};

// |S_{n,(c_1..c_t)}(p)| for a single classical pattern p of length 3.
CountOutcome count_single_length3(int n, const Permutation& prefix, const Pattern& p);

// |S_{n,(c_1..c_t)}(a, b)| for an unordered pair of distinct classical
// patterns of length 3; every zero-condition case analysis is implemented as
// a decision procedure and named in the rule.
CountOutcome count_pair_length3(int n, const Permutation& prefix, const Pattern& a,
                                const Pattern& b);

// |S_{n,(c_1..c_t)}(3412, 3421)|, a Schroder-number block product.
CountOutcome count_pair_3412_3421(int n, const Permutation& prefix);

} // namespace pav
