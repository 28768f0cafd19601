#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pav/pattern.hpp"
#include "pav/sequences.hpp"

namespace pav {

// Empirical r-Wilf classification: patterns share a class exactly when their
// count vectors (|S_{n,r}(p)|)_{n = r..n_max} coincide. Evidence over a
// finite range, never a proof.
struct WilfClassification {
  int r = 0;
  int n_min = 0;
  int n_max = 0;
  std::vector<Pattern> patterns;
  std::vector<std::vector<int>> classes;     // indices into patterns, first-seen order
  std::vector<std::vector<Count>> evidence;  // per pattern, counts for n = n_min..n_max
};

// Counts come from the closed forms for classical length-3 patterns and from
// the enumerator for everything else (vincular patterns have no closed form
// beyond a few tabulated cells).
WilfClassification classify_r_wilf(int r, const std::vector<Pattern>& patterns, int n_max,
                                   int jobs = 1);

// The closed-form |S_{n,r}(p)| cells for classical length-3 patterns at
// r in {1, 2, n-1, n}; keyed by (r, pattern text). Requires n >= 2.
std::map<std::pair<int, std::string>, Count> table2(int n);

// The tabulated |S_{n,r}(p)| cells for the twelve vincular length-3 patterns
// at n in {r, r+1, r+2}; blank cells are simply absent. Requires r >= 3.
std::map<std::pair<std::string, int>, Count> table3(int r);

// The twelve vincular patterns of length 3 (one two-element block each), and
// the six classical ones, in a fixed presentation order.
const std::vector<Pattern>& vincular_length3_patterns();
const std::vector<Pattern>& classical_length3_patterns();

} // namespace pav
