#pragma once

#include <vector>

#include "pav/pattern.hpp"
#include "pav/permutation.hpp"

namespace pav {

// The counting problem |S_{n,(c_1..c_t)}(p_1, ..., p_m)|: permutations of [n]
// that start with the given prefix and avoid every listed pattern. An empty
// prefix denotes the unconstrained problem over all of S_n.
class PrefixQuery {
public:
  PrefixQuery(int n, Permutation prefix, std::vector<Pattern> patterns);

  int n() const { return n_; }
  const Permutation& prefix() const { return prefix_; }
  int prefix_length() const { return prefix_.size(); }
  // Sorted by canonical text and deduplicated.
  const std::vector<Pattern>& patterns() const { return patterns_; }

private:
  int n_ = 0;
  Permutation prefix_;
  std::vector<Pattern> patterns_;
};

// Shared validation for (n, prefix) pairs: distinct entries within [n] and
// t < n. Rejected at parse/construction time, never inside counting.
void validate_prefix(int n, const Permutation& prefix);

} // namespace pav
