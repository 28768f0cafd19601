#include "pav/query.hpp"

#include <algorithm>
#include <stdexcept>

namespace pav {

void validate_prefix(int n, const Permutation& prefix) {
  if (n < 1) throw std::invalid_argument("query: n must be positive");
  if (prefix.size() >= n)
    throw std::invalid_argument("query: prefix length must be less than n");
  for (Entry v : prefix.entries())
    if (v > n) throw std::invalid_argument("query: prefix entry exceeds n");
}

PrefixQuery::PrefixQuery(int n, Permutation prefix, std::vector<Pattern> patterns)
    : n_(n), prefix_(std::move(prefix)), patterns_(std::move(patterns)) {
  validate_prefix(n_, prefix_);
  if (patterns_.empty()) throw std::invalid_argument("query: pattern set must be nonempty");
  std::sort(patterns_.begin(), patterns_.end(),
            [](const Pattern& a, const Pattern& b) { return to_text(a) < to_text(b); });
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

} // namespace pav
