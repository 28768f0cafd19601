#pragma once

// Test-side reference implementations, kept independent of the library's
// pruned search path so differential checks mean something.

#include <algorithm>
#include <cstdint>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pav/pattern.hpp"
#include "pav/permutation.hpp"

namespace pav::testing {

// Double-loop filter: walk all n! words, keep those extending the prefix and
// passing avoids_all.
inline std::uint64_t naive_count(int n, const Permutation& prefix,
                                 const std::vector<Pattern>& patterns) {
  std::vector<Entry> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::uint64_t count = 0;
  do {
    bool extends = true;
    for (int i = 0; i < prefix.size() && extends; ++i)
      extends = (word[static_cast<std::size_t>(i)] == prefix[i]);
    if (extends && avoids_all(Permutation(word), patterns)) ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

// Containment by direct enumeration of position subsets (bitmask form), with
// the block-adjacency test done on the chosen index tuple.
inline bool brute_contains(const Permutation& word, const Pattern& pat) {
  const int n = word.size();
  const int k = pat.length();
  if (k > n || n > 20) return k <= n ? false : false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> pos;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) pos.push_back(i);
    bool ok = true;
    for (int a = 0; a + 1 < k && ok; ++a)
      if (pat.glued_after(a)) ok = (pos[static_cast<std::size_t>(a) + 1] == pos[static_cast<std::size_t>(a)] + 1);
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        ok = ((word[pos[static_cast<std::size_t>(a)]] < word[pos[static_cast<std::size_t>(b)]]) ==
              (pat.perm()[a] < pat.perm()[b]));
    if (ok) return true;
  }
  return false;
}

// All words of S_n in lexicographic order.
inline std::vector<Permutation> all_words(int n) {
  std::vector<Entry> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

} // namespace pav::testing
