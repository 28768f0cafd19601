#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pav/permutation.hpp"

namespace pav {

// A permutation of [k] plus a partition of the positions 1..k into maximal
// runs that must occupy adjacent positions in the host word. All-singleton
// blocks give the classical pattern; multi-element blocks give the vincular
// case. Classical and vincular containment share one code path.
class Pattern {
public:
  Pattern() = default;
  Pattern(Permutation perm, std::vector<int> block_sizes);

  static Pattern classical(Permutation perm);

  int length() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }
  const std::vector<int>& block_sizes() const { return block_sizes_; }
  bool is_classical() const;
  // Pattern positions i and i+1 (0-based) must sit at adjacent host positions.
  bool glued_after(int i) const { return glued_[static_cast<std::size_t>(i)] != 0; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
  Permutation perm_;
  std::vector<int> block_sizes_;
  std::vector<char> glued_;  // size k-1
};

// Grammar: blocks separated by '-', entries inside a block are adjacency
// constrained ("1-32", "21-3"); no dash at all means classical ("132").
Pattern parse_pattern(std::string_view text);
std::string to_text(const Pattern& pattern);

// Underlying permutation complemented, block structure unchanged.
Pattern complement_pattern(const Pattern& pattern);

// True iff word has positions i_1 < ... < i_k order-isomorphic to the pattern
// with positions inside each block consecutive. Total function.
bool contains_pattern(const Permutation& word, const Pattern& pattern);
bool avoids_all(const Permutation& word, std::span<const Pattern> patterns);

// Partial-word forms used by the enumerator: word[0..len) is the word built
// so far. The anchored form requires the pattern's last element to land on
// index len-1, which is how occurrences are detected incrementally.
bool has_match(std::span<const Entry> word, const Pattern& pattern);
bool has_match_ending_at(std::span<const Entry> word, const Pattern& pattern, int last_index);

} // namespace pav
