#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pav/sequences.hpp"

namespace pav {

using Entry = int;

// A sequence of distinct positive integers; the ground set is implicit in the
// entry values. The empty permutation is the identity element for shuffles.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Entry> entries);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  Entry operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::span<const Entry> view() const { return entries_; }

  // Ground set in ascending order.
  std::vector<Entry> sorted_values() const;
  bool contains_value(Entry v) const;
  // True when the ground set is exactly {1, ..., n}.
  bool is_over_range(int n) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Entry> entries_;
};

// Text grammar: comma-separated positive integers ("3,1,2"), or digit-string
// shorthand when every entry is at most 9 ("312").
Permutation parse_permutation(std::string_view text);
std::string to_text(const Permutation& word);

// Entry-wise n+1-v for a word whose ground set is exactly [n]; an involution.
Permutation complement(const Permutation& word);
// Same map relative to an ambient [n] that may be larger than the word.
Permutation complement_within(const Permutation& word, int n);

// Order-isomorphic relabeling onto [k]; requires a nonempty word.
Permutation standardize(const Permutation& word);

// Inverse of standardization: entry j becomes the j-th smallest element of
// target. Requires word over [k] with |target| = k.
Permutation matching_permutation(const Permutation& word, std::vector<Entry> target);

// Subsequence of word consisting of the entries in values (a subset of the
// ground set), order preserved.
Permutation subpermutation(const Permutation& word, const std::vector<Entry>& values);

// Entries strictly before / after the occurrence of a, ascending.
std::vector<Entry> ancestors(const Permutation& word, Entry a);
std::vector<Entry> descendants(const Permutation& word, Entry a);

// All interleavings of two words on disjoint ground sets that preserve both
// internal orders; binom(|a|+|b|, |a|) of them, all distinct.
std::vector<Permutation> enumerate_shuffles(const Permutation& a, const Permutation& b);
Count count_shuffles(int k, int l);

} // namespace pav
