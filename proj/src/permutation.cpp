#include "pav/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace pav {

namespace {

void append_interleavings(std::span<const Entry> a, std::span<const Entry> b,
                          std::vector<Entry>& acc, std::vector<Permutation>& out) {
  if (a.empty() && b.empty()) {
    out.emplace_back(acc);
    return;
  }
  if (!a.empty()) {
    acc.push_back(a.front());
    append_interleavings(a.subspan(1), b, acc, out);
    acc.pop_back();
  }
  if (!b.empty()) {
    acc.push_back(b.front());
    append_interleavings(a, b.subspan(1), acc, out);
    acc.pop_back();
  }
}

} // namespace

Permutation::Permutation(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::vector<Entry> seen(entries_);
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] < 1) throw std::invalid_argument("permutation: entries must be positive");
    if (i > 0 && seen[i] == seen[i - 1])
      throw std::invalid_argument("permutation: entries must be distinct");
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("identity: n must be nonnegative");
  std::vector<Entry> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::vector<Entry> Permutation::sorted_values() const {
  std::vector<Entry> v(entries_);
  std::sort(v.begin(), v.end());
  return v;
}

bool Permutation::contains_value(Entry v) const {
  return std::find(entries_.begin(), entries_.end(), v) != entries_.end();
}

bool Permutation::is_over_range(int n) const {
  if (size() != n) return false;
  auto sorted = sorted_values();
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Permutation parse_permutation(std::string_view text) {
  // Strip surrounding whitespace.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) return Permutation{};

  std::vector<Entry> entries;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view token = text.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1)
        throw std::invalid_argument("permutation: bad entry '" + std::string(token) + "'");
      entries.push_back(value);
      if (end == text.size()) break;
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(
            "permutation: digit shorthand allows digits 1-9 only, got '" + std::string(1, c) + "'");
      entries.push_back(c - '0');
    }
  }
  return Permutation(std::move(entries));
}

std::string to_text(const Permutation& word) {
  bool small = !word.empty();
  for (Entry v : word.entries())
    if (v > 9) small = false;
  std::string out;
  for (int i = 0; i < word.size(); ++i) {
    if (small) {
      out += static_cast<char>('0' + word[i]);
    } else {
      if (i > 0) out += ',';
      out += std::to_string(word[i]);
    }
  }
  return out;
}

Permutation complement(const Permutation& word) {
  if (!word.is_over_range(word.size()))
    throw std::invalid_argument("complement: ground set must be exactly [n]");
  return complement_within(word, word.size());
}

Permutation complement_within(const Permutation& word, int n) {
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(word.size()));
  for (Entry v : word.entries()) {
    if (v > n) throw std::invalid_argument("complement_within: entry exceeds n");
    out.push_back(n + 1 - v);
  }
  return Permutation(std::move(out));
}

Permutation standardize(const Permutation& word) {
  if (word.empty()) throw std::invalid_argument("standardize: word must be nonempty");
  auto sorted = word.sorted_values();
  std::vector<Entry> out;
  out.reserve(sorted.size());
  for (Entry v : word.entries()) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<Entry>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

Permutation matching_permutation(const Permutation& word, std::vector<Entry> target) {
  if (!word.is_over_range(word.size()))
    throw std::invalid_argument("matching_permutation: word must be over [n]");
  if (static_cast<int>(target.size()) != word.size())
    throw std::invalid_argument("matching_permutation: target size must equal word length");
  std::sort(target.begin(), target.end());
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] < 1 || (i > 0 && target[i] == target[i - 1]))
      throw std::invalid_argument("matching_permutation: target must be a set of positive integers");
  }
  std::vector<Entry> out;
  out.reserve(target.size());
  for (Entry v : word.entries()) out.push_back(target[static_cast<std::size_t>(v - 1)]);
  return Permutation(std::move(out));
}

Permutation subpermutation(const Permutation& word, const std::vector<Entry>& values) {
  for (Entry v : values)
    if (!word.contains_value(v))
      throw std::invalid_argument("subpermutation: value " + std::to_string(v) +
                                  " not in the ground set");
  std::vector<Entry> out;
  out.reserve(values.size());
  for (Entry v : word.entries())
    if (std::find(values.begin(), values.end(), v) != values.end()) out.push_back(v);
  return Permutation(std::move(out));
}

std::vector<Entry> ancestors(const Permutation& word, Entry a) {
  const auto& e = word.entries();
  auto it = std::find(e.begin(), e.end(), a);
  if (it == e.end()) throw std::invalid_argument("ancestors: entry not present");
  std::vector<Entry> out(e.begin(), it);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Entry> descendants(const Permutation& word, Entry a) {
  const auto& e = word.entries();
  auto it = std::find(e.begin(), e.end(), a);
  if (it == e.end()) throw std::invalid_argument("descendants: entry not present");
  std::vector<Entry> out(it + 1, e.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> enumerate_shuffles(const Permutation& a, const Permutation& b) {
  for (Entry v : a.entries())
    if (b.contains_value(v))
      throw std::invalid_argument("enumerate_shuffles: ground sets must be disjoint");
  std::vector<Permutation> out;
  std::vector<Entry> acc;
  acc.reserve(static_cast<std::size_t>(a.size() + b.size()));
  append_interleavings(a.view(), b.view(), acc, out);
  return out;
}

Count count_shuffles(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("count_shuffles: lengths must be nonnegative");
  return binomial(static_cast<long long>(k) + l, k);
}

} // namespace pav
