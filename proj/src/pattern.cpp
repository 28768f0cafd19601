#include "pav/pattern.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace pav {

namespace {

constexpr int kMaxPatternLength = 8;

// Depth-first embedding search. Pattern indices are assigned host positions
// left to right; each candidate is checked for order compatibility against
// everything already placed, and a glued pair forces the next host position.
// When last_index >= 0 the final pattern element must land exactly there.
bool match_rec(std::span<const Entry> w, const Pattern& pat, int a,
               std::array<int, kMaxPatternLength>& host, int last_index) {
  const int k = pat.length();
  if (a == k) return true;
  const auto& pv = pat.perm().entries();

  int lo = (a == 0) ? 0 : host[a - 1] + 1;
  int hi = (last_index >= 0) ? last_index - (k - 1 - a)
                             : static_cast<int>(w.size()) - (k - a);
  if (a > 0 && pat.glued_after(a - 1)) hi = std::min(hi, host[a - 1] + 1);
  if (a == k - 1 && last_index >= 0) lo = std::max(lo, last_index);

  for (int i = lo; i <= hi; ++i) {
    bool compatible = true;
    for (int b = 0; b < a && compatible; ++b)
      compatible = (w[host[b]] < w[i]) == (pv[b] < pv[a]);
    if (!compatible) continue;
    host[a] = i;
    if (match_rec(w, pat, a + 1, host, last_index)) return true;
  }
  return false;
}

} // namespace

Pattern::Pattern(Permutation perm, std::vector<int> block_sizes)
    : perm_(std::move(perm)), block_sizes_(std::move(block_sizes)) {
  const int k = perm_.size();
  if (k == 0) throw std::invalid_argument("pattern: must be nonempty");
  if (k > kMaxPatternLength) throw std::invalid_argument("pattern: too long");
  if (!perm_.is_over_range(k))
    throw std::invalid_argument("pattern: permutation must be over [k]");
  int total = 0;
  for (int s : block_sizes_) {
    if (s < 1) throw std::invalid_argument("pattern: block sizes must be positive");
    total += s;
  }
  if (total != k) throw std::invalid_argument("pattern: block sizes must partition the positions");
  glued_.assign(static_cast<std::size_t>(k > 0 ? k - 1 : 0), 0);
  int pos = 0;
  for (int s : block_sizes_) {
    for (int i = 1; i < s; ++i) glued_[static_cast<std::size_t>(pos + i - 1)] = 1;
    pos += s;
  }
}

Pattern Pattern::classical(Permutation perm) {
  std::vector<int> sizes(static_cast<std::size_t>(perm.size()), 1);
  return Pattern(std::move(perm), std::move(sizes));
}

bool Pattern::is_classical() const {
  return std::all_of(block_sizes_.begin(), block_sizes_.end(), [](int s) { return s == 1; });
}

Pattern parse_pattern(std::string_view text) {
  if (text.find('-') == std::string_view::npos)
    return Pattern::classical(parse_permutation(text));

  std::vector<Entry> entries;
  std::vector<int> sizes;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('-', start);
    if (end == std::string_view::npos) end = text.size();
    Permutation block = parse_permutation(text.substr(start, end - start));
    if (block.empty()) throw std::invalid_argument("pattern: empty block");
    sizes.push_back(block.size());
    for (Entry v : block.entries()) entries.push_back(v);
    if (end == text.size()) break;
    start = end + 1;
  }
  return Pattern(Permutation(std::move(entries)), std::move(sizes));
}

std::string to_text(const Pattern& pattern) {
  if (pattern.is_classical()) return to_text(pattern.perm());
  std::string out;
  int pos = 0;
  for (std::size_t b = 0; b < pattern.block_sizes().size(); ++b) {
    if (b > 0) out += '-';
    std::vector<Entry> block(pattern.perm().entries().begin() + pos,
                             pattern.perm().entries().begin() + pos + pattern.block_sizes()[b]);
    out += to_text(Permutation(std::move(block)));
    pos += pattern.block_sizes()[b];
  }
  return out;
}

Pattern complement_pattern(const Pattern& pattern) {
  return Pattern(complement(pattern.perm()), pattern.block_sizes());
}

bool has_match(std::span<const Entry> word, const Pattern& pattern) {
  if (pattern.length() > static_cast<int>(word.size())) return false;
  std::array<int, kMaxPatternLength> host{};
  return match_rec(word, pattern, 0, host, -1);
}

bool has_match_ending_at(std::span<const Entry> word, const Pattern& pattern, int last_index) {
  if (last_index < 0 || last_index >= static_cast<int>(word.size())) return false;
  if (pattern.length() > last_index + 1) return false;
  std::array<int, kMaxPatternLength> host{};
  return match_rec(word, pattern, 0, host, last_index);
}

bool contains_pattern(const Permutation& word, const Pattern& pattern) {
  return has_match(word.view(), pattern);
}

bool avoids_all(const Permutation& word, std::span<const Pattern> patterns) {
  for (const Pattern& p : patterns)
    if (contains_pattern(word, p)) return false;
  return true;
}

} // namespace pav
