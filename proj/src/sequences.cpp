#include "pav/sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace pav {

namespace {

// Growable memo tables. Identity sweeps re-derive the same values constantly,
// so every sequence is cached; each table has its own lock and the observable
// behavior stays that of a pure function.

std::mutex pascal_mutex;
std::vector<std::vector<Count>> pascal_rows;

std::mutex catalan_mutex;
std::vector<Count> catalan_table;

std::mutex bell_mutex;
std::vector<Count> bell_table;

std::mutex schroder_mutex;
std::vector<Count> schroder_table;

Count exact_quotient(const Count& numerator, const Count& divisor) {
  Count q, r;
  boost::multiprecision::divide_qr(numerator, divisor, q, r);
  if (r != 0) throw std::logic_error("sequences: division expected to be exact");
  return q;
}

} // namespace

Count binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  std::lock_guard lock(pascal_mutex);
  if (pascal_rows.empty()) pascal_rows.push_back({Count(1)});
  while (static_cast<long long>(pascal_rows.size()) <= n) {
    const auto& prev = pascal_rows.back();
    std::vector<Count> row(prev.size() + 1, Count(1));
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    pascal_rows.push_back(std::move(row));
  }
  return pascal_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Count catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
  std::lock_guard lock(catalan_mutex);
  while (static_cast<int>(catalan_table.size()) <= n) {
    const int m = static_cast<int>(catalan_table.size());
    catalan_table.push_back(exact_quotient(binomial(2LL * m, m), Count(m + 1)));
  }
  return catalan_table[n];
}

Count bell(int n) {
  if (n < 0) throw std::invalid_argument("bell: n must be nonnegative");
  std::lock_guard lock(bell_mutex);
  if (bell_table.empty()) bell_table.push_back(Count(1));
  while (static_cast<int>(bell_table.size()) <= n) {
    const int m = static_cast<int>(bell_table.size());
    Count next = 0;
    for (int k = 0; k < m; ++k) next += binomial(m - 1, k) * bell_table[k];
    bell_table.push_back(std::move(next));
  }
  return bell_table[n];
}

Count schroder(int n) {
  if (n < 0) throw std::invalid_argument("schroder: n must be nonnegative");
  std::lock_guard lock(schroder_mutex);
  if (schroder_table.empty()) schroder_table.push_back(Count(1));
  while (static_cast<int>(schroder_table.size()) <= n) {
    const int m = static_cast<int>(schroder_table.size()) - 1;  // have S_0..S_m
    Count conv = 0;
    for (int r = 0; r <= m; ++r) conv += schroder_table[r] * schroder_table[m - r];
    schroder_table.push_back(schroder_table[m] + conv);
  }
  return schroder_table[n];
}

Count ballot(int n, int r) {
  if (n < 1 || r < 1 || r > n)
    throw std::invalid_argument("ballot: need 1 <= r <= n");
  // Multiply before dividing; the division is exact and checked.
  return exact_quotient(Count(n - r + 1) * binomial(n + r - 1, n), Count(n + r - 1));
}

Count simion_schmidt_a(int n, int i) {
  if (n < 1 || i < 1 || i > n)
    throw std::invalid_argument("simion_schmidt_a: need 1 <= i <= n");
  return binomial(2LL * n - i - 1, n - 1) - binomial(2LL * n - i - 1, n);
}

} // namespace pav
