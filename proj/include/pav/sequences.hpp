#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pav {

// Exact nonnegative integer used on every counting path. Counts grow
// super-exponentially, so nothing here ever touches floating point.
using Count = boost::multiprecision::cpp_int;

// binom(n, k); 0 when k < 0 or k > n, so identity sums need no edge guards.
Count binomial(long long n, long long k);

// Catalan numbers C_n = binom(2n, n) / (n + 1).
Count catalan(int n);

// Bell numbers via B_n = sum_{k=0}^{n-1} binom(n-1, k) B_k, B_0 = 1.
Count bell(int n);

// Large Schroder numbers via S_{n+1} = S_n + sum_{r=0}^{n} S_r S_{n-r}, S_0 = 1.
Count schroder(int n);

// Ballot number b(n, r) = (n-r+1)/(n+r-1) * binom(n+r-1, n), 1 <= r <= n.
// Counts permutations of [n] with leading term r that avoid 123 (equally 132).
Count ballot(int n, int r);

// Number of 123-avoiding permutations of [n] whose first ascent sits at
// index i, with the all-descending word counted at i = n; 1 <= i <= n.
// Equals binom(2n-i-1, n-1) - binom(2n-i-1, n).
Count simion_schmidt_a(int n, int i);

} // namespace pav
