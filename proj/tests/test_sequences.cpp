#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <vector>

#include "pav/oracle.hpp"
#include "pav/query.hpp"
#include "pav/sequences.hpp"

using namespace pav;

TEST_CASE("binomial basics") {
  CHECK(binomial(5, 4) == 5);
  CHECK(binomial(7, 5) == 21);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("golden sequence values, n <= 10") {
  const long long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  const long long bel[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  const long long sch[] = {1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718};
  for (int n = 0; n <= 10; ++n) {
    CHECK(catalan(n) == cat[n]);
    CHECK(bell(n) == bel[n]);
    CHECK(schroder(n) == sch[n]);
  }
}

TEST_CASE("memo tables stay dense when probed out of order") {
  CHECK(catalan(12) == 208012);
  CHECK(catalan(3) == 5);
  CHECK(bell(12) == 4213597);
  CHECK(bell(2) == 2);
  CHECK(schroder(12) == 27297738);
  CHECK(schroder(1) == 2);
}

TEST_CASE("ballot numbers") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(ballot(n, 1) == 1);
    CHECK(ballot(n, n) == catalan(n - 1));
  }
  CHECK(ballot(5, 3) == 9);
  CHECK_THROWS_AS(ballot(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(ballot(4, 0), std::invalid_argument);
}

TEST_CASE("ballot(5,3) equals the exhaustive count of S_{5,3}(123)") {
  PrefixQuery q(5, Permutation({3}), {Pattern::classical(Permutation({1, 2, 3}))});
  CHECK(enumerate_avoiders(q).count == ballot(5, 3));
}

TEST_CASE("first-ascent counts") {
  for (int n = 1; n <= 10; ++n) CHECK(simion_schmidt_a(n, n) == 1);
  CHECK(simion_schmidt_a(1, 1) == 1);
  CHECK(simion_schmidt_a(4, 1) == 5);
  CHECK(simion_schmidt_a(4, 1) == binomial(6, 3) - binomial(6, 4));
  CHECK_THROWS_AS(simion_schmidt_a(4, 5), std::invalid_argument);

  // a(n, i) over i partitions S_n(123) by the first ascent position.
  for (int n = 1; n <= 8; ++n) {
    Count sum = 0;
    for (int i = 1; i <= n; ++i) sum += simion_schmidt_a(n, i);
    CHECK(sum == catalan(n));
  }
}

TEST_CASE("summation identity: binom-weighted first-ascent counts give ballot numbers") {
  for (int n = 2; n <= 30; ++n)
    for (int r = 2; r <= n; ++r) {
      Count sum = 0;
      for (int i = 1; i <= r - 1; ++i)
        sum += binomial(i + n - r, i) * simion_schmidt_a(r - 1, i);
      CHECK(sum == ballot(n, r));
    }
}

TEST_CASE("vandermonde variant") {
  for (int n = 2; n <= 30; ++n)
    for (int r = 2; r <= n; ++r) {
      Count sum = 0;
      for (int i = 1; i <= r - 1; ++i)
        sum += binomial(i + n - r, i - 1) * binomial(2 * r - i - 3, r - 2);
      CHECK(sum == binomial(n + r - 2, r - 2));
    }
}

TEST_CASE("catalan below bell, bell more than doubles") {
  for (int n = 4; n <= 25; ++n) CHECK(catalan(n) < bell(n));
  for (int n = 3; n <= 25; ++n) CHECK(bell(n) > 2 * bell(n - 1));
}

TEST_CASE("catalan convolution recurrence") {
  for (int n = 1; n <= 20; ++n) {
    Count sum = 0;
    for (int r = 1; r <= n; ++r) sum += catalan(n - r) * catalan(r - 1);
    CHECK(sum == catalan(n));
  }
}

TEST_CASE("schroder agrees with the binomial-catalan expansion") {
  // Independent route: S_n = sum_i binom(2n-i, i) C_{n-i}.
  for (int n = 0; n <= 20; ++n) {
    Count sum = 0;
    for (int i = 0; i <= n; ++i) sum += binomial(2 * n - i, i) * catalan(n - i);
    CHECK(sum == schroder(n));
  }
}

TEST_CASE("concurrent access to the memo tables") {
  std::vector<std::future<Count>> futures;
  for (int i = 0; i < 8; ++i)
    futures.push_back(std::async(std::launch::async, [i] {
      Count acc = 0;
      for (int n = 0; n <= 40 + i; ++n)
        acc += catalan(n) + bell(n) + schroder(n) + binomial(n, n / 2);
      return acc;
    }));
  Count first = futures.front().get();
  for (std::size_t i = 1; i < futures.size(); ++i) (void)futures[i].get();
  CHECK(first > 0);
  CHECK(catalan(10) == 16796);
}
