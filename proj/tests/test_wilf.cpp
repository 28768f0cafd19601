#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pav/oracle.hpp"
#include "pav/query.hpp"
#include "pav/sequences.hpp"
#include "pav/wilf.hpp"

using namespace pav;

namespace {

Pattern pat(const char* text) { return parse_pattern(text); }

std::set<std::set<std::string>> class_sets(const WilfClassification& cls) {
  std::set<std::set<std::string>> out;
  for (const auto& group : cls.classes) {
    std::set<std::string> names;
    for (int idx : group) names.insert(to_text(cls.patterns[static_cast<std::size_t>(idx)]));
    out.insert(names);
  }
  return out;
}

} // namespace

TEST_CASE("classical classes at r = 1: two classes") {
  auto cls = classify_r_wilf(1, classical_length3_patterns(), 8);
  CHECK(class_sets(cls) == std::set<std::set<std::string>>{
                               {"123", "132"}, {"321", "312", "213", "231"}});
}

TEST_CASE("classical classes at r in 2..5: three classes") {
  for (int r = 2; r <= 5; ++r) {
    auto cls = classify_r_wilf(r, classical_length3_patterns(), 8);
    CHECK(class_sets(cls) == std::set<std::set<std::string>>{
                                 {"213", "231"}, {"123", "132"}, {"321", "312"}});
  }
}

TEST_CASE("vincular classes at r = 5: nine classes") {
  auto cls = classify_r_wilf(5, vincular_length3_patterns(), 7);
  CHECK(cls.classes.size() == 9);
  auto sets = class_sets(cls);
  CHECK(sets.count({"2-13", "2-31"}) == 1);
  CHECK(sets.count({"1-23", "1-32"}) == 1);
  CHECK(sets.count({"3-21", "3-12"}) == 1);
  for (const char* lone : {"13-2", "31-2", "12-3", "21-3", "23-1", "32-1"})
    CHECK(sets.count({lone}) == 1);
}

TEST_CASE("the three provably equivalent vincular pairs agree at small r too") {
  for (int r = 1; r <= 4; ++r) {
    auto cls = classify_r_wilf(
        r, {pat("2-13"), pat("2-31"), pat("1-23"), pat("1-32"), pat("3-21"), pat("3-12")},
        std::max(r + 2, 7));
    auto sets = class_sets(cls);
    bool pair1 = false, pair2 = false, pair3 = false;
    for (const auto& group : sets) {
      if (group.count("2-13") && group.count("2-31")) pair1 = true;
      if (group.count("1-23") && group.count("1-32")) pair2 = true;
      if (group.count("3-21") && group.count("3-12")) pair3 = true;
    }
    CHECK(pair1);
    CHECK(pair2);
    CHECK(pair3);
  }
}

TEST_CASE("classification evidence matches direct counts") {
  auto cls = classify_r_wilf(3, classical_length3_patterns(), 6);
  REQUIRE(cls.evidence.size() == 6);
  for (std::size_t i = 0; i < cls.patterns.size(); ++i) {
    for (int n = 3; n <= 6; ++n) {
      PrefixQuery q(n, Permutation({3}), {cls.patterns[i]});
      CHECK(cls.evidence[i][static_cast<std::size_t>(n - 3)] == enumerate_avoiders(q).count);
    }
  }
  CHECK_THROWS_AS(classify_r_wilf(4, classical_length3_patterns(), 3), std::invalid_argument);
}

TEST_CASE("leading-term cell table, classical") {
  auto cells = table2(4);
  CHECK(cells.at({2, "321"}) == 5);
  CHECK(cells.at({3, "213"}) == 2);
  CHECK(cells.at({2, "123"}) == 3);
  CHECK(cells.at({4, "123"}) == catalan(3));
  CHECK(cells.at({1, "123"}) == 1);
  CHECK_THROWS_AS(table2(1), std::invalid_argument);
}

TEST_CASE("table2 equals the enumerator for 2 <= n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    auto cells = table2(n);
    for (const Pattern& p : classical_length3_patterns()) {
      auto row = leading_term_vector(n, {p});
      for (const auto& [key, value] : cells) {
        if (key.second != to_text(p)) continue;
        CHECK(row[static_cast<std::size_t>(key.first - 1)] == value);
      }
    }
  }
}

TEST_CASE("leading-term cell table, vincular") {
  auto cells = table3(5);
  CHECK(cells.at({"32-1", 5}) == bell(3));
  CHECK(cells.at({"3-21", 6}) == 16);
  CHECK(cells.at({"1-23", 7}) == bell(6) - bell(4));
  CHECK(cells.at({"1-23", 7}) == 188);
  CHECK(cells.count({"32-1", 6}) == 0);  // deliberately blank
  CHECK(cells.count({"2-13", 7}) == 0);
  CHECK_THROWS_AS(table3(2), std::invalid_argument);
}

TEST_CASE("table3 equals the enumerator for r in {3, 4}") {
  for (int r : {3, 4}) {
    for (const auto& [key, value] : table3(r)) {
      const auto& [name, n] = key;
      PrefixQuery q(n, Permutation({static_cast<Entry>(r)}), {pat(name.c_str())});
      CHECK(enumerate_avoiders(q).count == value);
    }
  }
}
