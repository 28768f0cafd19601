#include "pav/wilf.hpp"

#include <stdexcept>

#include "pav/formulas.hpp"
#include "pav/oracle.hpp"
#include "pav/query.hpp"

namespace pav {

namespace {

std::vector<Pattern> parse_list(const std::vector<std::string>& texts) {
  std::vector<Pattern> out;
  out.reserve(texts.size());
  for (const auto& s : texts) out.push_back(parse_pattern(s));
  return out;
}

Count leading_count(int n, int r, const Pattern& p, int jobs) {
  if (n == 1) return avoids_all(Permutation({1}), std::span(&p, 1)) ? 1 : 0;
  if (p.is_classical() && p.length() == 3)
    return count_single_length3(n, Permutation({static_cast<Entry>(r)}), p).count;
  EnumerateOptions opt;
  opt.jobs = jobs;
  PrefixQuery q(n, Permutation({static_cast<Entry>(r)}), {p});
  return enumerate_avoiders(q, opt).count;
}

void put_cell(std::map<std::pair<int, std::string>, Count>& cells, int r,
              const std::string& pattern, Count value) {
  auto [it, inserted] = cells.emplace(std::make_pair(r, pattern), value);
  if (!inserted && it->second != value)
    throw std::logic_error("table2: coinciding rows disagree");
}

} // namespace

const std::vector<Pattern>& classical_length3_patterns() {
  static const std::vector<Pattern> patterns =
      parse_list({"123", "132", "213", "231", "312", "321"});
  return patterns;
}

const std::vector<Pattern>& vincular_length3_patterns() {
  static const std::vector<Pattern> patterns =
      parse_list({"2-13", "2-31", "13-2", "3-21", "3-12", "31-2", "1-23", "1-32", "12-3",
                  "21-3", "23-1", "32-1"});
  return patterns;
}

WilfClassification classify_r_wilf(int r, const std::vector<Pattern>& patterns, int n_max,
                                   int jobs) {
  if (r < 1) throw std::invalid_argument("classify_r_wilf: r must be positive");
  if (n_max < r) throw std::invalid_argument("classify_r_wilf: n_max must be at least r");
  if (patterns.empty()) throw std::invalid_argument("classify_r_wilf: no patterns given");

  WilfClassification out;
  out.r = r;
  out.n_min = r;
  out.n_max = n_max;
  out.patterns = patterns;
  out.evidence.resize(patterns.size());

  for (std::size_t i = 0; i < patterns.size(); ++i)
    for (int n = r; n <= n_max; ++n)
      out.evidence[i].push_back(leading_count(n, r, patterns[i], jobs));

  for (std::size_t i = 0; i < patterns.size(); ++i) {
    bool placed = false;
    for (auto& cls : out.classes) {
      if (out.evidence[static_cast<std::size_t>(cls.front())] == out.evidence[i]) {
        cls.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    }
    if (!placed) out.classes.push_back({static_cast<int>(i)});
  }
  return out;
}

std::map<std::pair<int, std::string>, Count> table2(int n) {
  if (n < 2) throw std::invalid_argument("table2: n must be at least 2");
  std::map<std::pair<int, std::string>, Count> cells;

  auto put_row = [&](int r, Count c123, Count c321, Count c132, Count c312, Count c213,
                     Count c231) {
    put_cell(cells, r, "123", c123);
    put_cell(cells, r, "321", c321);
    put_cell(cells, r, "132", c132);
    put_cell(cells, r, "312", c312);
    put_cell(cells, r, "213", c213);
    put_cell(cells, r, "231", c231);
  };

  put_row(n, catalan(n - 1), 1, catalan(n - 1), 1, catalan(n - 1), catalan(n - 1));
  put_row(n - 1, catalan(n - 1), n - 1, catalan(n - 1), n - 1, catalan(n - 2), catalan(n - 2));
  put_row(2, n - 1, catalan(n - 1), n - 1, catalan(n - 1), catalan(n - 2), catalan(n - 2));
  put_row(1, 1, catalan(n - 1), 1, catalan(n - 1), catalan(n - 1), catalan(n - 1));
  return cells;
}

std::map<std::pair<std::string, int>, Count> table3(int r) {
  if (r < 3) throw std::invalid_argument("table3: r must be at least 3");
  std::map<std::pair<std::string, int>, Count> cells;
  auto put = [&](const std::string& p, int n, Count v) { cells.emplace(std::make_pair(p, n), v); };

  put("2-13", r, catalan(r - 1));
  put("2-13", r + 1, catalan(r - 1));
  put("2-31", r, catalan(r - 1));
  put("2-31", r + 1, catalan(r - 1));
  put("13-2", r, catalan(r - 1));
  put("13-2", r + 1, catalan(r));
  put("3-21", r, 1);
  put("3-21", r + 1, Count(1) << (r - 1));
  put("3-12", r, 1);
  put("3-12", r + 1, Count(1) << (r - 1));
  put("31-2", r, 1);
  put("31-2", r + 1, r);
  put("1-23", r, bell(r - 1));
  put("1-23", r + 1, bell(r));
  put("1-23", r + 2, bell(r + 1) - bell(r - 1));
  put("1-32", r, bell(r - 1));
  put("1-32", r + 1, bell(r));
  put("1-32", r + 2, bell(r + 1) - bell(r - 1));
  put("12-3", r, bell(r - 1));
  put("12-3", r + 1, bell(r));
  put("12-3", r + 2, bell(r + 1) - bell(r));
  put("21-3", r, bell(r - 1));
  put("21-3", r + 1, bell(r - 1));
  put("23-1", r, bell(r - 1));
  put("23-1", r + 1, bell(r) - bell(r - 1));
  put("32-1", r, bell(r - 2));
  return cells;
}

} // namespace pav
