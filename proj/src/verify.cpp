#include "pav/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pav/formulas.hpp"
#include "pav/oracle.hpp"
#include "pav/query.hpp"
#include "pav/wilf.hpp"

namespace pav {

namespace {

struct QueryCheck {
  int n = 0;
  Permutation prefix;
  std::vector<Pattern> patterns;
  CountOutcome formula;
  Count oracle;
  bool ok = false;
};

std::string describe(const QueryCheck& c) {
  std::string pats;
  for (std::size_t i = 0; i < c.patterns.size(); ++i) {
    if (i) pats += ',';
    pats += to_text(c.patterns[i]);
  }
  std::ostringstream os;
  os << "n=" << c.n << " prefix=" << (c.prefix.empty() ? "-" : to_text(c.prefix))
     << " patterns=" << pats << " formula=" << c.formula.count << " (" << c.formula.rule
     << ") oracle=" << c.oracle;
  return os.str();
}

// All ordered prefixes over [n] of length 0..t_max.
void for_each_prefix(int n, int t_max, const std::function<void(const Permutation&)>& fn) {
  std::vector<Entry> current;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int)> rec = [&](int depth) {
    fn(Permutation(current));
    if (depth == t_max) return;
    for (Entry v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      current.push_back(v);
      rec(depth + 1);
      current.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(0);
}

void run_indexed(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  const std::size_t nthreads = std::min(static_cast<std::size_t>(jobs), count);
  for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Shared driver: evaluate formula and oracle for every (n, prefix) in range
// crossed with each pattern set, then fold results deterministically.
SweepReport run_query_sweep(
    const std::string& suite, const VerifyOptions& opt,
    const std::vector<std::vector<Pattern>>& pattern_sets,
    const std::function<CountOutcome(int, const Permutation&, const std::vector<Pattern>&)>&
        formula,
    int hard_n_cap = 0) {
  SweepReport report;
  report.suite = suite;

  const int n_cap = hard_n_cap > 0 ? std::min(opt.n_max, hard_n_cap) : opt.n_max;
  std::vector<std::pair<int, Permutation>> scopes;
  for (int n = 1; n <= n_cap; ++n)
    for_each_prefix(n, std::min(opt.prefix_max, n - 1),
                    [&](const Permutation& p) { scopes.emplace_back(n, p); });

  std::vector<std::vector<QueryCheck>> results(scopes.size());
  run_indexed(scopes.size(), opt.jobs, [&](std::size_t i) {
    const auto& [n, prefix] = scopes[i];
    for (const auto& pats : pattern_sets) {
      QueryCheck check;
      check.n = n;
      check.prefix = prefix;
      check.patterns = pats;
      check.formula = formula(n, prefix, pats);
      check.oracle = enumerate_avoiders(PrefixQuery(n, prefix, pats)).count;
      check.ok = (check.formula.count == check.oracle);
      results[i].push_back(std::move(check));
    }
  });

  for (const auto& group : results)
    for (const auto& check : group) {
      ++report.checks;
      ++report.rule_hits[check.formula.rule];
      if (!check.ok) report.mismatches.push_back(describe(check));
    }
  return report;
}

void expect(SweepReport& report, bool condition, const std::string& label) {
  ++report.checks;
  if (!condition) report.mismatches.push_back(label);
}

} // namespace

std::string base_rule(const std::string& rule) {
  constexpr std::string_view wrapper = "complement:";
  if (rule.starts_with(wrapper)) return rule.substr(wrapper.size());
  return rule;
}

SweepReport sweep_singles(const VerifyOptions& opt) {
  std::vector<std::vector<Pattern>> sets;
  for (const Pattern& p : classical_length3_patterns()) sets.push_back({p});
  return run_query_sweep("singles", opt, sets,
                         [](int n, const Permutation& prefix, const std::vector<Pattern>& pats) {
                           return count_single_length3(n, prefix, pats.front());
                         });
}

SweepReport sweep_pairs(const VerifyOptions& opt) {
  const auto& base = classical_length3_patterns();
  std::vector<std::vector<Pattern>> sets;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) sets.push_back({base[i], base[j]});

  SweepReport report =
      run_query_sweep("pairs", opt, sets,
                      [](int n, const Permutation& prefix, const std::vector<Pattern>& pats) {
                        return count_pair_length3(n, prefix, pats[0], pats[1]);
                      });

  // Once n reaches 5 every word has a monotone triple, so {123, 321} vanishes.
  Pattern p123 = Pattern::classical(Permutation({1, 2, 3}));
  Pattern p321 = Pattern::classical(Permutation({3, 2, 1}));
  for (int n = 5; n <= opt.n_max; ++n) {
    std::vector<std::pair<int, Permutation>> scopes;
    for_each_prefix(n, std::min(opt.prefix_max, n - 1),
                    [&](const Permutation& p) { scopes.emplace_back(n, p); });
    for (const auto& [m, prefix] : scopes)
      expect(report, count_pair_length3(m, prefix, p123, p321).count == 0,
             "pair {123,321} nonzero at n=" + std::to_string(m) + " prefix=" + to_text(prefix));
  }
  return report;
}

SweepReport sweep_schroder(const VerifyOptions& opt) {
  std::vector<std::vector<Pattern>> sets = {
      {Pattern::classical(Permutation({3, 4, 1, 2})), Pattern::classical(Permutation({3, 4, 2, 1}))}};
  SweepReport report =
      run_query_sweep("schroder", opt, sets,
                      [](int n, const Permutation& prefix, const std::vector<Pattern>&) {
                        return count_pair_3412_3421(n, prefix);
                      },
                      /*hard_n_cap=*/7);

  // Unconstrained totals against the sequence.
  for (int n = 1; n <= std::min(opt.n_max, 7); ++n) {
    Count total = enumerate_avoiders(PrefixQuery(n, Permutation{}, sets[0])).count;
    expect(report, total == schroder(n - 1),
           "schroder total mismatch at n=" + std::to_string(n));
  }
  // Leading-term row sums reproduce the recurrence through formulas alone.
  for (int n = 2; n <= 12; ++n) {
    Count sum = 0;
    for (Entry r = 1; r <= n; ++r) sum += count_pair_3412_3421(n, Permutation({r})).count;
    expect(report, sum == schroder(n - 1),
           "schroder row-sum mismatch at n=" + std::to_string(n));
  }
  return report;
}

SweepReport sweep_tables(const VerifyOptions& opt) {
  SweepReport report;
  report.suite = "tables";

  // Closed-form leading-term cells against the enumerator.
  for (int n = 2; n <= std::min(opt.n_max, 8); ++n) {
    for (const Pattern& p : classical_length3_patterns()) {
      std::vector<Count> row = leading_term_vector(n, {p}, opt.jobs);
      for (const auto& [key, value] : table2(n)) {
        const auto& [r, name] = key;
        if (name != to_text(p)) continue;
        expect(report, row[static_cast<std::size_t>(r - 1)] == value,
               "table2 cell mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                   " pattern=" + name);
      }
    }
  }

  // Vincular leading-term cells against the enumerator.
  for (int r = 3; r <= 6; ++r) {
    for (const auto& [key, value] : table3(r)) {
      const auto& [name, n] = key;
      if (n > std::min(opt.n_max, 8)) continue;
      PrefixQuery q(n, Permutation({static_cast<Entry>(r)}), {parse_pattern(name)});
      EnumerateOptions eopt;
      eopt.jobs = opt.jobs;
      expect(report, enumerate_avoiders(q, eopt).count == value,
             "table3 cell mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n) +
                 " pattern=" + name);
    }
  }

  // Class structure for classical patterns: two classes at r = 1, three after.
  for (int r = 1; r <= std::min(5, opt.n_max); ++r) {
    auto cls = classify_r_wilf(r, classical_length3_patterns(), std::max(8, r), opt.jobs);
    expect(report, cls.classes.size() == (r == 1 ? 2u : 3u),
           "classical class count at r=" + std::to_string(r));
  }
  return report;
}

SweepReport sweep_identities(const VerifyOptions&) {
  SweepReport report;
  report.suite = "identities";

  static const long long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  static const long long kBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  static const long long kSchroder[] = {1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718};
  for (int n = 0; n <= 10; ++n) {
    expect(report, catalan(n) == kCatalan[n], "catalan golden at n=" + std::to_string(n));
    expect(report, bell(n) == kBell[n], "bell golden at n=" + std::to_string(n));
    expect(report, schroder(n) == kSchroder[n], "schroder golden at n=" + std::to_string(n));
  }

  for (int n = 2; n <= 30; ++n)
    for (int r = 2; r <= n; ++r) {
      Count sum = 0;
      for (int i = 1; i <= r - 1; ++i)
        sum += binomial(i + n - r, i) * simion_schmidt_a(r - 1, i);
      expect(report, sum == ballot(n, r),
             "first-ascent sum != ballot at n=" + std::to_string(n) + " r=" + std::to_string(r));

      Count vandermonde = 0;
      for (int i = 1; i <= r - 1; ++i)
        vandermonde += binomial(i + n - r, i - 1) * binomial(2 * r - i - 3, r - 2);
      expect(report, vandermonde == binomial(n + r - 2, r - 2),
             "vandermonde variant at n=" + std::to_string(n) + " r=" + std::to_string(r));
    }

  for (int n = 4; n <= 25; ++n)
    expect(report, catalan(n) < bell(n), "catalan < bell at n=" + std::to_string(n));
  for (int n = 3; n <= 25; ++n)
    expect(report, bell(n) > 2 * bell(n - 1), "bell growth at n=" + std::to_string(n));

  for (int n = 1; n <= 20; ++n) {
    Count sum = 0;
    for (int r = 1; r <= n; ++r) sum += catalan(n - r) * catalan(r - 1);
    expect(report, sum == catalan(n), "catalan recurrence at n=" + std::to_string(n));
  }
  return report;
}

std::vector<SweepReport> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& options) {
  std::vector<std::string> order = names;
  if (order.size() == 1 && order.front() == "all")
    order = {"identities", "singles", "pairs", "schroder", "tables"};

  std::vector<SweepReport> reports;
  for (const auto& name : order) {
    if (name == "singles") reports.push_back(sweep_singles(options));
    else if (name == "pairs") reports.push_back(sweep_pairs(options));
    else if (name == "schroder") reports.push_back(sweep_schroder(options));
    else if (name == "tables") reports.push_back(sweep_tables(options));
    else if (name == "identities") reports.push_back(sweep_identities(options));
    else throw std::invalid_argument("verify: unknown suite '" + name + "'");
  }
  return reports;
}

std::string format_report(const SweepReport& report) {
  std::ostringstream os;
  os << "suite=" << report.suite << " checks=" << report.checks
     << " mismatches=" << report.mismatches.size() << " result="
     << (report.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& [rule, hits] : report.rule_hits)
    os << "  rule " << rule << " hits=" << hits << '\n';
  for (const auto& m : report.mismatches) os << "  MISMATCH " << m << '\n';
  return os.str();
}

} // namespace pav
