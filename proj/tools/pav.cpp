// pav: count, enumerate, and classify pattern-avoiding permutations with
// fixed prefixes, with every closed form checkable against the exhaustive
// enumerator. Counts serialize as decimal strings so consumers never
// truncate them.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pav/formulas.hpp"
#include "pav/oracle.hpp"
#include "pav/query.hpp"
#include "pav/sequences.hpp"
#include "pav/verify.hpp"
#include "pav/wilf.hpp"

namespace {

using nlohmann::json;

std::vector<pav::Pattern> parse_pattern_list(const std::string& text) {
  if (text == "classical3") return pav::classical_length3_patterns();
  if (text == "vincular3") return pav::vincular_length3_patterns();
  std::vector<pav::Pattern> out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(pav::parse_pattern(item));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("--patterns: ") + e.what());
  }
  if (out.empty()) throw std::invalid_argument("--patterns: no patterns given");
  return out;
}

pav::Permutation parse_prefix_flag(const std::string& text) {
  try {
    return pav::parse_permutation(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("--prefix: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("--out: cannot open '" + out_path + "'");
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
  }
}

std::string decimal(const pav::Count& c) { return c.str(); }

int run_count(int n, const std::string& prefix_text, const std::string& patterns_text,
              const std::string& out_path) {
  pav::Permutation prefix = parse_prefix_flag(prefix_text);
  std::vector<pav::Pattern> patterns = parse_pattern_list(patterns_text);
  std::sort(patterns.begin(), patterns.end(),
            [](const pav::Pattern& a, const pav::Pattern& b) { return to_text(a) < to_text(b); });
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());

  pav::CountOutcome outcome;
  bool classical3 = true;
  for (const auto& p : patterns) classical3 = classical3 && p.is_classical() && p.length() == 3;

  if (patterns.size() == 1 && classical3) {
    outcome = pav::count_single_length3(n, prefix, patterns[0]);
  } else if (patterns.size() == 2 && classical3 && !(patterns[0] == patterns[1])) {
    outcome = pav::count_pair_length3(n, prefix, patterns[0], patterns[1]);
  } else {
    std::vector<std::string> names;
    for (const auto& p : patterns) names.push_back(pav::to_text(p));
    std::sort(names.begin(), names.end());
    if (names == std::vector<std::string>{"3412", "3421"}) {
      outcome = pav::count_pair_3412_3421(n, prefix);
    } else {
      throw std::invalid_argument(
          "--patterns: no closed form for this set; use the enumerate subcommand");
    }
  }

  json doc;
  doc["count"] = decimal(outcome.count);
  doc["rule"] = outcome.rule;
  emit(doc.dump(), out_path);
  return 0;
}

int run_enumerate(int n, const std::string& prefix_text, const std::string& patterns_text,
                  bool witnesses, int cap, int jobs, const std::string& out_path) {
  pav::PrefixQuery query(n, parse_prefix_flag(prefix_text),
                         parse_pattern_list(patterns_text));
  pav::EnumerateOptions opt;
  opt.collect_witnesses = witnesses;
  opt.witness_cap = static_cast<std::size_t>(cap);
  opt.jobs = jobs;

  auto start = std::chrono::steady_clock::now();
  pav::OracleResult result = pav::enumerate_avoiders(query, opt);
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  json doc;
  doc["query"]["n"] = n;
  doc["query"]["prefix"] = query.prefix().entries();
  std::vector<std::string> names;
  for (const auto& p : query.patterns()) names.push_back(pav::to_text(p));
  doc["query"]["patterns"] = names;
  doc["count"] = decimal(result.count);
  if (witnesses) {
    std::vector<std::string> ws;
    for (const auto& w : result.witnesses) ws.push_back(pav::to_text(w));
    doc["witnesses"] = ws;
  }
  doc["elapsed_ms"] = elapsed.count();
  emit(doc.dump(), out_path);
  return 0;
}

int run_verify(const std::string& suite, int n_max, int prefix_max, int jobs,
               const std::string& out_path) {
  pav::VerifyOptions opt;
  opt.n_max = n_max;
  opt.prefix_max = prefix_max;
  opt.jobs = jobs;
  auto reports = pav::run_suites({suite}, opt);

  std::ostringstream os;
  long long mismatches = 0;
  for (const auto& r : reports) {
    os << pav::format_report(r);
    mismatches += static_cast<long long>(r.mismatches.size());
  }
  os << "TOTAL suites=" << reports.size() << " mismatches=" << mismatches << ' '
     << (mismatches == 0 ? "PASS" : "FAIL") << '\n';
  emit(os.str(), out_path);
  return mismatches == 0 ? 0 : 1;
}

int run_classify(int r, const std::string& patterns_text, int n_max, int jobs,
                 const std::string& out_path) {
  auto patterns = parse_pattern_list(patterns_text);
  pav::WilfClassification cls = pav::classify_r_wilf(r, patterns, n_max, jobs);

  json doc;
  doc["r"] = cls.r;
  doc["n_min"] = cls.n_min;
  doc["n_max"] = cls.n_max;
  doc["scope"] = "empirical over " + std::to_string(cls.n_min) + " <= n <= " +
                 std::to_string(cls.n_max) + "; equality of count vectors, not a proof";
  doc["classes"] = json::array();
  for (const auto& cls_indices : cls.classes) {
    json entry;
    std::vector<std::string> names;
    for (int idx : cls_indices) names.push_back(pav::to_text(cls.patterns[static_cast<std::size_t>(idx)]));
    entry["patterns"] = names;
    std::vector<std::string> counts;
    for (const auto& c : cls.evidence[static_cast<std::size_t>(cls_indices.front())])
      counts.push_back(decimal(c));
    entry["evidence"] = counts;
    doc["classes"].push_back(entry);
  }
  emit(doc.dump(), out_path);
  return 0;
}

int run_seq(const std::string& name, int terms, const std::string& format,
            const std::string& out_path) {
  if (terms < 1) throw std::invalid_argument("--terms: must be positive");
  pav::Count (*fn)(int) = nullptr;
  if (name == "catalan") fn = pav::catalan;
  else if (name == "bell") fn = pav::bell;
  else if (name == "schroder") fn = pav::schroder;
  else throw std::invalid_argument("--name: unknown sequence '" + name + "'");

  std::ostringstream os;
  if (format == "csv") {
    for (int i = 0; i < terms; ++i) {
      if (i) os << ',';
      os << fn(i);
    }
    os << '\n';
  } else {
    for (int i = 0; i < terms; ++i) {
      json line;
      line["n"] = i;
      line["value"] = decimal(fn(i));
      os << line.dump() << '\n';
    }
  }
  emit(os.str(), out_path);
  return 0;
}

int run_tables(int which, int n, int r, int n_max, bool oracle_check, int jobs,
               const std::string& out_path) {
  std::ostringstream os;
  int failures = 0;

  if (which == 1) {
    os << "n,catalan,bell,schroder\n";
    for (int i = 0; i <= n_max; ++i)
      os << i << ',' << pav::catalan(i) << ',' << pav::bell(i) << ',' << pav::schroder(i) << '\n';
    if (oracle_check) {
      // The three sequences against their avoidance-class definitions.
      auto p123 = pav::parse_pattern("123");
      auto p1_23 = pav::parse_pattern("1-23");
      std::vector<pav::Pattern> schroder_pair = {pav::parse_pattern("3412"),
                                                 pav::parse_pattern("3421")};
      for (int m = 1; m <= std::min(n_max, 7); ++m) {
        pav::EnumerateOptions eopt;
        eopt.jobs = jobs;
        if (pav::enumerate_avoiders(pav::PrefixQuery(m, {}, {p123}), eopt).count != pav::catalan(m))
          ++failures;
        if (pav::enumerate_avoiders(pav::PrefixQuery(m, {}, {p1_23}), eopt).count != pav::bell(m))
          ++failures;
        if (pav::enumerate_avoiders(pav::PrefixQuery(m, {}, schroder_pair), eopt).count !=
            pav::schroder(m - 1))
          ++failures;
      }
    }
  } else if (which == 2) {
    auto cells = pav::table2(n);
    std::vector<int> rows = {n, n - 1, 2, 1};
    std::sort(rows.begin(), rows.end(), std::greater<>());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    static const char* kCols[] = {"123", "321", "132", "312", "213", "231"};
    os << "r,123,321,132,312,213,231\n";
    for (int row : rows) {
      os << row;
      for (const char* col : kCols) os << ',' << cells.at({row, col});
      os << '\n';
    }
    if (oracle_check) {
      for (const char* col : kCols) {
        auto vec = pav::leading_term_vector(n, {pav::parse_pattern(col)}, jobs);
        for (int row : rows)
          if (vec[static_cast<std::size_t>(row - 1)] != cells.at({row, col})) ++failures;
      }
    }
  } else if (which == 3) {
    auto cells = pav::table3(r);
    os << "pattern,n=r,n=r+1,n=r+2\n";
    for (const auto& p : pav::vincular_length3_patterns()) {
      os << pav::to_text(p);
      for (int m = r; m <= r + 2; ++m) {
        os << ',';
        auto it = cells.find({pav::to_text(p), m});
        if (it != cells.end()) os << it->second;
      }
      os << '\n';
    }
    if (oracle_check) {
      pav::EnumerateOptions eopt;
      eopt.jobs = jobs;
      for (const auto& [key, value] : cells) {
        const auto& [name, m] = key;
        pav::PrefixQuery q(m, pav::Permutation({static_cast<pav::Entry>(r)}),
                           {pav::parse_pattern(name)});
        if (pav::enumerate_avoiders(q, eopt).count != value) ++failures;
      }
    }
  } else {
    throw std::invalid_argument("--table: must be 1, 2, or 3");
  }

  emit(os.str(), out_path);
  if (oracle_check) {
    if (failures == 0) {
      std::cerr << "oracle-check: ok\n";
    } else {
      std::cerr << "oracle-check: " << failures << " cell(s) disagree\n";
      return 1;
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern-avoiding permutation counting by fixed prefixes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  int n = 0, cap = 1000, jobs = 0, terms = 11, table_no = 0, r = 5, n_max = 7, prefix_max = 2;
  std::string prefix_text, patterns_text, suite = "all", seq_name, format = "csv";
  bool witnesses = false, oracle_check = false;

  auto* count = app.add_subcommand("count", "closed-form count with its theorem-branch rule");
  count->add_option("--n", n, "size of the ambient permutation")->required();
  count->add_option("--prefix", prefix_text, "fixed prefix, e.g. 3,1,2 (may be empty)");
  count->add_option("--patterns", patterns_text, "pattern set, e.g. 231 or 3412,3421")->required();

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive count (ground truth)");
  enumerate->add_option("--n", n, "size of the ambient permutation")->required();
  enumerate->add_option("--prefix", prefix_text, "fixed prefix (may be empty)");
  enumerate->add_option("--patterns", patterns_text, "pattern set; vincular via dashes, e.g. 1-32")
      ->required();
  enumerate->add_flag("--witnesses", witnesses, "also list the avoiders found");
  enumerate->add_option("--cap", cap, "witness list cap (count is never truncated)")
      ->default_val(1000);
  enumerate->add_option("--jobs", jobs, "worker threads; 0 = PAV_JOBS or hardware")->default_val(0);

  auto* verify = app.add_subcommand("verify", "closed forms against the enumerator");
  verify->add_option("--suite", suite, "identities|singles|pairs|schroder|tables|all")
      ->default_val("all");
  verify->add_option("--n-max", n_max, "largest n swept")->default_val(7);
  verify->add_option("--prefix-max", prefix_max, "largest prefix length swept")->default_val(2);
  verify->add_option("--jobs", jobs, "worker threads; 0 = PAV_JOBS or hardware")->default_val(0);

  auto* classify = app.add_subcommand("classify", "empirical r-Wilf classes by count vectors");
  classify->add_option("--r", r, "fixed leading term")->required();
  classify
      ->add_option("--patterns", patterns_text,
                   "pattern list, or the shorthands classical3 / vincular3")
      ->required();
  classify->add_option("--n-max", n_max, "largest n in the evidence range")->default_val(8);
  classify->add_option("--jobs", jobs, "worker threads")->default_val(0);

  auto* seq = app.add_subcommand("seq", "first N terms of a sequence");
  seq->add_option("--name", seq_name, "catalan|bell|schroder")->required();
  seq->add_option("--terms", terms, "number of terms, starting at n=0")->default_val(11);
  seq->add_option("--format", format, "csv|json")->default_val("csv");

  auto* tables = app.add_subcommand("tables", "regenerate the reference tables as CSV");
  tables->add_option("--table", table_no, "1 (sequences), 2 (classical), 3 (vincular)")->required();
  tables->add_option("--n", n, "ambient size for table 2")->default_val(8);
  tables->add_option("--r", r, "leading term for table 3")->default_val(5);
  tables->add_option("--n-max", n_max, "last row for table 1")->default_val(10);
  tables->add_flag("--oracle-check", oracle_check, "verify each emitted cell by enumeration");
  tables->add_option("--jobs", jobs, "worker threads")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count) return run_count(n, prefix_text, patterns_text, out_path);
    if (*enumerate)
      return run_enumerate(n, prefix_text, patterns_text, witnesses, cap, jobs, out_path);
    if (*verify) return run_verify(suite, n_max, prefix_max, pav::resolve_jobs(jobs), out_path);
    if (*classify)
      return run_classify(r, patterns_text, n_max, pav::resolve_jobs(jobs), out_path);
    if (*seq) return run_seq(seq_name, terms, format, out_path);
    if (*tables)
      return run_tables(table_no, n, r, n_max, oracle_check, pav::resolve_jobs(jobs), out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
