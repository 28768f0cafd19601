#include "pav/oracle.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace pav {

namespace {

struct BranchResult {
  std::uint64_t count = 0;
  std::vector<Permutation> witnesses;
};

struct Search {
  int n = 0;
  std::span<const Pattern> patterns;
  bool naive = false;
  bool collect = false;
  std::size_t cap = 0;

  std::vector<Entry> word;
  std::vector<char> used;  // indexed by value, 1..n

  bool pruned_at(int level) const {
    for (const Pattern& p : patterns)
      if (has_match_ending_at({word.data(), static_cast<std::size_t>(level + 1)}, p, level))
        return true;
    return false;
  }

  void dfs(int level, BranchResult& out) {
    if (level == n) {
      if (naive && !avoids_all(Permutation(word), patterns)) return;
      ++out.count;
      if (collect && out.witnesses.size() < cap) out.witnesses.emplace_back(word);
      return;
    }
    for (Entry v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      word[static_cast<std::size_t>(level)] = v;
      used[static_cast<std::size_t>(v)] = 1;
      if (naive || !pruned_at(level)) dfs(level + 1, out);
      used[static_cast<std::size_t>(v)] = 0;
    }
  }
};

Search make_search(const PrefixQuery& q, const EnumerateOptions& opt) {
  Search s;
  s.n = q.n();
  s.patterns = q.patterns();
  s.naive = opt.force_naive;
  s.collect = opt.collect_witnesses;
  s.cap = opt.witness_cap;
  s.word.assign(static_cast<std::size_t>(q.n()), 0);
  s.used.assign(static_cast<std::size_t>(q.n()) + 1, 0);
  for (int i = 0; i < q.prefix_length(); ++i) {
    s.word[static_cast<std::size_t>(i)] = q.prefix()[i];
    s.used[static_cast<std::size_t>(q.prefix()[i])] = 1;
  }
  return s;
}

} // namespace

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PAV_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

OracleResult enumerate_avoiders(const PrefixQuery& query, const EnumerateOptions& options) {
  const int n = query.n();
  const int t = query.prefix_length();
  const int jobs = resolve_jobs(options.jobs);

  // A prefix that already contains a pattern kills every completion.
  if (!options.force_naive) {
    for (const Pattern& p : query.patterns())
      if (has_match(query.prefix().view(), p)) return {};
  }

  std::vector<Entry> branches;
  for (Entry v = 1; v <= n; ++v)
    if (!query.prefix().contains_value(v)) branches.push_back(v);

  std::vector<BranchResult> partial(branches.size());
  auto run_branch = [&](std::size_t b) {
    Search s = make_search(query, options);
    s.word[static_cast<std::size_t>(t)] = branches[b];
    s.used[static_cast<std::size_t>(branches[b])] = 1;
    if (s.naive || !s.pruned_at(t)) s.dfs(t + 1, partial[b]);
  };

  if (jobs <= 1 || branches.size() <= 1) {
    for (std::size_t b = 0; b < branches.size(); ++b) run_branch(b);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t b = next.fetch_add(1); b < branches.size(); b = next.fetch_add(1))
        run_branch(b);
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<int>(jobs, static_cast<int>(branches.size()));
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  OracleResult result;
  std::uint64_t total = 0;
  for (auto& part : partial) {
    total += part.count;
    if (options.collect_witnesses)
      for (auto& w : part.witnesses)
        if (result.witnesses.size() < options.witness_cap)
          result.witnesses.push_back(std::move(w));
  }
  result.count = total;
  return result;
}

std::vector<Count> leading_term_vector(int n, const std::vector<Pattern>& patterns, int jobs) {
  if (n < 1) throw std::invalid_argument("leading_term_vector: n must be positive");
  std::vector<Count> row;
  row.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    // S_{1,1} is the single word (1); a prefix of length 1 is not a proper
    // prefix here, so the query type cannot express it.
    row.push_back(avoids_all(Permutation({1}), patterns) ? 1 : 0);
    return row;
  }
  EnumerateOptions opt;
  opt.jobs = jobs;
  for (Entry r = 1; r <= n; ++r) {
    PrefixQuery q(n, Permutation({r}), patterns);
    row.push_back(enumerate_avoiders(q, opt).count);
  }
  return row;
}

} // namespace pav
