#include <algorithm>
#include <atomic>
#include <thread>

#include "forestpat/error.hpp"
#include "forestpat/generators.hpp"
#include "forestpat/oracles.hpp"

namespace forestpat {

namespace {

void check_budget(int n, Family family, const CountOptions& options) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  if (options.ignore_budget) return;
  const int budget = options.budget.value_or(default_budget(family));
  if (n > budget)
    throw Error(ErrorKind::BudgetExceeded, "n=" + std::to_string(n) + " exceeds the budget " +
                                               std::to_string(budget) + " for this family");
}

bool accepts(const Forest& f, const PatternSet& patterns, PathCheck check) {
  return check == PathCheck::LeafPaths ? avoids(f, patterns) : avoids_all_vertices(f, patterns);
}

// Runs `work(prefix)` over every stream partition and returns the results in
// partition order, so any reduction over them is independent of scheduling.
template <typename Result, typename Work>
std::vector<Result> fan_out(int n, Family family, unsigned jobs, Work work) {
  const auto prefixes = stream_partitions(n, family);
  std::vector<Result> results(prefixes.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(prefixes.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size();) results[i] = work(prefixes[i]);
  };
  if (jobs <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  pool.clear();
  return results;
}

int statistic_of(const Forest& f, Statistic statistic) {
  if (statistic == Statistic::TreeCount) {
    int roots = 0;
    for (Label v : f.ground()) roots += f.parent(v) == Forest::kRoot;
    return roots;
  }
  return static_cast<int>(top_down_maxima(f).size());
}

}  // namespace

int default_budget(Family family) {
  switch (family) {
    case Family::Unordered: return 8;
    case Family::UnorderedBinary: return 9;
    case Family::Ordered: return 6;
  }
  return 0;
}

BigInt brute_count(int n, Family family, const PatternSet& patterns, const CountOptions& options) {
  check_budget(n, family, options);
  const auto parts = fan_out<std::uint64_t>(n, family, options.jobs, [&](const std::vector<Label>& prefix) {
    ForestStream s(n, family, prefix);
    std::uint64_t count = 0;
    while (s.next()) count += accepts(s.current(), patterns, options.check);
    return count;
  });
  BigInt total = 0;
  for (auto c : parts) total += c;
  return total;
}

std::map<int, BigInt> refined_distribution(int n, Family family, const PatternSet& patterns,
                                           Statistic statistic, const CountOptions& options) {
  check_budget(n, family, options);
  using Histogram = std::vector<std::uint64_t>;
  const auto parts = fan_out<Histogram>(n, family, options.jobs, [&](const std::vector<Label>& prefix) {
    ForestStream s(n, family, prefix);
    Histogram h(static_cast<std::size_t>(n) + 1, 0);
    while (s.next())
      if (accepts(s.current(), patterns, options.check))
        ++h[static_cast<std::size_t>(statistic_of(s.current(), statistic))];
    return h;
  });
  std::map<int, BigInt> out;
  for (const auto& h : parts)
    for (std::size_t v = 0; v < h.size(); ++v)
      if (h[v] != 0) out[static_cast<int>(v)] += h[v];
  return out;
}

BigInt refined_count(int n, Family family, const PatternSet& patterns, Statistic statistic, int value,
                     const CountOptions& options) {
  const auto dist = refined_distribution(n, family, patterns, statistic, options);
  const auto it = dist.find(value);
  return it == dist.end() ? BigInt(0) : it->second;
}

}  // namespace forestpat
