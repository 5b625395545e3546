#include <mutex>
#include <shared_mutex>
#include <vector>

#include "forestpat/oracles.hpp"

namespace forestpat {

namespace {

// Lazily grown triangle of exact values, safe for concurrent readers.
class Triangle {
 public:
  using Rule = BigInt (*)(const std::vector<std::vector<BigInt>>&, int, int);

  explicit Triangle(Rule rule) : rule_(rule) {}

  BigInt at(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < rows_.size()) return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      const int m = static_cast<int>(rows_.size());
      std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
      for (int j = 0; j <= m; ++j) row[static_cast<std::size_t>(j)] = rule_(rows_, m, j);
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  Rule rule_;
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt get(const std::vector<std::vector<BigInt>>& rows, int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Triangle& pascal() {
  static Triangle t([](const auto& rows, int n, int k) -> BigInt {
    if (k == 0 || k == n) return 1;
    return get(rows, n - 1, k - 1) + get(rows, n - 1, k);
  });
  return t;
}

Triangle& first_kind() {
  static Triangle t([](const auto& rows, int n, int k) -> BigInt {
    if (n == 0) return k == 0 ? 1 : 0;
    return get(rows, n - 1, k - 1) + BigInt(n - 1) * get(rows, n - 1, k);
  });
  return t;
}

Triangle& second_kind() {
  static Triangle t([](const auto& rows, int n, int k) -> BigInt {
    if (n == 0) return k == 0 ? 1 : 0;
    return get(rows, n - 1, k - 1) + BigInt(k) * get(rows, n - 1, k);
  });
  return t;
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) return 0;
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binom(int n, int k) { return pascal().at(n, k); }
BigInt stirling1(int n, int k) { return first_kind().at(n, k); }
BigInt stirling2(int n, int k) { return second_kind().at(n, k); }

BigInt bell(int n) {
  if (n < 0) return 0;
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += stirling2(n, k);
  return sum;
}

BigInt catalan(int n) {
  if (n < 0) return 0;
  return binom(2 * n, n) / (n + 1);
}

}  // namespace forestpat
