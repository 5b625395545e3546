#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// library's matching or generation code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline Word standardize(const Word& seq) {
  Word sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  Word out;
  for (int v : seq) out.push_back(int(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return out;
}

// Tries every subset (classical) or window (consecutive) of the right size.
inline bool contains(const Word& seq, const Word& pat, bool consecutive) {
  const std::size_t n = seq.size(), k = pat.size();
  if (k > n) return false;
  if (consecutive) {
    for (std::size_t i = 0; i + k <= n; ++i)
      if (standardize(Word(seq.begin() + long(i), seq.begin() + long(i + k))) == pat) return true;
    return false;
  }
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::size_t(__builtin_popcount(mask)) != k) continue;
    Word sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(seq[i]);
    if (standardize(sub) == pat) return true;
  }
  return false;
}

struct Pat {
  Word word;
  bool consecutive = false;
};

// parents[i-1] is the parent of i; every vector in {0..n}^n is tried and the
// cyclic ones dropped.
inline std::vector<Word> all_forests(int n) {
  std::vector<Word> out;
  Word p(std::size_t(n), 0);
  while (true) {
    bool acyclic = true;
    for (int v = 1; v <= n && acyclic; ++v) {
      int u = v;
      for (int steps = 0; u != 0; ++steps) {
        if (steps > n) {
          acyclic = false;
          break;
        }
        u = p[std::size_t(u - 1)];
      }
    }
    if (acyclic) out.push_back(p);
    int i = n - 1;
    while (i >= 0 && p[std::size_t(i)] == n) p[std::size_t(i--)] = 0;
    if (i < 0) break;
    ++p[std::size_t(i)];
  }
  return out;
}

inline Word path_to(const Word& parents, int v) {
  Word path;
  for (int u = v; u != 0; u = parents[std::size_t(u - 1)]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

inline bool avoids(const Word& parents, const std::vector<Pat>& pats) {
  for (int v = 1; v <= int(parents.size()); ++v) {
    const Word path = path_to(parents, v);
    for (const auto& p : pats)
      if (contains(path, p.word, p.consecutive)) return false;
  }
  return true;
}

inline std::vector<int> child_counts(const Word& parents) {
  std::vector<int> c(parents.size() + 1, 0);
  for (int p : parents) ++c[std::size_t(p)];
  return c;
}

inline bool binary(const Word& parents) {
  const auto c = child_counts(parents);
  return std::all_of(c.begin(), c.end(), [](int x) { return x <= 2; });
}

// Plane orderings of a fixed unordered forest: product of child-count factorials.
inline std::uint64_t orderings(const Word& parents) {
  std::uint64_t r = 1;
  for (int c : child_counts(parents))
    for (int i = 2; i <= c; ++i) r *= std::uint64_t(i);
  return r;
}

enum class Fam { Unordered, Binary, Ordered };

inline std::uint64_t count(int n, Fam fam, const std::vector<Pat>& pats) {
  std::uint64_t total = 0;
  for (const auto& p : all_forests(n)) {
    if (fam == Fam::Binary && !binary(p)) continue;
    if (!avoids(p, pats)) continue;
    total += fam == Fam::Ordered ? orderings(p) : 1;
  }
  return total;
}

}  // namespace oracle
