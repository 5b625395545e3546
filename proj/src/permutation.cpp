#include "forestpat/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "forestpat/error.hpp"

namespace forestpat {

Permutation::Permutation(std::vector<Label> word) : ground_(word), word_(std::move(word)) {
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
    throw Error(ErrorKind::InvalidSequence, "duplicate entry in permutation word");
  if (!ground_.empty() && ground_.front() <= 0)
    throw Error(ErrorKind::InvalidSequence, "permutation entries must be positive");
}

Permutation Permutation::identity(int n) {
  std::vector<Label> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

bool Permutation::is_standard() const noexcept {
  return ground_.empty() || ground_.back() == static_cast<Label>(ground_.size());
}

int Permutation::position_of(Label value) const noexcept {
  auto it = std::find(word_.begin(), word_.end(), value);
  return it == word_.end() ? -1 : static_cast<int>(it - word_.begin());
}

int rank_in(std::span<const Label> sorted_ground, Label value) noexcept {
  auto it = std::lower_bound(sorted_ground.begin(), sorted_ground.end(), value);
  if (it == sorted_ground.end() || *it != value) return -1;
  return static_cast<int>(it - sorted_ground.begin());
}

Permutation standardize(std::span<const Label> seq) {
  std::vector<Label> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidSequence, "cannot standardize a sequence with repeated entries");
  std::vector<Label> word;
  word.reserve(seq.size());
  for (Label x : seq) word.push_back(rank_in(sorted, x) + 1);
  return Permutation(std::move(word));
}

Permutation reverse(const Permutation& p) {
  std::vector<Label> w(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
  const auto& g = p.ground();
  const int n = static_cast<int>(g.size());
  std::vector<Label> w;
  w.reserve(p.size());
  for (Label x : p.word()) w.push_back(g[static_cast<std::size_t>(n - 1 - rank_in(g, x))]);
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
  const auto& g = p.ground();
  std::vector<Label> w(p.size());
  // Standardized: value v at position i  =>  inverse has value i at position v.
  for (std::size_t i = 0; i < p.size(); ++i)
    w[static_cast<std::size_t>(rank_in(g, p[i]))] = g[i];
  return Permutation(std::move(w));
}

PermStats stats(const Permutation& p) {
  PermStats s;
  const auto& w = p.word();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) s.descents.push_back(static_cast<int>(i + 1));
    else s.ascents.push_back(static_cast<int>(i + 1));
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (s.lr_minima.empty() || w[i] < s.lr_minima.back()) s.lr_minima.push_back(w[i]);
    if (s.lr_maxima.empty() || w[i] > s.lr_maxima.back()) s.lr_maxima.push_back(w[i]);
  }
  return s;
}

}  // namespace forestpat
