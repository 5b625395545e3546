#include "forestpat/cycles.hpp"

#include <algorithm>
#include <numeric>

#include "forestpat/error.hpp"

namespace forestpat {

namespace {

void rotate_max_first(CycleDecomposition::Cycle& c) {
  std::rotate(c.begin(), std::max_element(c.begin(), c.end()), c.end());
}

void check_disjoint(const std::vector<CycleDecomposition::Cycle>& cycles) {
  std::vector<Label> all;
  for (const auto& c : cycles) {
    if (c.empty()) throw Error(ErrorKind::InvalidDecomposition, "empty cycle");
    all.insert(all.end(), c.begin(), c.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorKind::InvalidDecomposition, "cycles are not disjoint");
  if (!all.empty() && all.front() <= 0)
    throw Error(ErrorKind::InvalidDecomposition, "cycle entries must be positive");
}

}  // namespace

CycleDecomposition CycleDecomposition::ordered(std::vector<Cycle> cycles) {
  check_disjoint(cycles);
  for (auto& c : cycles) rotate_max_first(c);
  CycleDecomposition cd;
  cd.cycles_ = std::move(cycles);
  return cd;
}

CycleDecomposition CycleDecomposition::partitioned(std::vector<Cycle> cycles,
                                                   std::vector<std::vector<int>> blocks) {
  check_disjoint(cycles);
  const int k = static_cast<int>(cycles.size());
  std::vector<int> seen(static_cast<std::size_t>(k), 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw Error(ErrorKind::InvalidDecomposition, "empty block of cycles");
    for (int i : b) {
      if (i < 0 || i >= k || seen[static_cast<std::size_t>(i)]++)
        throw Error(ErrorKind::InvalidDecomposition, "blocks must partition the cycle indices");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(ErrorKind::InvalidDecomposition, "blocks must cover every cycle");

  for (auto& c : cycles) rotate_max_first(c);
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return cycles[static_cast<std::size_t>(a)][0] < cycles[static_cast<std::size_t>(b)][0]; });
  std::vector<int> new_index(static_cast<std::size_t>(k));
  std::vector<Cycle> sorted;
  for (int i = 0; i < k; ++i) {
    new_index[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    sorted.push_back(std::move(cycles[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]));
  }
  for (auto& b : blocks) {
    for (int& i : b) i = new_index[static_cast<std::size_t>(i)];
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());

  CycleDecomposition cd;
  cd.cycles_ = std::move(sorted);
  cd.blocks_ = std::move(blocks);
  return cd;
}

std::vector<Label> CycleDecomposition::ground() const {
  std::vector<Label> g;
  for (const auto& c : cycles_) g.insert(g.end(), c.begin(), c.end());
  std::sort(g.begin(), g.end());
  return g;
}

CycleDecomposition to_cycles(const Permutation& p) {
  const auto& g = p.ground();
  std::vector<bool> seen(g.size(), false);
  std::vector<CycleDecomposition::Cycle> cycles;
  // Ground is sorted, so scanning it in order lists cycles by smallest element.
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    CycleDecomposition::Cycle c;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      c.push_back(g[i]);
      i = static_cast<std::size_t>(rank_in(g, p[i]));
    }
    cycles.push_back(std::move(c));
  }
  return CycleDecomposition::ordered(std::move(cycles));
}

Permutation from_cycles(const CycleDecomposition& cd) {
  const auto g = cd.ground();
  std::vector<Label> w(g.size());
  for (const auto& c : cd.cycles())
    for (std::size_t j = 0; j < c.size(); ++j)
      w[static_cast<std::size_t>(rank_in(g, c[j]))] = c[(j + 1) % c.size()];
  return Permutation(std::move(w));
}

}  // namespace forestpat
