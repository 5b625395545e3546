#include "forestpat/generators.hpp"

#include <algorithm>
#include <numeric>

#include "forestpat/error.hpp"

namespace forestpat {

namespace {

std::size_t idx(Label v) { return static_cast<std::size_t>(v); }

// Shared admissibility rule for assigning `parent` to `vertex` when vertices
// 1..vertex-1 are already placed and later ones are not.
bool can_attach(std::span<const Label> parent, std::span<const int> child_count, Family family,
                int vertex, Label p) {
  if (p == vertex) return false;
  if (family == Family::UnorderedBinary && child_count[idx(p)] >= 2) return false;
  for (Label x = p; x != Forest::kRoot; x = parent[idx(x)]) {
    if (x == vertex) return false;
    if (parent[idx(x)] < 0) break;
  }
  return true;
}

void set_partitions_rgs(int n, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      f(rgs, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[idx(i)] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    f(rgs, 0);
    return;
  }
  rgs[0] = 0;
  rec(1, 1);
}

std::vector<Block> blocks_from_rgs(const std::vector<int>& rgs, int k, Label offset = 1) {
  std::vector<Block> blocks(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < rgs.size(); ++i)
    blocks[idx(rgs[i])].push_back(static_cast<Label>(i) + offset);
  return blocks;
}

}  // namespace

ForestStream::ForestStream(int n, Family family, std::span<const Label> prefix)
    : n_(n), family_(family), prefix_len_(static_cast<int>(prefix.size())) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  if (prefix_len_ > n) throw Error(ErrorKind::InvalidArgument, "prefix longer than n");
  parent_.assign(idx(n) + 1, -1);
  child_count_.assign(idx(n) + 1, 0);
  for (int i = 1; i <= prefix_len_; ++i) {
    const Label p = prefix[idx(i - 1)];
    if (p < 0 || p > n || !admissible(i, p)) {
      done_ = true;
      break;
    }
    parent_[idx(i)] = p;
    ++child_count_[idx(p)];
  }
  forest_.ground_.resize(idx(n));
  std::iota(forest_.ground_.begin(), forest_.ground_.end(), 1);
  forest_.parent_.assign(idx(n) + 1, -1);
}

bool ForestStream::admissible(int vertex, Label p) const {
  return can_attach(parent_, child_count_, family_, vertex, p);
}

bool ForestStream::next_parent_vector() {
  int i;
  if (!started_) {
    started_ = true;
    i = prefix_len_ + 1;
    if (i > n_) return true;  // the prefix is the whole vector
  } else {
    i = n_;
  }
  while (true) {
    if (i <= prefix_len_) return false;
    Label& p = parent_[idx(i)];
    if (p >= 0) --child_count_[idx(p)];
    ++p;
    while (p <= n_ && !admissible(i, p)) ++p;
    if (p > n_) {
      p = -1;
      --i;
      continue;
    }
    ++child_count_[idx(p)];
    if (i == n_) return true;
    ++i;
  }
}

bool ForestStream::next_child_orders() {
  for (int v = n_; v >= 0; --v) {
    auto& o = forest_.order_[idx(v)];
    if (std::next_permutation(o.begin(), o.end())) return true;
  }
  return false;
}

void ForestStream::publish() {
  std::copy(parent_.begin() + 1, parent_.end(), forest_.parent_.begin() + 1);
}

bool ForestStream::next() {
  if (done_) return false;
  if (family_ == Family::Ordered && started_ && next_child_orders()) return true;
  if (!next_parent_vector()) {
    done_ = true;
    return false;
  }
  publish();
  if (family_ == Family::Ordered) {
    forest_.order_.assign(idx(n_) + 1, {});
    for (int v = 1; v <= n_; ++v) forest_.order_[idx(parent_[idx(v)])].push_back(v);
  }
  return true;
}

std::vector<std::vector<Label>> stream_partitions(int n, Family family, int depth) {
  depth = std::clamp(depth, 0, n);
  std::vector<std::vector<Label>> out;
  std::vector<Label> parent(idx(n) + 1, -1);
  std::vector<int> child_count(idx(n) + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > depth) {
      out.emplace_back(parent.begin() + 1, parent.begin() + 1 + depth);
      return;
    }
    for (Label p = 0; p <= n; ++p) {
      if (!can_attach(parent, child_count, family, i, p)) continue;
      parent[idx(i)] = p;
      ++child_count[idx(p)];
      rec(i + 1);
      --child_count[idx(p)];
      parent[idx(i)] = -1;
    }
  };
  rec(1);
  return out;
}

std::uint64_t count_forests(int n, Family family) {
  ForestStream s(n, family);
  std::uint64_t count = 0;
  while (s.next()) ++count;
  return count;
}

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& f) {
  set_partitions_rgs(n, [&](const std::vector<int>& rgs, int k) { f(SetPartition(blocks_from_rgs(rgs, k))); });
}

void for_each_ordered_set_partition(int n, const std::function<void(const OrderedSetPartition&)>& f) {
  set_partitions_rgs(n, [&](const std::vector<int>& rgs, int k) {
    auto blocks = blocks_from_rgs(rgs, k);
    std::vector<int> order(idx(k));
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<Block> arranged;
      for (int i : order) arranged.push_back(blocks[idx(i)]);
      f(OrderedSetPartition(std::move(arranged)));
    } while (std::next_permutation(order.begin(), order.end()));
  });
}

void for_each_list_partition(int n, ListPartitionFlags flags,
                             const std::function<void(const ListPartition&)>& f) {
  set_partitions_rgs(n, [&](const std::vector<int>& rgs, int k) {
    const auto blocks = blocks_from_rgs(rgs, k);
    // Every admissible internal order for each block.
    std::vector<std::vector<Block>> arrangements;
    for (const auto& b : blocks) {
      std::vector<Block> options;
      Block cur = b;
      do {
        if (!flags.up_to_reverse || normalize_up_to_reverse(cur) == cur) options.push_back(cur);
      } while (std::next_permutation(cur.begin(), cur.end()));
      arrangements.push_back(std::move(options));
    }
    std::vector<Block> chosen(idx(k));
    std::function<void(int)> rec = [&](int i) {
      if (i == k) {
        if (!flags.ordered_blocks) {
          f(ListPartition(chosen, flags));
          return;
        }
        std::vector<int> order(idx(k));
        std::iota(order.begin(), order.end(), 0);
        do {
          std::vector<Block> arranged;
          for (int j : order) arranged.push_back(chosen[idx(j)]);
          f(ListPartition(std::move(arranged), flags));
        } while (std::next_permutation(order.begin(), order.end()));
        return;
      }
      for (const auto& option : arrangements[idx(i)]) {
        chosen[idx(i)] = option;
        rec(i + 1);
      }
    };
    rec(0);
  });
}

void for_each_composition(int n, int k, const std::function<void(const Composition&)>& f) {
  if (k < 1 || n < k) return;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int slots) {
    if (slots == 1) {
      parts.push_back(remaining);
      f(Composition(parts));
      parts.pop_back();
      return;
    }
    for (int p = 1; p <= remaining - (slots - 1); ++p) {
      parts.push_back(p);
      rec(remaining - p, slots - 1);
      parts.pop_back();
    }
  };
  rec(n, k);
}

void for_each_composition(int n, const std::function<void(const Composition&)>& f) {
  for (int k = 1; k <= n; ++k) for_each_composition(n, k, f);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& f) {
  std::vector<Label> w(idx(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  do {
    f(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_ordered_cycle_decomp(int n, const std::function<void(const CycleDecomposition&)>& f) {
  for_each_permutation(n, [&](const Permutation& p) {
    const auto cycles = to_cycles(p).cycles();
    std::vector<int> order(cycles.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<CycleDecomposition::Cycle> arranged;
      for (int i : order) arranged.push_back(cycles[idx(i)]);
      f(CycleDecomposition::ordered(std::move(arranged)));
    } while (std::next_permutation(order.begin(), order.end()));
  });
}

void for_each_partitioned_cycle_decomp(int n,
                                       const std::function<void(const CycleDecomposition&)>& f) {
  for_each_permutation(n, [&](const Permutation& p) {
    const auto cycles = to_cycles(p).cycles();
    set_partitions_rgs(static_cast<int>(cycles.size()), [&](const std::vector<int>& rgs, int k) {
      std::vector<std::vector<int>> blocks(idx(k));
      for (std::size_t i = 0; i < rgs.size(); ++i) blocks[idx(rgs[i])].push_back(static_cast<int>(i));
      f(CycleDecomposition::partitioned(cycles, std::move(blocks)));
    });
  });
}

namespace {
template <typename T, typename Visit>
std::vector<T> collect(Visit&& visit) {
  std::vector<T> out;
  visit([&](const T& x) { out.push_back(x); });
  return out;
}
}  // namespace

std::vector<SetPartition> all_set_partitions(int n) {
  return collect<SetPartition>([n](auto&& f) { for_each_set_partition(n, f); });
}
std::vector<OrderedSetPartition> all_ordered_set_partitions(int n) {
  return collect<OrderedSetPartition>([n](auto&& f) { for_each_ordered_set_partition(n, f); });
}
std::vector<ListPartition> all_list_partitions(int n, ListPartitionFlags flags) {
  return collect<ListPartition>([n, flags](auto&& f) { for_each_list_partition(n, flags, f); });
}
std::vector<Composition> all_compositions(int n, int k) {
  return collect<Composition>([n, k](auto&& f) { for_each_composition(n, k, f); });
}
std::vector<CycleDecomposition> all_ordered_cycle_decomps(int n) {
  return collect<CycleDecomposition>([n](auto&& f) { for_each_ordered_cycle_decomp(n, f); });
}
std::vector<CycleDecomposition> all_partitioned_cycle_decomps(int n) {
  return collect<CycleDecomposition>([n](auto&& f) { for_each_partitioned_cycle_decomp(n, f); });
}

}  // namespace forestpat
