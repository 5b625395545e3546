#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "forestpat/cycles.hpp"
#include "forestpat/forest.hpp"
#include "forestpat/partitions.hpp"

namespace forestpat {

/// Lazy, single-consumer stream over every forest of a family on [n].
///
/// Unordered forests come out in lexicographic order of their parent vectors.
/// Ordered forests come out grouped by parent vector, then in lexicographic
/// order of the child-order tuple (virtual root first). A fixed prefix of the
/// parent vector restricts the stream to one partition of the full space.
///
///   ForestStream s(4, Family::Unordered);
///   while (s.next()) use(s.current());
class ForestStream {
 public:
  ForestStream(int n, Family family, std::span<const Label> prefix = {});

  /// Advances to the next forest; false once exhausted.
  bool next();
  const Forest& current() const noexcept { return forest_; }

 private:
  bool next_parent_vector();
  bool next_child_orders();
  bool admissible(int vertex, Label parent) const;
  void publish();

  int n_;
  Family family_;
  int prefix_len_;
  bool started_ = false;
  bool done_ = false;
  std::vector<Label> parent_;       // 1-based; -1 while unassigned
  std::vector<int> child_count_;    // indexed 0..n
  Forest forest_;
};

/// Parent-vector prefixes that split the family on [n] into independent
/// streams. Every forest belongs to exactly one prefix.
std::vector<std::vector<Label>> stream_partitions(int n, Family family, int depth = 2);

/// Number of forests in the family, by exhausting a stream.
std::uint64_t count_forests(int n, Family family);

// Domain objects of the bijections. Each visitor walks the objects lazily in a
// fixed deterministic order; the all_* helpers collect them.

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& f);
void for_each_ordered_set_partition(int n, const std::function<void(const OrderedSetPartition&)>& f);
void for_each_list_partition(int n, ListPartitionFlags flags,
                             const std::function<void(const ListPartition&)>& f);
void for_each_composition(int n, int k, const std::function<void(const Composition&)>& f);
void for_each_composition(int n, const std::function<void(const Composition&)>& f);
void for_each_permutation(int n, const std::function<void(const Permutation&)>& f);
void for_each_ordered_cycle_decomp(int n, const std::function<void(const CycleDecomposition&)>& f);
void for_each_partitioned_cycle_decomp(int n,
                                       const std::function<void(const CycleDecomposition&)>& f);

std::vector<SetPartition> all_set_partitions(int n);
std::vector<OrderedSetPartition> all_ordered_set_partitions(int n);
std::vector<ListPartition> all_list_partitions(int n, ListPartitionFlags flags);
std::vector<Composition> all_compositions(int n, int k);
std::vector<CycleDecomposition> all_ordered_cycle_decomps(int n);
std::vector<CycleDecomposition> all_partitioned_cycle_decomps(int n);

}  // namespace forestpat
