#pragma once

#include <optional>
#include <vector>

#include "forestpat/permutation.hpp"

namespace forestpat {

/// A permutation written as disjoint cycles, each rotated so its maximum comes
/// first. An ordered decomposition keeps the cycle order; a partitioned one
/// instead groups the cycles into blocks and forgets their order.
class CycleDecomposition {
 public:
  using Cycle = std::vector<Label>;

  CycleDecomposition() = default;

  /// Throws Error{InvalidDecomposition} if cycles overlap or are empty.
  static CycleDecomposition ordered(std::vector<Cycle> cycles);

  /// `blocks` is a set partition of the cycle indices {0, ..., cycles.size()-1}.
  /// The result is canonical: cycles sorted by maximum, blocks sorted.
  static CycleDecomposition partitioned(std::vector<Cycle> cycles,
                                        std::vector<std::vector<int>> blocks);

  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  bool is_partitioned() const noexcept { return blocks_.has_value(); }
  /// Only meaningful when is_partitioned().
  const std::vector<std::vector<int>>& blocks() const { return *blocks_; }

  /// Sorted union of the cycle supports.
  std::vector<Label> ground() const;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;

 private:
  std::vector<Cycle> cycles_;
  std::optional<std::vector<std::vector<int>>> blocks_;
};

/// Cycles listed by smallest element, each rotated max-first.
CycleDecomposition to_cycles(const Permutation& p);
Permutation from_cycles(const CycleDecomposition& cd);

}  // namespace forestpat
