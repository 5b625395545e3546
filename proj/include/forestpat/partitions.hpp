#pragma once

#include <vector>

#include "forestpat/permutation.hpp"

namespace forestpat {

using Block = std::vector<Label>;

/// Blocks sorted internally and listed by minimum.
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws Error{InvalidPartition} on empty or overlapping blocks.
  explicit SetPartition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::vector<Label> ground() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<Block> blocks_;
};

/// Block order is significant; elements inside a block are kept sorted.
class OrderedSetPartition {
 public:
  OrderedSetPartition() = default;
  explicit OrderedSetPartition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::vector<Label> ground() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

 private:
  std::vector<Block> blocks_;
};

struct ListPartitionFlags {
  bool ordered_blocks = false;
  bool up_to_reverse = false;

  friend bool operator==(const ListPartitionFlags&, const ListPartitionFlags&) = default;
  friend auto operator<=>(const ListPartitionFlags&, const ListPartitionFlags&) = default;
};

/// A set partition whose blocks are sequences.
///
/// Canonical form: with unordered blocks, blocks are listed by minimum; with
/// up_to_reverse, every block of length >= 2 is stored with its smallest
/// element to the right of its second smallest.
class ListPartition {
 public:
  ListPartition() = default;
  ListPartition(std::vector<Block> blocks, ListPartitionFlags flags);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  ListPartitionFlags flags() const noexcept { return flags_; }
  std::vector<Label> ground() const;

  friend bool operator==(const ListPartition&, const ListPartition&) = default;
  friend auto operator<=>(const ListPartition&, const ListPartition&) = default;

 private:
  std::vector<Block> blocks_;
  ListPartitionFlags flags_;
};

/// Reverses the block if its smallest element precedes its second smallest.
Block normalize_up_to_reverse(Block block);

class Composition {
 public:
  Composition() = default;
  /// Throws Error{InvalidArgument} on a non-positive part.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace forestpat
