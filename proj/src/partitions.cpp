#include "forestpat/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "forestpat/error.hpp"

namespace forestpat {

namespace {

std::vector<Label> union_of(const std::vector<Block>& blocks) {
  std::vector<Label> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

void check_blocks(const std::vector<Block>& blocks) {
  for (const auto& b : blocks)
    if (b.empty()) throw Error(ErrorKind::InvalidPartition, "empty block");
  const auto all = union_of(blocks);
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorKind::InvalidPartition, "blocks are not disjoint");
  if (!all.empty() && all.front() <= 0)
    throw Error(ErrorKind::InvalidPartition, "block entries must be positive");
}

bool by_minimum(const Block& a, const Block& b) {
  return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
}

}  // namespace

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  check_blocks(blocks_);
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end());
}

std::vector<Label> SetPartition::ground() const { return union_of(blocks_); }

OrderedSetPartition::OrderedSetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  check_blocks(blocks_);
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
}

std::vector<Label> OrderedSetPartition::ground() const { return union_of(blocks_); }

Block normalize_up_to_reverse(Block block) {
  if (block.size() < 2) return block;
  auto sorted = block;
  std::sort(sorted.begin(), sorted.end());
  const auto pos_smallest = std::find(block.begin(), block.end(), sorted[0]);
  const auto pos_second = std::find(block.begin(), block.end(), sorted[1]);
  if (pos_smallest < pos_second) std::reverse(block.begin(), block.end());
  return block;
}

ListPartition::ListPartition(std::vector<Block> blocks, ListPartitionFlags flags)
    : blocks_(std::move(blocks)), flags_(flags) {
  check_blocks(blocks_);
  if (flags_.up_to_reverse)
    for (auto& b : blocks_) b = normalize_up_to_reverse(std::move(b));
  if (!flags_.ordered_blocks) std::sort(blocks_.begin(), blocks_.end(), by_minimum);
}

std::vector<Label> ListPartition::ground() const { return union_of(blocks_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw Error(ErrorKind::InvalidArgument, "composition parts must be positive");
}

int Composition::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

}  // namespace forestpat
