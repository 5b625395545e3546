#pragma once

#include <span>
#include <string>
#include <vector>

namespace forestpat {

using Label = int;

/// A bijection on a finite, linearly ordered set of positive integers, kept in
/// one-line form. The ground set is recovered from the word and stored sorted.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error{InvalidSequence} on duplicate or non-positive entries.
  explicit Permutation(std::vector<Label> word);

  static Permutation identity(int n);

  const std::vector<Label>& word() const noexcept { return word_; }
  const std::vector<Label>& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  Label operator[](std::size_t i) const { return word_[i]; }

  /// True when the ground set is exactly {1, ..., size()}.
  bool is_standard() const noexcept;

  /// Position (0-based) of a value, or -1.
  int position_of(Label value) const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

 private:
  std::vector<Label> ground_;
  std::vector<Label> word_;
};

/// The permutation of [k] in the same relative order as `seq`.
Permutation standardize(std::span<const Label> seq);

/// Rank (0-based) of `value` within a sorted ground set; -1 when absent.
int rank_in(std::span<const Label> sorted_ground, Label value) noexcept;

Permutation reverse(const Permutation& p);
/// Swaps the i-th smallest ground element with the i-th largest.
Permutation complement(const Permutation& p);
/// Inverse taken through the standardization: invert, then map values back.
Permutation inverse(const Permutation& p);

struct PermStats {
  std::vector<int> descents;    // 1-based positions i with p_i > p_{i+1}
  std::vector<int> ascents;     // 1-based positions i with p_i < p_{i+1}
  std::vector<Label> lr_minima; // values, in order of appearance
  std::vector<Label> lr_maxima;
};

PermStats stats(const Permutation& p);

}  // namespace forestpat
