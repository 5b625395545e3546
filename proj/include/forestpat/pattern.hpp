#pragma once

#include <span>
#include <string>
#include <vector>

#include "forestpat/permutation.hpp"

namespace forestpat {

enum class PatternMode { Classical, Consecutive };

class Pattern {
 public:
  /// `perm` must be a standard permutation of length >= 1.
  Pattern(Permutation perm, PatternMode mode = PatternMode::Classical);

  /// Parses a digit word such as "2143"; a leading '!' selects consecutive mode.
  static Pattern parse(std::string_view text);

  const Permutation& perm() const noexcept { return perm_; }
  PatternMode mode() const noexcept { return mode_; }
  std::size_t length() const noexcept { return perm_.size(); }

  /// "2143" or "!2143".
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Permutation perm_;
  PatternMode mode_;
};

using PatternSet = std::vector<Pattern>;

/// Whether a sequence of distinct integers contains the pattern. Classical mode
/// looks at all subsequences, consecutive mode only at contiguous windows.
bool contains(std::span<const Label> seq, const Pattern& pattern);
bool contains(const Permutation& p, const Pattern& pattern);

bool contains_any(std::span<const Label> seq, const PatternSet& patterns);

Pattern complement(const Pattern& pattern);
PatternSet complement(const PatternSet& patterns);

/// Comma-separated list, e.g. "321,!231".
PatternSet parse_pattern_list(std::string_view text);
std::string to_string(const PatternSet& patterns);

}  // namespace forestpat
