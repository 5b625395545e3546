#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forestpat/bigint.hpp"
#include "forestpat/forest.hpp"
#include "forestpat/pattern.hpp"

namespace forestpat {

// Exact combinatorial numbers. Out-of-range arguments (k > n, negatives)
// yield 0 rather than an error.
BigInt factorial(int n);
BigInt binom(int n, int k);
BigInt stirling1(int n, int k);  // unsigned, first kind
BigInt stirling2(int n, int k);
BigInt bell(int n);
BigInt catalan(int n);

enum class Formula {
  Unimodal,          // sum_k k! c(n,k)
  Uni123,            // sum_k B(k) c(n,k)
  Uni321,            // sum_k k! S(n,k)
  Uni132,            // n! sum_k (1/k!) C(n-1,k-1)
  OneDescentPlus,    // same sum as Uni132
  OneDescent,        // n! (1 + sum 2^-l C(n-k-1,l-1) C(k,l))
  Uni231Recurrence,  // F(n) = sum_k sum_r C(n-1,k-1) (r-1)! F(n-k) F(k-r), F(0) = 1
};

std::string_view to_string(Formula f);
std::optional<Formula> parse_formula(std::string_view name);
const std::vector<Formula>& all_formulas();

/// Throws Error{InternalNonInteger} if a rational term fails to cancel.
BigInt formula(Formula name, int n);

/// Trees counted alongside the Uni231Recurrence: T(n) = sum_r (r-1)! F(n-r).
BigInt uni231_trees(int n);

// Brute-force counting ----------------------------------------------------

enum class PathCheck { LeafPaths, AllVertices };

struct CountOptions {
  /// Worker threads; 0 selects std::thread::hardware_concurrency().
  unsigned jobs = 0;
  PathCheck check = PathCheck::LeafPaths;
  /// Overrides default_budget(family) when set.
  std::optional<int> budget;
  bool ignore_budget = false;
};

/// Largest n brute_count accepts without an override.
int default_budget(Family family);

/// Number of forests of the family on [n] avoiding every pattern in the set.
/// The result does not depend on `jobs`. Error{BudgetExceeded}.
BigInt brute_count(int n, Family family, const PatternSet& patterns,
                   const CountOptions& options = {});

enum class Statistic { TopDownMaxima, TreeCount };

/// Avoider counts keyed by the statistic's value (zero entries omitted).
std::map<int, BigInt> refined_distribution(int n, Family family, const PatternSet& patterns,
                                           Statistic statistic, const CountOptions& options = {});
BigInt refined_count(int n, Family family, const PatternSet& patterns, Statistic statistic,
                     int value, const CountOptions& options = {});

// Theorem verification ----------------------------------------------------

struct VerifyRow {
  int n = 0;
  std::string label;        // what was compared, e.g. "f_n(213,312)" or "k=2"
  BigInt expected;
  BigInt computed;
  bool pass() const { return expected == computed; }
};

struct VerifyReport {
  std::string theorem;
  std::vector<VerifyRow> rows;
  bool pass() const;
};

struct TheoremInfo {
  std::string name;
  std::string description;
};

const std::vector<TheoremInfo>& theorems();
/// Error{InvalidArgument} for unknown names.
VerifyReport verify_theorem(std::string_view name, int max_n, const CountOptions& options = {});

// Figure tables -----------------------------------------------------------

struct TableCell {
  int n = 0;
  Pattern pattern;
  BigInt computed;
  std::optional<BigInt> expected;  // absent where no published value exists
};

struct FigureTable {
  int figure = 0;
  Family family = Family::Unordered;
  std::vector<TableCell> cells;  // row-major: n, then classical 321/231/132, consecutive 321/231/132
};

std::vector<int> known_figures();
/// Published value for a cell of figure 7, 12 or 13, if any.
std::optional<BigInt> published_value(int figure, int n, const Pattern& pattern);
FigureTable compute_figure(int figure, int max_n, const CountOptions& options = {});

}  // namespace forestpat
