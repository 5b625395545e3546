#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forestpat/pattern.hpp"
#include "forestpat/permutation.hpp"

namespace forestpat {

enum class Family { Unordered, UnorderedBinary, Ordered };

/// A rooted labeled forest drawn under an unlabeled virtual root 0.
///
/// Vertices carry distinct positive labels (the ground set, usually [n]).
/// The parent map is the canonical form of an unordered forest. An ordered
/// (plane) forest additionally stores, for the virtual root and every vertex,
/// a left-to-right order of its children.
class Forest {
 public:
  static constexpr Label kRoot = 0;

  Forest() = default;

  /// `parents[i-1]` is the parent of vertex i; 0 means "tree root".
  /// Throws Error{ParentOutOfRange} or Error{CycleDetected}.
  static Forest from_parents(int n, std::span<const Label> parents);

  /// Same on an arbitrary ground set: `parents[i]` is the parent of `ground[i]`.
  static Forest from_parents(std::vector<Label> ground, std::span<const Label> parents);

  /// Returns a copy carrying child orders. `orders[0]` orders the tree roots,
  /// `orders[i + 1]` the children of ground()[i]. Each must be a permutation of
  /// the actual child set (Error{InvalidArgument} otherwise).
  Forest with_child_order(std::vector<std::vector<Label>> orders) const;
  Forest without_child_order() const;

  std::size_t size() const noexcept { return ground_.size(); }
  bool empty() const noexcept { return ground_.empty(); }
  const std::vector<Label>& ground() const noexcept { return ground_; }
  bool is_standard() const noexcept;
  bool is_ordered() const noexcept { return !order_.empty(); }
  bool has_vertex(Label v) const noexcept;

  Label parent(Label v) const { return parent_[static_cast<std::size_t>(v)]; }
  /// Parents aligned with ground().
  std::vector<Label> parents() const;

  /// Children in ascending label order; kRoot gives the tree roots.
  std::vector<Label> children(Label v) const;
  /// Plane order if the forest is ordered, ascending order otherwise.
  std::vector<Label> ordered_children(Label v) const;
  std::vector<Label> roots() const { return children(kRoot); }

  /// Labels on the path from the tree root down to v (inclusive).
  std::vector<Label> path_to(Label v) const;

  /// Raw parent array indexed by label (entries for absent labels are -1).
  std::span<const Label> parent_array() const noexcept { return parent_; }

  friend bool operator==(const Forest&, const Forest&) = default;
  friend auto operator<=>(const Forest& a, const Forest& b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
    if (auto c = a.parent_ <=> b.parent_; c != 0) return c;
    return a.order_ <=> b.order_;
  }

 private:
  friend class ForestStream;

  std::vector<Label> ground_;
  std::vector<Label> parent_;                // indexed by label, size max+1
  std::vector<std::vector<Label>> order_;    // indexed by label; empty when unordered
};

/// One label sequence per leaf, from its tree root down to the leaf.
std::vector<std::vector<Label>> root_leaf_paths(const Forest& f);

/// True iff no root-to-vertex path contains any pattern of the set. Checks
/// leaf paths only: containment is inherited by extensions of a path.
bool avoids(const Forest& f, const PatternSet& patterns);
/// Reference checker that inspects the path to every vertex independently.
bool avoids_all_vertices(const Forest& f, const PatternSet& patterns);

/// Relabels i-th smallest <-> i-th largest over the ground; shape unchanged.
Forest complement_forest(const Forest& f);

/// Vertices larger than all of their ancestors, ascending.
std::vector<Label> top_down_maxima(const Forest& f);

/// Induced subforest on the top-down maxima; Error{NotAncestorClosed} when some
/// top-down maximum has an ancestor that is not one.
Forest largest_increasing_subforest(const Forest& f);

/// Number of vertices on the longest root-to-vertex path.
int height(const Forest& f);

enum class DescentKind { None, Descent, ProperDescent };
/// ProperDescent: v exceeds all of its (>= 1) children; Descent: some but not all.
DescentKind descent_kind(const Forest& f, Label v);

/// Canonical encoding of the unlabeled, unordered shape.
std::string shape_signature(const Forest& f);

/// Whether every vertex (the virtual root included) has at most two children.
bool is_binary(const Forest& f);

}  // namespace forestpat
