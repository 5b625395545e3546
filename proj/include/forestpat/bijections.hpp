#pragma once

#include "forestpat/cycles.hpp"
#include "forestpat/forest.hpp"
#include "forestpat/partitions.hpp"
#include "forestpat/permutation.hpp"

namespace forestpat {

// Constructive bijections between forest classes and their counting domains.
// Every forward map accepts objects on an arbitrary ground set and produces a
// forest on that same ground set. Inverses throw Error{NotInClass} (or the
// more specific kind named below) when handed a forest outside the image.

/// Permutations -> increasing forests. Left-to-right minima become roots; any
/// other entry hangs under the rightmost earlier entry smaller than it.
Forest phi(const Permutation& p);
/// Reads the forest depth-first, larger children first. Error{NotIncreasing}.
Permutation phi_inv(const Forest& f);

/// phi followed by complement: permutations -> decreasing forests.
Forest phi_d(const Permutation& p);
Permutation phi_d_inv(const Forest& f);

/// Ordered cycle decompositions -> unimodal forests ({213, 312}-avoiding).
/// Cycle maxima form the increasing part via phi; the rest of each cycle is a
/// phi_d forest hung under its maximum.
Forest theta(const CycleDecomposition& cd);
/// Error{NotUnimodal}.
CycleDecomposition theta_inv(const Forest& f);

/// Set partitions -> increasing forests of height <= 2: each block's minimum is
/// a root with the rest of the block as its children.
Forest shallow(const SetPartition& sp);
SetPartition shallow_inv(const Forest& f);

/// Partitioned cycle decompositions -> forests avoiding {213, 312, 123}.
Forest xi(const CycleDecomposition& pcd);
/// Derived inverse (read the structure back off the forest).
CycleDecomposition xi_inv(const Forest& f);

/// Ordered set partitions -> forests avoiding {213, 312, 321}.
Forest gamma(const OrderedSetPartition& osp);
/// Derived inverse.
OrderedSetPartition gamma_inv(const Forest& f);

enum class TauVariant {
  Unimodal132,  // {312, 213, 132}
  OneDescent,   // {321, 132, 213}
};

/// Partitions into lists (unordered blocks) -> one tree per list, rooted at the
/// list's first entry.
Forest tau(const ListPartition& lp, TauVariant variant);
ListPartition tau_inv(const Forest& f, TauVariant variant);

/// Permutations in which the second smallest value precedes the smallest ->
/// trees with a proper descent at the root and no other descent.
/// Error{TwoAfterOne}.
Forest rho(const Permutation& p);
Permutation rho_inv(const Forest& f);

/// Ordered partitions into lists up to reverse -> forests avoiding
/// {321, 2143, 3142}.
Forest psi(const ListPartition& lp);
/// Derived inverse.
ListPartition psi_inv(const Forest& f);

/// 312-avoiding -> 321-avoiding forests, keeping the shape and the positions of
/// the top-down maxima. beta_wilf is its inverse.
Forest alpha(const Forest& f);
Forest beta_wilf(const Forest& f);

}  // namespace forestpat
