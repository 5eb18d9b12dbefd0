#pragma once

#include <string>
#include <vector>

#include "torsionlab/bitset.hpp"
#include "torsionlab/lattice.hpp"
#include "torsionlab/poset.hpp"

namespace torsionlab {

std::size_t catalan_number(std::size_t n);

/// Lattice path of U/D steps staying weakly above the axis and ending on it.
class DyckPath {
 public:
  /// Throws std::invalid_argument on malformed input.
  static DyckPath parse(const std::string& steps);

  std::size_t semilength() const { return steps_.size() / 2; }
  const std::string& str() const { return steps_; }
  /// Heights after 0..2n steps.
  std::vector<int> heights() const;

  bool operator==(const DyckPath& o) const = default;

 private:
  std::string steps_;
};

/// All Dyck paths with n up-steps, in lexicographic order of U/D strings (U < D).
std::vector<DyckPath> dyck_paths(std::size_t n);
/// Path whose height profile is the pointwise min (meet) or max (join).
DyckPath dyck_meet(const DyckPath& a, const DyckPath& b);
DyckPath dyck_join(const DyckPath& a, const DyckPath& b);

/// Dyck paths of semilength n ordered by pointwise height domination;
/// element labels are the U/D strings.
FinLattice dyck_lattice(std::size_t n);

/// The interval [i,j] of [n-1] belongs to the ideal iff the path reaches
/// height j-i+2 at position i+j. Indices refer to interval_poset(n-1).
Ideal dyck_to_ideal(const DyckPath& d);

/// Full binary tree encoded as a balanced-parenthesis word: a leaf is the
/// empty word and a node with subtrees L, R is "(" L ")" R.
class BinaryTree {
 public:
  static BinaryTree parse(const std::string& parens);
  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);

  std::size_t internal_nodes() const { return code_.size() / 2; }
  const std::string& str() const { return code_; }
  bool is_leaf() const { return code_.empty(); }
  BinaryTree left() const;
  BinaryTree right() const;

  /// Trees reachable by one right rotation ((A B) C) -> (A (B C)) at any node.
  std::vector<BinaryTree> right_rotations() const;

  bool operator==(const BinaryTree& o) const = default;
  bool operator<(const BinaryTree& o) const { return code_ < o.code_; }

 private:
  std::string code_;
};

std::vector<BinaryTree> binary_trees(std::size_t n);

/// Binary trees with n internal nodes under the rotation order.
FinLattice tamari_lattice(std::size_t n);

/// Subsets of the interval modules M[i,j] of the linear quiver 1 -> ... -> n that
/// are closed under quotients M[i,k] (i <= k <= j) and under the extension of
/// M[i,j] by M[j+1,l] with middle term M[i,l]; ordered by inclusion.
/// Element labels list the members; n <= 6.
FinLattice typeA_torsion_lattice(std::size_t n);
/// Labels "M[i,j]" in the element order used by typeA_torsion_lattice.
std::vector<std::string> typeA_interval_labels(std::size_t n);

/// Intervals of [n] under reverse containment.
Poset brick_forcing_poset(std::size_t n);

/// Nontrivial intervals [a,b], a < b, of a chain with n elements, ordered by
/// containment. Isomorphic to interval_poset(n-1).
Poset rel_star(std::size_t n);

}  // namespace torsionlab
