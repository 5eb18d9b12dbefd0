#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/bitset.hpp"

namespace torsionlab {

class NotAPartialOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite poset on elements 0..k-1. Row i of `down` holds {j : j <= i}.
class Poset {
 public:
  Poset() = default;

  /// `leq` must already be a partial order (reflexive pairs may be omitted).
  static Poset from_relation(std::vector<std::string> labels,
                             const std::vector<std::pair<std::size_t, std::size_t>>& leq);
  /// Reflexive-transitive closure of the given cover pairs (a < b).
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  static Poset from_down_sets(std::vector<std::string> labels, std::vector<Bitset> down);

  std::size_t size() const { return labels_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return down_[b].test(a); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  const Bitset& down_set(std::size_t a) const { return down_[a]; }
  const Bitset& up_set(std::size_t a) const { return up_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Hasse pairs (a, b) with a covered by b, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }
  std::vector<std::size_t> lower_covers(std::size_t a) const;
  std::vector<std::size_t> upper_covers(std::size_t a) const;
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  /// All related pairs (a, b) with a <= b, including a == b.
  std::vector<std::pair<std::size_t, std::size_t>> relation() const;

  bool is_down_closed(const Bitset& s) const;
  bool is_up_closed(const Bitset& s) const;
  /// Down-closure of a subset.
  Bitset down_closure(const Bitset& s) const;

  bool operator==(const Poset& o) const {
    return labels_ == o.labels_ && down_ == o.down_;
  }

 private:
  void finish();

  std::vector<std::string> labels_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Intervals [i,j] of {1..n} ordered by containment.
Poset interval_poset(std::size_t n);
Poset opposite(const Poset& p);
Poset antichain(std::size_t k);
Poset chain(std::size_t k);

/// Downward-closed subset of a poset.
struct Ideal {
  Bitset members;
  bool operator==(const Ideal& o) const = default;
};

/// All order ideals, sorted by (size, members). Iterative; no recursion.
std::vector<Ideal> order_ideals(const Poset& p);

/// Order isomorphism P -> Q as a vector image[i], or nullopt.
std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& p, const Poset& q);

}  // namespace torsionlab
