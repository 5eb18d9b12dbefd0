#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/bitset.hpp"
#include "torsionlab/poset.hpp"

namespace torsionlab {

class NotALattice : public std::invalid_argument {
 public:
  NotALattice(std::size_t a, std::size_t b, const std::string& what)
      : std::invalid_argument(what), a(a), b(b) {}
  std::size_t a, b;
};

/// Finite lattice with precomputed meet and join tables.
class FinLattice {
 public:
  FinLattice() = default;

  /// Throws NotALattice when some pair lacks a unique meet or join.
  static FinLattice from_order(const Poset& order);

  std::size_t size() const { return order_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return order_.leq(a, b); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  const Poset& order() const { return order_; }
  const std::string& label(std::size_t a) const { return order_.label(a); }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return order_.covers();
  }

 private:
  Poset order_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

FinLattice ideal_lattice(const Poset& p);
/// Same elements, reversed order.
FinLattice dual(const FinLattice& l);

bool is_distributive(const FinLattice& l);
bool is_join_semidistributive(const FinLattice& l);
bool is_meet_semidistributive(const FinLattice& l);
inline bool is_semidistributive(const FinLattice& l) {
  return is_join_semidistributive(l) && is_meet_semidistributive(l);
}

struct Irreducible {
  std::size_t element;
  /// The unique lower cover (join-irreducible) or upper cover (meet-irreducible).
  std::size_t cover;
};

std::vector<Irreducible> join_irreducibles(const FinLattice& l);
std::vector<Irreducible> meet_irreducibles(const FinLattice& l);

/// Equivalence on lattice elements; block_of[x] is the least element of x's block.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(std::vector<std::size_t> block_of);

  static Congruence discrete(std::size_t n);
  static Congruence full(std::size_t n);
  /// Canonicalises an arbitrary block labelling.
  static Congruence from_labels(const std::vector<std::size_t>& labels);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_of(std::size_t x) const { return block_of_[x]; }
  bool same(std::size_t x, std::size_t y) const { return block_of_[x] == block_of_[y]; }
  std::size_t block_count() const;
  std::vector<std::vector<std::size_t>> blocks() const;
  const std::vector<std::size_t>& canonical() const { return block_of_; }
  /// Every block of *this lies inside a block of `o`.
  bool refines(const Congruence& o) const;

  bool operator==(const Congruence& o) const = default;
  bool operator<(const Congruence& o) const { return block_of_ < o.block_of_; }

 private:
  std::vector<std::size_t> block_of_;
};

struct CongruenceHash {
  std::size_t operator()(const Congruence& c) const;
};

/// Meet and join compatibility, checked for all pairs and all c.
bool is_compatible(const FinLattice& l, const Congruence& c);
Congruence principal_congruence(const FinLattice& l, std::size_t a, std::size_t b);
Congruence congruence_join(const Congruence& x, const Congruence& y);

struct CongruenceLattice {
  FinLattice lattice;                    // ordered by refinement
  std::vector<Congruence> congruences;  // element i of `lattice`
};

CongruenceLattice congruence_lattice(const FinLattice& l);

/// Join-irreducible congruences ordered by inclusion, so that Con(L) is the
/// lattice of order ideals of this poset for congruence-uniform L.
Poset forcing_poset(const FinLattice& l);

bool is_congruence_uniform(const FinLattice& l);

/// Lattice isomorphism as image[i], or nullopt. Candidate maps are built from
/// bijections of join-irreducibles and then checked against both tables.
std::optional<std::vector<std::size_t>> lattice_isomorphic(const FinLattice& l,
                                                           const FinLattice& m);

/// True when `image` is a bijection preserving meet and join tables.
bool verify_lattice_isomorphism(const FinLattice& l, const FinLattice& m,
                                const std::vector<std::size_t>& image);

}  // namespace torsionlab
