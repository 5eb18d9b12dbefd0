#pragma once

// Torsion pairs over a fixed list of indecomposable modules. Subcategories are
// bitsets over the list; additive closure is implicit.

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/algebra.hpp"
#include "torsionlab/bitset.hpp"
#include "torsionlab/lattice.hpp"

namespace torsionlab {

using Subcat = Bitset;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t count, const std::string& what)
      : std::runtime_error(what + " after " + std::to_string(count) + " classes"), count(count) {}
  std::size_t count;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A module is not isomorphic to any entry of the catalog.
class NotInCatalog : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The indecomposables of an algebra together with the tables the torsion
/// predicates need. Modules are indexed 0..size()-1.
class Catalog {
 public:
  /// Enumerates indecomposables with entries bounded by dim_bound.
  Catalog(Algebra algebra, std::size_t dim_bound = 2, SearchOptions opt = {});
  Catalog(Algebra algebra, std::vector<Module> modules, SearchOptions opt = {});

  const Algebra& algebra() const { return algebra_; }
  std::size_t size() const { return modules_.size(); }
  const Module& module(std::size_t i) const { return modules_[i]; }
  const std::vector<Module>& modules() const { return modules_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const SearchOptions& options() const { return opt_; }

  std::optional<std::size_t> index_of(const Module& m) const;
  /// Indices of the indecomposable summands (as a set). Throws NotInCatalog.
  Subcat summands(const Module& m) const;

  Subcat empty() const { return Subcat(size()); }
  Subcat all() const;
  Subcat single(std::size_t i) const;

  std::size_t hom_dim(std::size_t i, std::size_t j) const { return hom_[i][j]; }
  /// dim Ext^n(i, j) for n = 1, 2, from minimal projective resolutions.
  std::size_t ext_dim(std::size_t i, std::size_t j, std::size_t n) const;
  /// Members X with Hom(X, j) = 0 for j in s, and the dual.
  Subcat right_perp(const Subcat& s) const;
  Subcat left_perp(const Subcat& s) const;
  /// Indecomposables that are quotients of a sum of members (trace is everything).
  Subcat fac(const Subcat& s) const;
  /// Indecomposables that embed in a sum of members (reject is zero).
  Subcat sub(const Subcat& s) const;
  /// Summands of middle terms of extensions 0 -> j -> E -> i -> 0.
  const Subcat& extension_summands(std::size_t i, std::size_t j) const { return ext_sum_[i][j]; }
  /// Summands of Omega^n(i) and Omega^{-n}(i), n = 1, 2.
  const Subcat& syzygy_summands(std::size_t i, std::size_t n) const;
  const Subcat& cosyzygy_summands(std::size_t i, std::size_t n) const;
  const Subcat& projective_cover_summands(std::size_t i) const { return proj_cover_[i]; }
  const Subcat& injective_envelope_summands(std::size_t i) const { return inj_env_[i]; }
  /// The simple modules as catalog indices, by vertex.
  const std::vector<std::size_t>& simples() const { return simples_; }

  std::string describe(const Subcat& s) const;

 private:
  void build();
  Algebra algebra_;
  SearchOptions opt_;
  std::vector<Module> modules_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> hom_;
  std::vector<std::vector<std::vector<Subspace>>> trace_;  // [from][to] per vertex
  std::vector<std::vector<std::vector<Subspace>>> reject_;  // [from][to] per vertex
  std::vector<std::vector<Subcat>> ext_sum_;
  std::vector<std::vector<std::vector<std::size_t>>> ext_;  // [n-1][i][j]
  std::vector<std::vector<Subcat>> syz_, cosyz_;           // [n-1][i]
  std::vector<Subcat> proj_cover_, inj_env_;
  std::vector<Subcat> right_perp_rows_, left_perp_rows_;
  std::vector<std::size_t> simples_;
};

// ---------------------------------------------------------------------------
// Closures

bool is_closed_under_quotients(const Catalog& c, const Subcat& s);
bool is_closed_under_submodules(const Catalog& c, const Subcat& s);
bool is_closed_under_extensions(const Catalog& c, const Subcat& s);
bool is_torsion_class(const Catalog& c, const Subcat& s);
bool is_torsion_free_class(const Catalog& c, const Subcat& s);

/// Smallest torsion class containing s: fixpoint of quotient and extension
/// closure, audited against left_perp(right_perp(s)). Throws std::logic_error
/// if the audit fails.
Subcat torsion_closure(const Catalog& c, const Subcat& s);
Subcat free_closure(const Catalog& c, const Subcat& s);

// ---------------------------------------------------------------------------
// Torsion pairs

struct TorsionPair {
  Subcat tors;
  Subcat free;
  bool operator==(const TorsionPair& o) const = default;
};

TorsionPair pair_from_torsion_class(const Catalog& c, const Subcat& tors);

struct TorsionLattice {
  FinLattice lattice;
  std::vector<TorsionPair> pairs;  // pairs[i] is lattice element i
};

struct EnumerationLimits {
  std::size_t cap = 2000;
  double seconds = 600.0;
};

/// All torsion pairs, ordered by inclusion of torsion classes. Throws
/// BudgetExceeded when the cap or the time budget is passed.
TorsionLattice enumerate_torsion_pairs(const Catalog& c, const EnumerationLimits& lim = {});

enum class OmegaRoute { ext, syzygy, cosyzygy };

/// n in {1, 2}.
bool is_omega_n(const Catalog& c, const TorsionPair& t, std::size_t n, OmegaRoute route);
bool is_hereditary(const Catalog& c, const TorsionPair& t);
bool is_cohereditary(const Catalog& c, const TorsionPair& t);
/// Free class closed under injective envelopes (equivalent to is_hereditary).
bool is_hereditary_by_envelopes(const Catalog& c, const TorsionPair& t);
/// Torsion class closed under projective covers (equivalent to is_cohereditary).
bool is_cohereditary_by_covers(const Catalog& c, const TorsionPair& t);
bool is_split(const Catalog& c, const TorsionPair& t);
bool is_serre(const Catalog& c, const Subcat& s);

// ---------------------------------------------------------------------------
// omega-torsion pairs through simples

/// Successor-closed sets of simples under the Ext^1 quiver, by inclusion.
/// Element labels list the vertex labels of the simples.
FinLattice omega_lattice_via_simples(const Algebra& a);
/// Ext^1 quiver on simples as (x, y) pairs with Ext^1(S_x, S_y) != 0.
std::vector<std::pair<std::size_t, std::size_t>> ext_quiver(const Algebra& a);

/// dyck_lattice(n) against the omega lattice of the incidence algebra of
/// opposite(interval_poset(n-1)). Returns the verified isomorphism
/// (Dyck index -> omega index); throws VerificationFailed.
std::vector<std::size_t> verify_theorem_1(std::size_t n);

}  // namespace torsionlab
