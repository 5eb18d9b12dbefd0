#pragma once

// Finite-dimensional algebras kQ/I over F_p and their right modules.
//
// Conventions: paths compose left to right, so the path [a, b] means "a then
// b". A right module is a representation: a vector space per vertex and, for
// each arrow a: v -> w, a matrix of shape dim(w) x dim(v) acting on column
// vectors. The path [a1, ..., ak] acts by M(ak) * ... * M(a1). The indecomposable
// projective P_v = e_v A is spanned by the paths starting at v.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/linalg.hpp"
#include "torsionlab/poset.hpp"

namespace torsionlab {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

using Path = std::vector<std::size_t>;  // arrow indices

struct PathTerm {
  std::int64_t coeff;
  Path path;
};
using Relation = std::vector<PathTerm>;

class InvalidModule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroModule : public std::invalid_argument {
 public:
  ZeroModule() : std::invalid_argument("operation requires a nonzero module") {}
};

class EndTooLarge : public std::runtime_error {
 public:
  explicit EndTooLarge(std::size_t dim)
      : std::runtime_error("endomorphism search space too large (dim " + std::to_string(dim) +
                           ")"),
        dim(dim) {}
  std::size_t dim;
};

class Module {
 public:
  Module() = default;
  Module(std::vector<std::size_t> dims, std::vector<Matrix> actions, Scalar p);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  const Matrix& action(std::size_t a) const { return actions_[a]; }
  const std::vector<Matrix>& actions() const { return actions_; }
  Scalar prime() const { return p_; }
  bool is_zero() const { return total_dim() == 0; }

  bool operator==(const Module& o) const = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> actions_;
  Scalar p_ = 2;
};

/// One matrix per vertex, components[v] of shape dim N_v x dim M_v.
struct ModuleMap {
  std::vector<Matrix> components;
  bool is_zero() const;
  bool operator==(const ModuleMap& o) const = default;
};

class Algebra {
 public:
  Algebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
          std::vector<Relation> relations, Scalar p = 2);

  std::size_t num_vertices() const;
  const std::string& vertex_label(std::size_t v) const;
  const std::vector<std::string>& vertex_labels() const;
  const std::vector<Arrow>& arrows() const;
  const std::vector<Relation>& relations() const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;
  Scalar prime() const;
  bool is_acyclic() const;

  /// Basis paths from v to w (the empty path is e_v).
  const std::vector<Path>& basis_paths(std::size_t v, std::size_t w) const;
  std::size_t dimension() const;
  /// Coordinates of a path starting at `source` in basis_paths(source, end).
  std::vector<Scalar> reduce(std::size_t source, const Path& path) const;
  std::size_t path_target(std::size_t source, const Path& path) const;

  const Module& projective(std::size_t v) const;
  const Module& injective(std::size_t v) const;
  Module simple(std::size_t v) const;
  Module zero_module() const;

  /// Reversed arrows and relations; cached.
  const Algebra& opposite() const;

  /// Action of a path on a module.
  Matrix path_action(const Module& m, std::size_t source, const Path& path) const;
  bool satisfies_relations(const Module& m) const;
  /// Throws InvalidModule on shape or relation failure.
  void validate(const Module& m) const;

 private:
  struct Data;
  struct Cache;
  std::shared_ptr<const Data> data_;
  std::shared_ptr<Cache> cache_;
  const Cache& basis_cache() const;
};

// ---------------------------------------------------------------------------
// Standard algebras

/// kQ/<ab> on 1 <-> 2 with a: 1 -> 2, b: 2 -> 1.
Algebra example_algebra(Scalar p = 2);
/// Quiver = Hasse diagram of `poset` (x -> y for x covered by y), full
/// commutativity relations.
Algebra incidence_algebra(const Poset& poset, Scalar p = 2);
/// Linear quiver 1 -> 2 -> ... -> n without relations.
Algebra linear_path_algebra(std::size_t n, Scalar p = 2);
/// The quiver of `a` with no relations.
Algebra underlying_path_algebra(const Algebra& a);

// ---------------------------------------------------------------------------
// Maps

ModuleMap identity_map(const Module& m);
ModuleMap zero_map(const Module& from, const Module& to);
/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale_map(const ModuleMap& f, Scalar s);
bool is_module_map(const Algebra& a, const Module& from, const Module& to, const ModuleMap& f);
bool is_injective_map(const ModuleMap& f);
bool is_surjective_map(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);

/// Basis of Hom_A(M, N).
std::vector<ModuleMap> hom(const Algebra& a, const Module& m, const Module& n);
std::size_t hom_dim(const Algebra& a, const Module& m, const Module& n);

// ---------------------------------------------------------------------------
// Constructions

Module direct_sum(const Module& x, const Module& y);
Module direct_sum(const std::vector<Module>& xs, const Algebra& a);

struct Submodule {
  Module module;
  ModuleMap inclusion;
};
struct Quotient {
  Module module;
  ModuleMap projection;
};

/// Submodule spanned by a family of per-vertex subspaces closed under the action.
Submodule restrict_to(const Algebra& a, const Module& m, const std::vector<Subspace>& parts);
Quotient quotient_by(const Algebra& a, const Module& m, const std::vector<Subspace>& parts);
Submodule kernel(const Algebra& a, const Module& from, const ModuleMap& f);
Submodule image(const Algebra& a, const Module& to, const ModuleMap& f);
Quotient cokernel(const Algebra& a, const Module& to, const ModuleMap& f);
/// Per-vertex radical: sum of images of incoming arrows.
std::vector<Subspace> radical(const Algebra& a, const Module& m);
/// Per-vertex socle: common kernel of outgoing arrows.
std::vector<Subspace> socle(const Algebra& a, const Module& m);
std::vector<std::size_t> top_multiplicities(const Algebra& a, const Module& m);
std::vector<std::size_t> socle_multiplicities(const Algebra& a, const Module& m);

/// The dual D(M), a module over a.opposite(). Dualising twice is the identity.
Module dual(const Module& m);
ModuleMap dual(const ModuleMap& f);

// ---------------------------------------------------------------------------
// Homological algebra

struct ProjectiveCover {
  Module projective;
  ModuleMap cover;
  std::vector<std::size_t> multiplicities;  // copies of P_v
};
struct InjectiveEnvelope {
  Module injective;
  ModuleMap embedding;
  std::vector<std::size_t> multiplicities;  // copies of I_v
};

/// Throws ZeroModule for M = 0.
ProjectiveCover projective_cover(const Algebra& a, const Module& m);
InjectiveEnvelope injective_envelope(const Algebra& a, const Module& m);
/// Omega^n(M); Omega^0(M) = M; zero propagates.
Module syzygy(const Algebra& a, const Module& m, std::size_t n);
Module cosyzygy(const Algebra& a, const Module& m, std::size_t n);

/// ... -> P_1 -> P_0 -> M -> 0. differentials[i] : P_{i+1} -> P_i.
struct Resolution {
  std::vector<Module> terms;
  std::vector<ModuleMap> differentials;
  ModuleMap augmentation;
  std::vector<Module> syzygies;  // syzygies[i] = Omega^i(M), i = 0..length+1
  std::vector<std::vector<std::size_t>> multiplicities;
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

Resolution min_resolution(const Algebra& a, const Module& m, std::size_t length);
/// Compositions vanish and homology is zero at every computed stage.
bool is_exact(const Algebra& a, const Module& m, const Resolution& r);
/// Hom(P_., S) has zero differentials for every simple S.
bool is_minimal(const Algebra& a, const Resolution& r);

/// dim Ext^n(M, N) from a minimal projective resolution of M.
std::size_t ext_dim(const Algebra& a, const Module& m, const Module& n, std::size_t degree);
std::size_t ext_dim(const Algebra& a, const Resolution& r, const Module& n, std::size_t degree);
/// dim Ext^n(M, N) from an injective coresolution of N (computed over the
/// opposite algebra by duality).
std::size_t ext_dim_injective(const Algebra& a, const Module& m, const Module& n,
                              std::size_t degree);

/// Ext^1(X, Y) realised by cocycles: an extension 0 -> Y -> E -> X -> 0 is
/// E(a) = [[Y(a), Z(a)], [0, X(a)]] with Z(a) : X(source) -> Y(target).
struct Ext1Space {
  std::size_t dim() const { return basis.size(); }
  std::vector<std::vector<Matrix>> basis;  // cocycle per class, one matrix per arrow
};

Ext1Space ext1(const Algebra& a, const Module& x, const Module& y);
Module extension_module(const Module& x, const Module& y, const std::vector<Matrix>& cocycle);
/// Middle terms of the nonsplit extensions of X by Y, one per class up to scalars.
std::vector<Module> extension_middle_terms(const Algebra& a, const Module& x, const Module& y);

// ---------------------------------------------------------------------------
// Decomposition

struct SearchOptions {
  /// Exhaustive searches inside End(M) or Hom(M, N) stop above p^exponent elements.
  std::size_t exponent = 12;
  std::size_t random_tries = 64;
};

bool is_indecomposable(const Algebra& a, const Module& m, const SearchOptions& opt = {});
/// Krull-Schmidt decomposition as (summand, multiplicity), summands up to isomorphism.
std::vector<std::pair<Module, std::size_t>> decompose(const Algebra& a, const Module& m,
                                                      const SearchOptions& opt = {});
/// Indecomposable summands with repetition (no grouping).
std::vector<Module> split_completely(const Algebra& a, const Module& m,
                                     const SearchOptions& opt = {});
bool isomorphic(const Algebra& a, const Module& m, const Module& n,
                const SearchOptions& opt = {});

/// All indecomposables whose dimension vector is bounded entrywise by
/// `dim_bound`, up to isomorphism, sorted by total dimension then dimension
/// vector. Built by extending known modules by simples.
std::vector<Module> indecomposables(const Algebra& a, std::size_t dim_bound,
                                    const SearchOptions& opt = {});

struct GlobalDimension {
  std::size_t value;
  bool exceeded;  // true: the global dimension is larger than `value`
};
GlobalDimension global_dimension(const Algebra& a, std::size_t probe_bound);

/// Names like S1, P2, I1 when M is isomorphic to a simple, projective or
/// injective indecomposable; otherwise the dimension vector.
std::string describe(const Algebra& a, const Module& m);

}  // namespace torsionlab
