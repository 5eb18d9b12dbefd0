#include "torsionlab/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <tuple>

namespace torsionlab {

// ---------------------------------------------------------------------------
// Module

Module::Module(std::vector<std::size_t> dims, std::vector<Matrix> actions, Scalar p)
    : dims_(std::move(dims)), actions_(std::move(actions)), p_(p) {
  for (const auto& m : actions_) {
    if (m.prime() != p_) throw InvalidModule("action matrix over the wrong field");
  }
}

std::size_t Module::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

bool ModuleMap::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Matrix& m) { return m.is_zero(); });
}

// ---------------------------------------------------------------------------
// Algebra data and path basis

struct Algebra::Data {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  PrimeField field;
  bool acyclic = true;
};

namespace {

struct WalkedPath {
  std::size_t source;
  std::size_t target;
  Path arrows;
};

bool path_order(const Path& a, const Path& b) {
  // longest first so that row reduction keeps short paths as basis elements
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

}  // namespace

struct Algebra::Cache {
  struct Block {
    std::vector<Path> paths;                 // all paths v -> w up to max_len
    std::map<Path, std::size_t> column;      // path -> index in `paths`
    Matrix ideal;                            // rref rows, columns = `paths`
    std::vector<std::size_t> pivot_row;      // column -> row or npos
    std::vector<std::size_t> basis_column;   // basis index -> column
    std::vector<std::size_t> basis_index;    // column -> basis index or npos
  };

  std::once_flag basis_once;
  std::size_t max_len = 0;
  std::vector<std::vector<Block>> blocks;              // [v][w]
  std::vector<std::vector<std::vector<Path>>> basis;  // [v][w]
  std::vector<Module> projectives;

  std::once_flag injective_once;
  std::vector<Module> injectives;

  std::once_flag opposite_once;
  std::unique_ptr<Algebra> opposite;
};

static constexpr std::size_t npos = static_cast<std::size_t>(-1);

Algebra::Algebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                 std::vector<Relation> relations, Scalar p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  auto d = std::make_shared<Data>();
  d->vertices = std::move(vertices);
  d->arrows = std::move(arrows);
  d->relations = std::move(relations);
  d->field = PrimeField{p};
  const std::size_t n = d->vertices.size();
  for (const auto& a : d->arrows) {
    if (a.source >= n || a.target >= n) throw std::invalid_argument("arrow endpoint out of range");
  }
  for (const auto& r : d->relations) {
    if (r.empty()) throw std::invalid_argument("empty relation");
    std::size_t s = npos, t = npos;
    for (const auto& term : r) {
      if (term.path.size() < 2) {
        throw std::invalid_argument("relations must be combinations of paths of length >= 2");
      }
      for (auto a : term.path) {
        if (a >= d->arrows.size()) throw std::invalid_argument("relation arrow out of range");
      }
      for (std::size_t i = 1; i < term.path.size(); ++i) {
        if (d->arrows[term.path[i - 1]].target != d->arrows[term.path[i]].source) {
          throw std::invalid_argument("relation path is not composable");
        }
      }
      const auto ts = d->arrows[term.path.front()].source;
      const auto tt = d->arrows[term.path.back()].target;
      if (s == npos) {
        s = ts;
        t = tt;
      } else if (s != ts || t != tt) {
        throw std::invalid_argument("relation terms are not parallel paths");
      }
    }
  }
  // acyclicity by repeated source removal
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : d->arrows) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (!indeg[v]) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& a : d->arrows) {
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
    }
  }
  d->acyclic = removed == n;
  data_ = std::move(d);
  cache_ = std::make_shared<Cache>();
}

std::size_t Algebra::num_vertices() const { return data_->vertices.size(); }
const std::string& Algebra::vertex_label(std::size_t v) const { return data_->vertices[v]; }
const std::vector<std::string>& Algebra::vertex_labels() const { return data_->vertices; }
const std::vector<Arrow>& Algebra::arrows() const { return data_->arrows; }
const std::vector<Relation>& Algebra::relations() const { return data_->relations; }
Scalar Algebra::prime() const { return data_->field.p; }
bool Algebra::is_acyclic() const { return data_->acyclic; }

std::optional<std::size_t> Algebra::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < data_->arrows.size(); ++i) {
    if (data_->arrows[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Algebra::path_target(std::size_t source, const Path& path) const {
  std::size_t at = source;
  for (auto a : path) {
    if (data_->arrows[a].source != at) throw std::invalid_argument("path is not composable");
    at = data_->arrows[a].target;
  }
  return at;
}

namespace {

std::vector<WalkedPath> all_paths(const std::vector<Arrow>& arrows, std::size_t n,
                                  std::size_t max_len) {
  std::vector<WalkedPath> out;
  std::vector<WalkedPath> frontier;
  for (std::size_t v = 0; v < n; ++v) frontier.push_back({v, v, {}});
  for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
    std::vector<WalkedPath> next;
    for (const auto& p : frontier) {
      if (len < max_len) {
        for (std::size_t a = 0; a < arrows.size(); ++a) {
          if (arrows[a].source != p.target) continue;
          WalkedPath q = p;
          q.arrows.push_back(a);
          q.target = arrows[a].target;
          next.push_back(std::move(q));
        }
      }
      out.push_back(p);
    }
    frontier = std::move(next);
  }
  return out;
}

std::size_t longest_path(const std::vector<Arrow>& arrows, std::size_t n) {
  // acyclic: relax n times
  std::vector<std::size_t> best(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    for (const auto& a : arrows) best[a.target] = std::max(best[a.target], best[a.source] + 1);
  }
  return n ? *std::max_element(best.begin(), best.end()) : 0;
}

}  // namespace

const Algebra::Cache& Algebra::basis_cache() const {
  std::call_once(cache_->basis_once, [this] {
    const auto& d = *data_;
    const std::size_t n = d.vertices.size();
    const Scalar p = d.field.p;
    // truncate_terms: drop terms longer than max_len (sound once those paths
    // are known to lie in the ideal); otherwise skip such generators.
    auto build = [&](std::size_t max_len, bool truncate_terms) {
      Cache& c = *cache_;
      c.max_len = max_len;
      c.blocks.assign(n, std::vector<Cache::Block>(n));
      const auto walked = all_paths(d.arrows, n, max_len);
      std::vector<std::vector<const WalkedPath*>> ending_at(n), starting_at(n);
      for (const auto& w : walked) {
        c.blocks[w.source][w.target].paths.push_back(w.arrows);
        ending_at[w.target].push_back(&w);
        starting_at[w.source].push_back(&w);
      }
      for (auto& row : c.blocks) {
        for (auto& b : row) {
          std::sort(b.paths.begin(), b.paths.end(), path_order);
          for (std::size_t i = 0; i < b.paths.size(); ++i) b.column[b.paths[i]] = i;
        }
      }
      // ideal spanned by q1 * r * q2, truncated above max_len
      std::vector<std::vector<std::vector<std::vector<Scalar>>>> rows(
          n, std::vector<std::vector<std::vector<Scalar>>>(n));
      for (const auto& r : d.relations) {
        const auto s = d.arrows[r.front().path.front()].source;
        const auto t = d.arrows[r.front().path.back()].target;
        std::size_t shortest = npos;
        for (const auto& term : r) shortest = std::min(shortest, term.path.size());
        for (const auto* q1 : ending_at[s]) {
          for (const auto* q2 : starting_at[t]) {
            if (q1->arrows.size() + shortest + q2->arrows.size() > max_len) continue;
            auto& blk = c.blocks[q1->source][q2->target];
            std::vector<Scalar> vec(blk.paths.size(), 0);
            bool any = false;
            const std::size_t longest_total =
                q1->arrows.size() + q2->arrows.size() +
                std::max_element(r.begin(), r.end(), [](const auto& x, const auto& y) {
                  return x.path.size() < y.path.size();
                })->path.size();
            if (!truncate_terms && longest_total > max_len) continue;
            for (const auto& term : r) {
              Path full = q1->arrows;
              full.insert(full.end(), term.path.begin(), term.path.end());
              full.insert(full.end(), q2->arrows.begin(), q2->arrows.end());
              if (full.size() > max_len) continue;
              const auto col = blk.column.at(full);
              vec[col] = d.field.add(vec[col], d.field.reduce(term.coeff));
              any = true;
            }
            if (any) rows[q1->source][q2->target].push_back(std::move(vec));
          }
        }
      }
      c.basis.assign(n, std::vector<std::vector<Path>>(n));
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
          auto& blk = c.blocks[v][w];
          const std::size_t k = blk.paths.size();
          Matrix m(rows[v][w].size(), k, p);
          for (std::size_t i = 0; i < rows[v][w].size(); ++i) {
            for (std::size_t j = 0; j < k; ++j) m(i, j) = rows[v][w][i][j];
          }
          auto rr = rref(m);
          blk.ideal = rr.reduced.row_block(0, rr.rank);
          blk.pivot_row.assign(k, npos);
          for (std::size_t i = 0; i < rr.rank; ++i) blk.pivot_row[rr.pivots[i]] = i;
          blk.basis_index.assign(k, npos);
          // basis ordered shortest first
          for (std::size_t j = k; j-- > 0;) {
            if (blk.pivot_row[j] == npos) {
              blk.basis_index[j] = blk.basis_column.size();
              blk.basis_column.push_back(j);
              c.basis[v][w].push_back(blk.paths[j]);
            }
          }
        }
      }
    };

    if (d.acyclic) {
      build(longest_path(d.arrows, n), true);
    } else {
      std::size_t max_rel = 2;
      for (const auto& r : d.relations) {
        for (const auto& t : r) max_rel = std::max(max_rel, t.path.size());
      }
      bool ok = false;
      std::size_t len = max_rel;
      for (; len <= 24 && !ok; ++len) {
        build(len, false);
        // admissible once every path of length `len` lies in the ideal
        ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
          for (std::size_t w = 0; w < n && ok; ++w) {
            for (const auto& b : cache_->basis[v][w]) {
              if (b.size() == len) {
                ok = false;
                break;
              }
            }
          }
        }
      }
      if (!ok) {
        throw std::invalid_argument("relations do not bound path length: ideal not admissible");
      }
      build(len - 1, true);
    }

    auto& c = *cache_;
    c.projectives.clear();
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> dims(n);
      for (std::size_t w = 0; w < n; ++w) dims[w] = c.basis[v][w].size();
      std::vector<Matrix> acts;
      for (const auto& a : d.arrows) {
        Matrix m(dims[a.target], dims[a.source], p);
        for (std::size_t j = 0; j < dims[a.source]; ++j) {
          Path q = c.basis[v][a.source][j];
          q.push_back(&a - d.arrows.data());
          const auto coords = reduce(v, q);
          for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
        }
        acts.push_back(std::move(m));
      }
      c.projectives.emplace_back(std::move(dims), std::move(acts), p);
    }
  });
  return *cache_;
}

const std::vector<Path>& Algebra::basis_paths(std::size_t v, std::size_t w) const {
  return basis_cache().basis.at(v).at(w);
}

std::size_t Algebra::dimension() const {
  const auto& c = basis_cache();
  std::size_t total = 0;
  for (const auto& row : c.basis) {
    for (const auto& b : row) total += b.size();
  }
  return total;
}

std::vector<Scalar> Algebra::reduce(std::size_t source, const Path& path) const {
  const auto& c = cache_->blocks.empty() ? basis_cache() : *cache_;
  const std::size_t target = path_target(source, path);
  const auto& blk = c.blocks[source][target];
  std::vector<Scalar> out(blk.basis_column.size(), 0);
  if (path.size() > c.max_len) return out;
  const auto col = blk.column.at(path);
  if (blk.pivot_row[col] == npos) {
    out[blk.basis_index[col]] = 1;
    return out;
  }
  const auto row = blk.pivot_row[col];
  for (std::size_t b = 0; b < out.size(); ++b) {
    out[b] = data_->field.neg(blk.ideal(row, blk.basis_column[b]));
  }
  return out;
}

const Module& Algebra::projective(std::size_t v) const {
  return basis_cache().projectives.at(v);
}

const Module& Algebra::injective(std::size_t v) const {
  std::call_once(cache_->injective_once, [this] {
    const auto& op = opposite();
    for (std::size_t w = 0; w < num_vertices(); ++w) {
      cache_->injectives.push_back(dual(op.projective(w)));
    }
  });
  return cache_->injectives.at(v);
}

Module Algebra::simple(std::size_t v) const {
  std::vector<std::size_t> dims(num_vertices(), 0);
  dims.at(v) = 1;
  std::vector<Matrix> acts;
  for (const auto& a : arrows()) acts.emplace_back(dims[a.target], dims[a.source], prime());
  return Module(std::move(dims), std::move(acts), prime());
}

Module Algebra::zero_module() const {
  std::vector<Matrix> acts(arrows().size(), Matrix(0, 0, prime()));
  return Module(std::vector<std::size_t>(num_vertices(), 0), std::move(acts), prime());
}

const Algebra& Algebra::opposite() const {
  std::call_once(cache_->opposite_once, [this] {
    std::vector<Arrow> arrs;
    for (const auto& a : arrows()) arrs.push_back({a.name, a.target, a.source});
    std::vector<Relation> rels;
    for (const auto& r : relations()) {
      Relation rr;
      for (const auto& t : r) rr.push_back({t.coeff, Path(t.path.rbegin(), t.path.rend())});
      rels.push_back(std::move(rr));
    }
    cache_->opposite =
        std::make_unique<Algebra>(vertex_labels(), std::move(arrs), std::move(rels), prime());
  });
  return *cache_->opposite;
}

Matrix Algebra::path_action(const Module& m, std::size_t source, const Path& path) const {
  Matrix acc = Matrix::identity(m.dim(source), prime());
  for (auto a : path) acc = m.action(a) * acc;
  return acc;
}

bool Algebra::satisfies_relations(const Module& m) const {
  for (const auto& r : relations()) {
    const auto s = arrows()[r.front().path.front()].source;
    const auto t = arrows()[r.front().path.back()].target;
    Matrix sum(m.dim(t), m.dim(s), prime());
    for (const auto& term : r) {
      sum = sum + path_action(m, s, term.path).scaled(data_->field.reduce(term.coeff));
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

void Algebra::validate(const Module& m) const {
  if (m.prime() != prime()) throw InvalidModule("module over a different field");
  if (m.dims().size() != num_vertices()) throw InvalidModule("dimension vector length");
  if (m.actions().size() != arrows().size()) throw InvalidModule("one matrix per arrow expected");
  for (std::size_t i = 0; i < arrows().size(); ++i) {
    const auto& a = arrows()[i];
    if (m.action(i).rows() != m.dim(a.target) || m.action(i).cols() != m.dim(a.source)) {
      throw InvalidModule("matrix for arrow " + a.name + " has the wrong shape");
    }
  }
  if (!satisfies_relations(m)) throw InvalidModule("module does not satisfy the relations");
}

// ---------------------------------------------------------------------------
// Standard algebras

namespace {

Algebra example_with(Scalar p, bool flipped) {
  std::vector<Arrow> arrows{{"a", 0, 1}, {"b", 1, 0}};
  Relation rel{{1, flipped ? Path{1, 0} : Path{0, 1}}};
  return Algebra({"1", "2"}, std::move(arrows), {rel}, p);
}

}  // namespace

Algebra example_algebra(Scalar p) {
  // The composition order of the relation is pinned by the facts the module
  // category must have: P2 injective and global dimension 2.
  for (bool flipped : {false, true}) {
    Algebra a = example_with(p, flipped);
    if (a.dimension() == 5 && isomorphic(a, a.projective(1), a.injective(1)) &&
        global_dimension(a, 4).value == 2) {
      return a;
    }
  }
  throw std::logic_error("example algebra facts do not hold under either convention");
}

Algebra incidence_algebra(const Poset& poset, Scalar p) {
  std::vector<Arrow> arrows;
  for (auto [x, y] : poset.covers()) {
    arrows.push_back({poset.label(x) + "->" + poset.label(y), x, y});
  }
  const std::size_t n = poset.size();
  // all Hasse paths between each related pair
  std::vector<std::vector<std::vector<Path>>> paths(n, std::vector<std::vector<Path>>(n));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return poset.down_set(a).count() < poset.down_set(b).count();
  });
  for (std::size_t x = 0; x < n; ++x) paths[x][x].push_back({});
  for (auto y : order) {
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
      if (arrows[ai].target != y) continue;
      const auto z = arrows[ai].source;
      for (std::size_t x = 0; x < n; ++x) {
        for (const auto& q : paths[x][z]) {
          Path r = q;
          r.push_back(ai);
          paths[x][y].push_back(std::move(r));
        }
      }
    }
  }
  std::vector<Relation> rels;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || paths[x][y].size() < 2) continue;
      for (std::size_t k = 1; k < paths[x][y].size(); ++k) {
        rels.push_back({{1, paths[x][y][k]}, {-1, paths[x][y][0]}});
      }
    }
  }
  return Algebra(poset.labels(), std::move(arrows), std::move(rels), p);
}

Algebra linear_path_algebra(std::size_t n, Scalar p) {
  if (n == 0) throw std::invalid_argument("linear quiver needs at least one vertex");
  std::vector<std::string> verts;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) {
    verts.push_back(std::to_string(i + 1));
    if (i + 1 < n) arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  }
  return Algebra(std::move(verts), std::move(arrows), {}, p);
}

Algebra underlying_path_algebra(const Algebra& a) {
  return Algebra(a.vertex_labels(), a.arrows(), {}, a.prime());
}

// ---------------------------------------------------------------------------
// Maps

ModuleMap identity_map(const Module& m) {
  ModuleMap f;
  for (auto d : m.dims()) f.components.push_back(Matrix::identity(d, m.prime()));
  return f;
}

ModuleMap zero_map(const Module& from, const Module& to) {
  ModuleMap f;
  for (std::size_t v = 0; v < from.dims().size(); ++v) {
    f.components.emplace_back(to.dim(v), from.dim(v), from.prime());
  }
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    h.components.push_back(g.components[v] * f.components[v]);
  }
  return h;
}

ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    h.components.push_back(f.components[v] + g.components[v]);
  }
  return h;
}

ModuleMap scale_map(const ModuleMap& f, Scalar s) {
  ModuleMap h;
  for (const auto& c : f.components) h.components.push_back(c.scaled(s));
  return h;
}

bool is_module_map(const Algebra& a, const Module& from, const Module& to, const ModuleMap& f) {
  if (f.components.size() != a.num_vertices()) return false;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if (f.components[v].rows() != to.dim(v) || f.components[v].cols() != from.dim(v)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.arrows().size(); ++i) {
    const auto& ar = a.arrows()[i];
    if (!(to.action(i) * f.components[ar.source] == f.components[ar.target] * from.action(i))) {
      return false;
    }
  }
  return true;
}

bool is_injective_map(const ModuleMap& f) {
  return std::all_of(f.components.begin(), f.components.end(),
                     [](const Matrix& m) { return rank(m) == m.cols(); });
}

bool is_surjective_map(const ModuleMap& f) {
  return std::all_of(f.components.begin(), f.components.end(),
                     [](const Matrix& m) { return rank(m) == m.rows(); });
}

bool is_isomorphism(const ModuleMap& f) { return is_injective_map(f) && is_surjective_map(f); }

namespace {

std::vector<std::size_t> hom_offsets(const Module& m, const Module& n) {
  std::vector<std::size_t> off(m.dims().size() + 1, 0);
  for (std::size_t v = 0; v < m.dims().size(); ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  return off;
}

Matrix hom_system(const Algebra& a, const Module& m, const Module& n,
                  const std::vector<std::size_t>& off) {
  const auto& f = m.actions().empty() ? PrimeField{a.prime()} : m.action(0).field();
  std::size_t eqs = 0;
  for (const auto& ar : a.arrows()) eqs += n.dim(ar.target) * m.dim(ar.source);
  Matrix sys(eqs, off.back(), a.prime());
  std::size_t row = 0;
  for (std::size_t i = 0; i < a.arrows().size(); ++i) {
    const auto& ar = a.arrows()[i];
    const auto v = ar.source, w = ar.target;
    const Matrix& na = n.action(i);
    const Matrix& ma = m.action(i);
    // N_a f_v - f_w M_a = 0, entry (r, c)
    for (std::size_t r = 0; r < n.dim(w); ++r) {
      for (std::size_t c = 0; c < m.dim(v); ++c, ++row) {
        for (std::size_t k = 0; k < n.dim(v); ++k) {
          auto& e = sys(row, off[v] + k * m.dim(v) + c);
          e = f.add(e, na(r, k));
        }
        for (std::size_t k = 0; k < m.dim(w); ++k) {
          auto& e = sys(row, off[w] + r * m.dim(w) + k);
          e = f.sub(e, ma(k, c));
        }
      }
    }
  }
  return sys;
}

ModuleMap map_from_vector(const Module& m, const Module& n, const std::vector<std::size_t>& off,
                          const std::vector<Scalar>& x) {
  ModuleMap f;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    Matrix c(n.dim(v), m.dim(v), m.prime());
    for (std::size_t r = 0; r < n.dim(v); ++r) {
      for (std::size_t k = 0; k < m.dim(v); ++k) c(r, k) = x[off[v] + r * m.dim(v) + k];
    }
    f.components.push_back(std::move(c));
  }
  return f;
}

std::vector<Scalar> flatten(const ModuleMap& f) {
  std::vector<Scalar> out;
  for (const auto& c : f.components) {
    for (std::size_t r = 0; r < c.rows(); ++r) {
      for (std::size_t k = 0; k < c.cols(); ++k) out.push_back(c(r, k));
    }
  }
  return out;
}

std::size_t rank_of_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t width,
                         Scalar p) {
  if (rows.empty() || width == 0) return 0;
  Matrix m(rows.size(), width, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return rank(m);
}

}  // namespace

std::vector<ModuleMap> hom(const Algebra& a, const Module& m, const Module& n) {
  const auto off = hom_offsets(m, n);
  const auto k = kernel(hom_system(a, m, n, off));
  std::vector<ModuleMap> out;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    out.push_back(map_from_vector(m, n, off, k.basis().row(i)));
  }
  return out;
}

std::size_t hom_dim(const Algebra& a, const Module& m, const Module& n) {
  const auto off = hom_offsets(m, n);
  if (off.back() == 0) return 0;
  return off.back() - rank(hom_system(a, m, n, off));
}

// ---------------------------------------------------------------------------
// Constructions

Module direct_sum(const Module& x, const Module& y) {
  std::vector<std::size_t> dims(x.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = x.dim(v) + y.dim(v);
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < x.actions().size(); ++i) {
    acts.push_back(torsionlab::direct_sum(x.action(i), y.action(i)));
  }
  return Module(std::move(dims), std::move(acts), x.prime());
}

Module direct_sum(const std::vector<Module>& xs, const Algebra& a) {
  Module acc = a.zero_module();
  for (const auto& x : xs) acc = direct_sum(acc, x);
  return acc;
}

Submodule restrict_to(const Algebra& a, const Module& m, const std::vector<Subspace>& parts) {
  const std::size_t n = a.num_vertices();
  std::vector<std::size_t> dims(n);
  ModuleMap incl;
  for (std::size_t v = 0; v < n; ++v) {
    dims[v] = parts[v].dim();
    incl.components.push_back(parts[v].basis_columns());
  }
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < a.arrows().size(); ++i) {
    const auto& ar = a.arrows()[i];
    const Matrix img = m.action(i) * incl.components[ar.source];
    Matrix x = Matrix(parts[ar.target].dim(), img.cols(), a.prime());
    const auto& piv = parts[ar.target].pivots();
    for (std::size_t r = 0; r < piv.size(); ++r) {
      for (std::size_t c = 0; c < img.cols(); ++c) x(r, c) = img(piv[r], c);
    }
    if (!(incl.components[ar.target] * x == img)) {
      throw std::logic_error("subspaces are not closed under the action of " + ar.name);
    }
    acts.push_back(std::move(x));
  }
  return {Module(std::move(dims), std::move(acts), a.prime()), std::move(incl)};
}

Quotient quotient_by(const Algebra& a, const Module& m, const std::vector<Subspace>& parts) {
  const std::size_t n = a.num_vertices();
  const auto& f = PrimeField{a.prime()};
  std::vector<std::size_t> dims(n);
  ModuleMap proj;
  std::vector<Matrix> lifts;  // unit columns at non-pivot coordinates
  for (std::size_t v = 0; v < n; ++v) {
    const auto& u = parts[v];
    const std::size_t md = m.dim(v);
    std::vector<std::size_t> row_of(md, npos);
    for (std::size_t i = 0; i < u.pivots().size(); ++i) row_of[u.pivots()[i]] = i;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < md; ++j) {
      if (row_of[j] == npos) free.push_back(j);
    }
    dims[v] = free.size();
    Matrix pi(free.size(), md, a.prime());
    for (std::size_t j = 0; j < md; ++j) {
      if (row_of[j] == npos) {
        const auto pos = std::find(free.begin(), free.end(), j) - free.begin();
        pi(static_cast<std::size_t>(pos), j) = 1;
      } else {
        for (std::size_t q = 0; q < free.size(); ++q) {
          pi(q, j) = f.neg(u.basis()(row_of[j], free[q]));
        }
      }
    }
    Matrix lift(md, free.size(), a.prime());
    for (std::size_t q = 0; q < free.size(); ++q) lift(free[q], q) = 1;
    proj.components.push_back(std::move(pi));
    lifts.push_back(std::move(lift));
  }
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < a.arrows().size(); ++i) {
    const auto& ar = a.arrows()[i];
    acts.push_back(proj.components[ar.target] * m.action(i) * lifts[ar.source]);
  }
  return {Module(std::move(dims), std::move(acts), a.prime()), std::move(proj)};
}

Submodule kernel(const Algebra& a, const Module& from, const ModuleMap& f) {
  std::vector<Subspace> parts;
  for (const auto& c : f.components) parts.push_back(torsionlab::kernel(c));
  return restrict_to(a, from, parts);
}

Submodule image(const Algebra& a, const Module& to, const ModuleMap& f) {
  std::vector<Subspace> parts;
  for (const auto& c : f.components) parts.push_back(torsionlab::image(c));
  return restrict_to(a, to, parts);
}

Quotient cokernel(const Algebra& a, const Module& to, const ModuleMap& f) {
  std::vector<Subspace> parts;
  for (const auto& c : f.components) parts.push_back(torsionlab::image(c));
  return quotient_by(a, to, parts);
}

std::vector<Subspace> radical(const Algebra& a, const Module& m) {
  std::vector<Subspace> rad;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) rad.emplace_back(m.dim(v), a.prime());
  for (std::size_t i = 0; i < a.arrows().size(); ++i) {
    const auto t = a.arrows()[i].target;
    rad[t] = rad[t].sum(torsionlab::image(m.action(i)));
  }
  return rad;
}

std::vector<Subspace> socle(const Algebra& a, const Module& m) {
  std::vector<Subspace> soc;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) soc.push_back(Subspace::full(m.dim(v), a.prime()));
  for (std::size_t i = 0; i < a.arrows().size(); ++i) {
    const auto s = a.arrows()[i].source;
    soc[s] = soc[s].intersect(torsionlab::kernel(m.action(i)));
  }
  return soc;
}

std::vector<std::size_t> top_multiplicities(const Algebra& a, const Module& m) {
  const auto rad = radical(a, m);
  std::vector<std::size_t> out(a.num_vertices());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = m.dim(v) - rad[v].dim();
  return out;
}

std::vector<std::size_t> socle_multiplicities(const Algebra& a, const Module& m) {
  const auto soc = socle(a, m);
  std::vector<std::size_t> out(a.num_vertices());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = soc[v].dim();
  return out;
}

Module dual(const Module& m) {
  std::vector<Matrix> acts;
  for (const auto& x : m.actions()) acts.push_back(x.transpose());
  return Module(m.dims(), std::move(acts), m.prime());
}

ModuleMap dual(const ModuleMap& f) {
  ModuleMap g;
  for (const auto& c : f.components) g.components.push_back(c.transpose());
  return g;
}

// ---------------------------------------------------------------------------
// Covers, envelopes, resolutions

ProjectiveCover projective_cover(const Algebra& a, const Module& m) {
  if (m.is_zero()) throw ZeroModule();
  const std::size_t n = a.num_vertices();
  const auto rad = radical(a, m);
  ProjectiveCover pc;
  pc.multiplicities.assign(n, 0);
  std::vector<Module> copies;
  std::vector<std::vector<Matrix>> blocks(n);  // per target vertex, one block per copy
  for (std::size_t v = 0; v < n; ++v) {
    const Matrix gens = rad[v].complement_columns();
    pc.multiplicities[v] = gens.cols();
    for (std::size_t g = 0; g < gens.cols(); ++g) {
      const Matrix gen = gens.col_block(g, 1);
      copies.push_back(a.projective(v));
      for (std::size_t w = 0; w < n; ++w) {
        const auto& paths = a.basis_paths(v, w);
        Matrix blk(m.dim(w), paths.size(), a.prime());
        for (std::size_t j = 0; j < paths.size(); ++j) {
          const Matrix img = a.path_action(m, v, paths[j]) * gen;
          for (std::size_t r = 0; r < m.dim(w); ++r) blk(r, j) = img(r, 0);
        }
        blocks[w].push_back(std::move(blk));
      }
    }
  }
  pc.projective = direct_sum(copies, a);
  for (std::size_t w = 0; w < n; ++w) {
    Matrix acc(m.dim(w), 0, a.prime());
    for (const auto& b : blocks[w]) acc = hstack(acc, b);
    pc.cover.components.push_back(std::move(acc));
  }
  return pc;
}

InjectiveEnvelope injective_envelope(const Algebra& a, const Module& m) {
  const auto pc = projective_cover(a.opposite(), dual(m));
  return {dual(pc.projective), dual(pc.cover), pc.multiplicities};
}

Module syzygy(const Algebra& a, const Module& m, std::size_t n) {
  Module cur = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (cur.is_zero()) return cur;
    const auto pc = projective_cover(a, cur);
    cur = kernel(a, pc.projective, pc.cover).module;
  }
  return cur;
}

Module cosyzygy(const Algebra& a, const Module& m, std::size_t n) {
  Module cur = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (cur.is_zero()) return cur;
    const auto env = injective_envelope(a, cur);
    cur = cokernel(a, env.injective, env.embedding).module;
  }
  return cur;
}

Resolution min_resolution(const Algebra& a, const Module& m, std::size_t length) {
  Resolution r;
  r.syzygies.push_back(m);
  ModuleMap prev_inclusion;  // Omega^i -> P_{i-1}
  for (std::size_t i = 0; i <= length; ++i) {
    const Module& k = r.syzygies[i];
    Module p;
    ModuleMap cover;
    if (k.is_zero()) {
      p = a.zero_module();
      cover = zero_map(p, k);
      r.multiplicities.emplace_back(a.num_vertices(), 0);
    } else {
      auto pc = projective_cover(a, k);
      p = std::move(pc.projective);
      cover = std::move(pc.cover);
      r.multiplicities.push_back(std::move(pc.multiplicities));
    }
    auto ker = kernel(a, p, cover);
    if (i == 0) {
      r.augmentation = cover;
    } else {
      r.differentials.push_back(compose(prev_inclusion, cover));
    }
    r.terms.push_back(std::move(p));
    r.syzygies.push_back(std::move(ker.module));
    prev_inclusion = std::move(ker.inclusion);
  }
  return r;
}

bool is_exact(const Algebra& a, const Module& m, const Resolution& r) {
  (void)a;
  auto total_rank = [](const ModuleMap& f) {
    std::size_t s = 0;
    for (const auto& c : f.components) s += rank(c);
    return s;
  };
  if (!is_surjective_map(r.augmentation)) return false;
  if (r.terms.size() < 2) return true;
  if (!compose(r.augmentation, r.differentials[0]).is_zero()) return false;
  if (r.terms[0].total_dim() - m.total_dim() != total_rank(r.differentials[0])) return false;
  for (std::size_t i = 0; i + 1 < r.differentials.size(); ++i) {
    if (!compose(r.differentials[i], r.differentials[i + 1]).is_zero()) return false;
    const auto kernel_dim = r.terms[i + 1].total_dim() - total_rank(r.differentials[i]);
    if (kernel_dim != total_rank(r.differentials[i + 1])) return false;
  }
  return true;
}

bool is_minimal(const Algebra& a, const Resolution& r) {
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    const Module s = a.simple(v);
    for (std::size_t i = 0; i < r.differentials.size(); ++i) {
      for (const auto& g : hom(a, r.terms[i], s)) {
        if (!compose(g, r.differentials[i]).is_zero()) return false;
      }
    }
  }
  return true;
}

std::size_t ext_dim(const Algebra& a, const Resolution& r, const Module& n, std::size_t degree) {
  if (r.terms.size() < degree + 2) {
    throw std::invalid_argument("resolution too short for the requested Ext degree");
  }
  const auto hn = hom(a, r.terms[degree], n);
  std::vector<std::vector<Scalar>> forward;
  std::size_t width = 0;
  for (const auto& g : hn) {
    forward.push_back(flatten(compose(g, r.differentials[degree])));
    width = forward.back().size();
  }
  const std::size_t cocycles = hn.size() - rank_of_rows(forward, width, a.prime());
  if (degree == 0) return cocycles;
  std::vector<std::vector<Scalar>> back;
  width = 0;
  for (const auto& h : hom(a, r.terms[degree - 1], n)) {
    back.push_back(flatten(compose(h, r.differentials[degree - 1])));
    width = back.back().size();
  }
  return cocycles - rank_of_rows(back, width, a.prime());
}

std::size_t ext_dim(const Algebra& a, const Module& m, const Module& n, std::size_t degree) {
  if (degree == 0) return hom_dim(a, m, n);
  return ext_dim(a, min_resolution(a, m, degree + 1), n, degree);
}

std::size_t ext_dim_injective(const Algebra& a, const Module& m, const Module& n,
                              std::size_t degree) {
  return ext_dim(a.opposite(), dual(n), dual(m), degree);
}

// ---------------------------------------------------------------------------
// Ext^1 by cocycles

Ext1Space ext1(const Algebra& a, const Module& x, const Module& y) {
  const PrimeField f{a.prime()};
  const auto& arrows = a.arrows();
  std::vector<std::size_t> off(arrows.size() + 1, 0);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    off[i + 1] = off[i] + y.dim(arrows[i].target) * x.dim(arrows[i].source);
  }
  const std::size_t unknowns = off.back();
  Ext1Space out;
  if (unknowns == 0) return out;
  auto var = [&](std::size_t arrow, std::size_t r, std::size_t c) {
    return off[arrow] + r * x.dim(arrows[arrow].source) + c;
  };

  // cocycle condition: every relation vanishes on the extension
  std::vector<std::vector<Scalar>> rows;
  for (const auto& rel : a.relations()) {
    const auto s0 = arrows[rel.front().path.front()].source;
    const auto t0 = arrows[rel.front().path.back()].target;
    const std::size_t base = rows.size();
    rows.resize(base + y.dim(t0) * x.dim(s0), std::vector<Scalar>(unknowns, 0));
    for (const auto& term : rel) {
      const Scalar coeff = f.reduce(term.coeff);
      const auto& path = term.path;
      for (std::size_t i = 0; i < path.size(); ++i) {
        const auto ai = path[i];
        Matrix left = Matrix::identity(y.dim(arrows[ai].target), a.prime());
        for (std::size_t j = i + 1; j < path.size(); ++j) left = y.action(path[j]) * left;
        Matrix right = Matrix::identity(x.dim(s0), a.prime());
        for (std::size_t j = 0; j < i; ++j) right = x.action(path[j]) * right;
        for (std::size_t r = 0; r < left.rows(); ++r) {
          for (std::size_t k = 0; k < left.cols(); ++k) {
            if (!left(r, k)) continue;
            for (std::size_t l = 0; l < right.rows(); ++l) {
              for (std::size_t c = 0; c < right.cols(); ++c) {
                if (!right(l, c)) continue;
                auto& e = rows[base + r * x.dim(s0) + c][var(ai, k, l)];
                e = f.add(e, f.mul(coeff, f.mul(left(r, k), right(l, c))));
              }
            }
          }
        }
      }
    }
  }
  Subspace cocycles = Subspace::full(unknowns, a.prime());
  if (!rows.empty()) {
    Matrix sys(rows.size(), unknowns, a.prime());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < unknowns; ++j) sys(i, j) = rows[i][j];
    }
    cocycles = torsionlab::kernel(sys);
  }

  // coboundaries Z_a = Y_a h_s - h_t X_a for elementary h at one vertex
  std::vector<std::vector<Scalar>> cob;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    for (std::size_t k = 0; k < y.dim(v); ++k) {
      for (std::size_t l = 0; l < x.dim(v); ++l) {
        std::vector<Scalar> z(unknowns, 0);
        for (std::size_t i = 0; i < arrows.size(); ++i) {
          const auto s = arrows[i].source, t = arrows[i].target;
          if (s == v) {
            for (std::size_t r = 0; r < y.dim(t); ++r) {
              auto& e = z[var(i, r, l)];
              e = f.add(e, y.action(i)(r, k));
            }
          }
          if (t == v) {
            for (std::size_t c = 0; c < x.dim(s); ++c) {
              auto& e = z[var(i, k, c)];
              e = f.sub(e, x.action(i)(l, c));
            }
          }
        }
        cob.push_back(std::move(z));
      }
    }
  }
  Matrix cob_m(cob.size(), unknowns, a.prime());
  for (std::size_t i = 0; i < cob.size(); ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) cob_m(i, j) = cob[i][j];
  }
  const Subspace boundaries = Subspace::from_rows(cob_m);

  // representatives of cocycles modulo boundaries
  Matrix reduced(cocycles.dim(), unknowns, a.prime());
  for (std::size_t i = 0; i < cocycles.dim(); ++i) {
    auto z = cocycles.basis().row(i);
    for (std::size_t b = 0; b < boundaries.dim(); ++b) {
      const auto pc = boundaries.pivots()[b];
      const Scalar c = z[pc];
      if (!c) continue;
      for (std::size_t j = 0; j < unknowns; ++j) {
        z[j] = f.sub(z[j], f.mul(c, boundaries.basis()(b, j)));
      }
    }
    for (std::size_t j = 0; j < unknowns; ++j) reduced(i, j) = z[j];
  }
  const Subspace classes = Subspace::from_rows(reduced);
  for (std::size_t i = 0; i < classes.dim(); ++i) {
    const auto z = classes.basis().row(i);
    std::vector<Matrix> cocycle;
    for (std::size_t ar = 0; ar < arrows.size(); ++ar) {
      Matrix zm(y.dim(arrows[ar].target), x.dim(arrows[ar].source), a.prime());
      for (std::size_t r = 0; r < zm.rows(); ++r) {
        for (std::size_t c = 0; c < zm.cols(); ++c) zm(r, c) = z[var(ar, r, c)];
      }
      cocycle.push_back(std::move(zm));
    }
    out.basis.push_back(std::move(cocycle));
  }
  return out;
}

Module extension_module(const Module& x, const Module& y, const std::vector<Matrix>& cocycle) {
  std::vector<std::size_t> dims(x.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = y.dim(v) + x.dim(v);
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < x.actions().size(); ++i) {
    const Matrix& ya = y.action(i);
    const Matrix& xa = x.action(i);
    Matrix e(ya.rows() + xa.rows(), ya.cols() + xa.cols(), x.prime());
    for (std::size_t r = 0; r < ya.rows(); ++r) {
      for (std::size_t c = 0; c < ya.cols(); ++c) e(r, c) = ya(r, c);
      for (std::size_t c = 0; c < xa.cols(); ++c) e(r, ya.cols() + c) = cocycle[i](r, c);
    }
    for (std::size_t r = 0; r < xa.rows(); ++r) {
      for (std::size_t c = 0; c < xa.cols(); ++c) e(ya.rows() + r, ya.cols() + c) = xa(r, c);
    }
    acts.push_back(std::move(e));
  }
  return Module(std::move(dims), std::move(acts), x.prime());
}

namespace {

/// Calls fn for every nonzero coefficient vector of length e whose first
/// nonzero entry is 1.
void for_each_projective_point(std::size_t e, Scalar p,
                               const std::function<void(const std::vector<Scalar>&)>& fn) {
  std::vector<Scalar> c(e, 0);
  for (std::size_t lead = 0; lead < e; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    const std::size_t rest = e - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < rest; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t t = k;
      for (std::size_t i = 0; i < rest; ++i) {
        c[lead + 1 + i] = static_cast<Scalar>(t % p);
        t /= p;
      }
      fn(c);
    }
  }
}

std::vector<Matrix> combine(const std::vector<std::vector<Matrix>>& basis,
                            const std::vector<Scalar>& coeffs) {
  std::vector<Matrix> out = basis.front();
  for (auto& m : out) m = m.scaled(0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!coeffs[i]) continue;
    for (std::size_t ar = 0; ar < out.size(); ++ar) out[ar] = out[ar] + basis[i][ar].scaled(coeffs[i]);
  }
  return out;
}

}  // namespace

std::vector<Module> extension_middle_terms(const Algebra& a, const Module& x, const Module& y) {
  const auto e = ext1(a, x, y);
  std::vector<Module> out;
  if (e.dim() == 0) return out;
  for_each_projective_point(e.dim(), a.prime(), [&](const std::vector<Scalar>& c) {
    out.push_back(extension_module(x, y, combine(e.basis, c)));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

ModuleMap combination(const std::vector<ModuleMap>& basis, const std::vector<Scalar>& c) {
  ModuleMap out = scale_map(basis.front(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i]) out = add_maps(out, scale_map(basis[i], c[i]));
  }
  return out;
}

/// Fitting decomposition of M along an endomorphism; nullopt when phi is
/// nilpotent or invertible.
std::optional<std::pair<Module, Module>> fitting_split(const Algebra& a, const Module& m,
                                                       const ModuleMap& phi) {
  std::size_t power = 1;
  for (auto d : m.dims()) power = std::max(power, d);
  bool nilpotent = true, invertible = true;
  std::vector<Matrix> stable;
  for (const auto& c : phi.components) {
    stable.push_back(c.pow(power));
    if (!stable.back().is_zero()) nilpotent = false;
    if (rank(c) != c.rows()) invertible = false;
  }
  if (nilpotent || invertible) return std::nullopt;
  std::vector<Subspace> ker, img;
  for (const auto& s : stable) {
    ker.push_back(torsionlab::kernel(s));
    img.push_back(torsionlab::image(s));
  }
  return std::make_pair(restrict_to(a, m, ker).module, restrict_to(a, m, img).module);
}

/// Searches span(basis) for an element accepted by `hit`: basis elements,
/// pairwise sums, seeded random combinations, then exhaustively when
/// p^dim is within the bound. Returns {found, exhausted}.
template <class Hit>
std::pair<bool, bool> search_span(const std::vector<ModuleMap>& basis, Scalar p,
                                  const SearchOptions& opt, Hit&& hit) {
  const std::size_t e = basis.size();
  if (e == 0) return {false, true};
  std::vector<Scalar> c(e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    std::fill(c.begin(), c.end(), 0);
    c[i] = 1;
    if (hit(combination(basis, c))) return {true, false};
  }
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = i + 1; j < e; ++j) {
      std::fill(c.begin(), c.end(), 0);
      c[i] = c[j] = 1;
      if (hit(combination(basis, c))) return {true, false};
    }
  }
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<Scalar> coin(0, p - 1);
  for (std::size_t t = 0; t < opt.random_tries; ++t) {
    for (auto& x : c) x = coin(rng);
    if (hit(combination(basis, c))) return {true, false};
  }
  if (e > opt.exponent) return {false, false};
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < e; ++i) total *= p;
  for (std::uint64_t k = 1; k < total; ++k) {
    std::uint64_t t = k;
    for (std::size_t i = 0; i < e; ++i) {
      c[i] = static_cast<Scalar>(t % p);
      t /= p;
    }
    if (hit(combination(basis, c))) return {true, true};
  }
  return {false, true};
}

/// A proper Fitting split, or nullopt if M is indecomposable.
std::optional<std::pair<Module, Module>> find_split(const Algebra& a, const Module& m,
                                                    const SearchOptions& opt) {
  const auto end = hom(a, m, m);
  if (end.size() <= 1) return std::nullopt;
  std::optional<std::pair<Module, Module>> split;
  const auto [found, exhausted] = search_span(end, a.prime(), opt, [&](const ModuleMap& phi) {
    split = fitting_split(a, m, phi);
    return split.has_value();
  });
  if (found) return split;
  if (!exhausted) throw EndTooLarge(end.size());
  return std::nullopt;
}

}  // namespace

bool is_indecomposable(const Algebra& a, const Module& m, const SearchOptions& opt) {
  if (m.is_zero()) return false;
  return !find_split(a, m, opt).has_value();
}

std::vector<Module> split_completely(const Algebra& a, const Module& m, const SearchOptions& opt) {
  std::vector<Module> out, work{m};
  while (!work.empty()) {
    Module cur = std::move(work.back());
    work.pop_back();
    if (cur.is_zero()) continue;
    if (auto s = find_split(a, cur, opt)) {
      work.push_back(std::move(s->first));
      work.push_back(std::move(s->second));
    } else {
      out.push_back(std::move(cur));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Module& x, const Module& y) {
    return std::make_pair(x.total_dim(), x.dims()) < std::make_pair(y.total_dim(), y.dims());
  });
  return out;
}

std::vector<std::pair<Module, std::size_t>> decompose(const Algebra& a, const Module& m,
                                                      const SearchOptions& opt) {
  std::vector<std::pair<Module, std::size_t>> out;
  for (auto& s : split_completely(a, m, opt)) {
    bool merged = false;
    for (auto& [rep, mult] : out) {
      if (isomorphic(a, rep, s, opt)) {
        ++mult;
        merged = true;
        break;
      }
    }
    if (!merged) out.emplace_back(std::move(s), 1);
  }
  return out;
}

bool isomorphic(const Algebra& a, const Module& m, const Module& n, const SearchOptions& opt) {
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  if (top_multiplicities(a, m) != top_multiplicities(a, n) ||
      socle_multiplicities(a, m) != socle_multiplicities(a, n)) {
    return false;
  }
  const auto mn = hom(a, m, n);
  const auto end_m = hom_dim(a, m, m);
  if (mn.size() != end_m || hom_dim(a, n, m) != end_m || hom_dim(a, n, n) != end_m) return false;
  const auto [found, exhausted] = search_span(mn, a.prime(), opt, [](const ModuleMap& f) {
    return is_isomorphism(f);
  });
  if (found) return true;
  if (exhausted) return false;
  // too many maps to enumerate: compare Krull-Schmidt decompositions
  auto sm = split_completely(a, m, opt);
  auto sn = split_completely(a, n, opt);
  if (sm.size() != sn.size()) return false;
  if (sm.size() == 1) throw EndTooLarge(mn.size());
  std::vector<bool> used(sn.size(), false);
  for (const auto& x : sm) {
    bool matched = false;
    for (std::size_t j = 0; j < sn.size() && !matched; ++j) {
      if (!used[j] && isomorphic(a, x, sn[j], opt)) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Indecomposable enumeration

std::vector<Module> indecomposables(const Algebra& a, std::size_t dim_bound,
                                    const SearchOptions& opt) {
  const std::size_t n = a.num_vertices();
  const Scalar p = a.prime();
  std::vector<Module> found;
  for (std::size_t v = 0; v < n; ++v) found.push_back(a.simple(v));
  std::vector<Module> simples = found;

  // ext_cache[i][v]: Ext^1(found[i], S_v) by cocycles
  std::vector<std::vector<Ext1Space>> ext_cache;
  auto extend_cache = [&] {
    while (ext_cache.size() < found.size()) {
      const auto& x = found[ext_cache.size()];
      std::vector<Ext1Space> row;
      for (std::size_t v = 0; v < n; ++v) row.push_back(ext1(a, x, simples[v]));
      ext_cache.push_back(std::move(row));
    }
  };

  const std::size_t max_total = dim_bound * n;
  for (std::size_t total = 2; total <= max_total; ++total) {
    extend_cache();
    std::vector<Module> fresh;
    auto is_new = [&](const Module& e) {
      for (const auto* pool : {&found, &fresh}) {
        for (const auto& k : *pool) {
          if (k.dims() == e.dims() && isomorphic(a, k, e, opt)) return false;
        }
      }
      return true;
    };
    for (std::size_t v = 0; v < n; ++v) {
      // quotient X = M / S_v, a sum of known indecomposables each with Ext^1(X_i, S_v) != 0
      std::vector<std::size_t> cand;
      for (std::size_t i = 0; i < found.size(); ++i) {
        if (ext_cache[i][v].dim() == 0) continue;
        if (found[i].total_dim() + 1 > total) continue;
        if (found[i].dim(v) + 1 > dim_bound) continue;
        cand.push_back(i);
      }
      std::vector<std::size_t> chosen;
      std::vector<std::size_t> room(n, dim_bound);
      room[v] -= 1;
      std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from,
                                                               std::size_t left) {
        if (left == 0) {
          // assign a nonzero class to each summand
          std::vector<std::vector<std::vector<Scalar>>> options;
          for (std::size_t k = 0; k < chosen.size(); ++k) {
            std::vector<std::vector<Scalar>> pts;
            for_each_projective_point(ext_cache[chosen[k]][v].dim(), p,
                                      [&](const std::vector<Scalar>& c) { pts.push_back(c); });
            options.push_back(std::move(pts));
          }
          std::vector<std::size_t> sel(chosen.size(), 0);
          std::vector<Module> summands;
          for (auto i : chosen) summands.push_back(found[i]);
          const Module x = direct_sum(summands, a);
          std::function<void(std::size_t)> assign = [&](std::size_t k) {
            if (k == chosen.size()) {
              // block cocycle over the direct sum
              std::vector<Matrix> z;
              for (std::size_t ar = 0; ar < a.arrows().size(); ++ar) {
                const auto t = a.arrows()[ar].target;
                Matrix acc(simples[v].dim(t), 0, p);
                for (std::size_t q = 0; q < chosen.size(); ++q) {
                  const auto& basis = ext_cache[chosen[q]][v].basis;
                  acc = hstack(acc, combine(basis, options[q][sel[q]])[ar]);
                }
                z.push_back(std::move(acc));
              }
              Module e = extension_module(x, simples[v], z);
              if (is_indecomposable(a, e, opt) && is_new(e)) fresh.push_back(std::move(e));
              return;
            }
            // repeated summands take strictly increasing classes
            const std::size_t start =
                (k > 0 && chosen[k] == chosen[k - 1]) ? sel[k - 1] + 1 : 0;
            for (std::size_t o = start; o < options[k].size(); ++o) {
              sel[k] = o;
              assign(k + 1);
            }
          };
          assign(0);
          return;
        }
        for (std::size_t ci = from; ci < cand.size(); ++ci) {
          const auto& x = found[cand[ci]];
          if (x.total_dim() > left) continue;
          bool fits = true;
          for (std::size_t w = 0; w < n && fits; ++w) fits = x.dim(w) <= room[w];
          if (!fits) continue;
          // multiplicity of a summand is at most dim Ext^1(X_i, S_v)
          const auto mult = static_cast<std::size_t>(
              std::count(chosen.begin(), chosen.end(), cand[ci]));
          if (mult >= ext_cache[cand[ci]][v].dim()) continue;
          for (std::size_t w = 0; w < n; ++w) room[w] -= x.dim(w);
          chosen.push_back(cand[ci]);
          pick(ci, left - x.total_dim());
          chosen.pop_back();
          for (std::size_t w = 0; w < n; ++w) room[w] += x.dim(w);
        }
      };
      pick(0, total - 1);
    }
    for (auto& e : fresh) found.push_back(std::move(e));
  }
  std::stable_sort(found.begin(), found.end(), [](const Module& x, const Module& y) {
    return std::make_pair(x.total_dim(), x.dims()) < std::make_pair(y.total_dim(), y.dims());
  });
  return found;
}

GlobalDimension global_dimension(const Algebra& a, std::size_t probe_bound) {
  std::size_t gd = 0;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    Module cur = a.simple(v);
    std::size_t pd = 0;
    while (true) {
      Module next = syzygy(a, cur, 1);
      if (next.is_zero()) break;
      if (pd == probe_bound) return {probe_bound, true};
      ++pd;
      cur = std::move(next);
    }
    gd = std::max(gd, pd);
  }
  return {gd, false};
}

std::string describe(const Algebra& a, const Module& m) {
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if (m.dims() == a.simple(v).dims()) return "S" + a.vertex_label(v);
  }
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if (isomorphic(a, m, a.projective(v))) return "P" + a.vertex_label(v);
  }
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if (isomorphic(a, m, a.injective(v))) return "I" + a.vertex_label(v);
  }
  std::string s = "(";
  for (std::size_t v = 0; v < m.dims().size(); ++v) s += (v ? "," : "") + std::to_string(m.dim(v));
  return s + ")";
}

}  // namespace torsionlab
