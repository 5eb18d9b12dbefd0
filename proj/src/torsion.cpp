#include "torsionlab/torsion.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "torsionlab/catalan.hpp"

namespace torsionlab {

// ---------------------------------------------------------------------------
// Catalog

Catalog::Catalog(Algebra algebra, std::size_t dim_bound, SearchOptions opt)
    : algebra_(std::move(algebra)), opt_(opt) {
  modules_ = indecomposables(algebra_, dim_bound, opt_);
  build();
}

Catalog::Catalog(Algebra algebra, std::vector<Module> modules, SearchOptions opt)
    : algebra_(std::move(algebra)), opt_(opt), modules_(std::move(modules)) {
  build();
}

Subcat Catalog::all() const {
  Subcat s(size());
  s.set();
  return s;
}

Subcat Catalog::single(std::size_t i) const {
  Subcat s(size());
  s.set(i);
  return s;
}

std::optional<std::size_t> Catalog::index_of(const Module& m) const {
  for (std::size_t i = 0; i < modules_.size(); ++i) {
    if (modules_[i].dims() == m.dims() && isomorphic(algebra_, modules_[i], m, opt_)) return i;
  }
  return std::nullopt;
}

Subcat Catalog::summands(const Module& m) const {
  Subcat s(size());
  for (const auto& x : split_completely(algebra_, m, opt_)) {
    const auto i = index_of(x);
    if (!i) {
      std::string dims;
      for (auto d : x.dims()) dims += (dims.empty() ? "" : ",") + std::to_string(d);
      throw NotInCatalog("indecomposable with dimension vector (" + dims +
                         ") is missing from the catalog; raise the dimension bound");
    }
    s.set(*i);
  }
  return s;
}

std::size_t Catalog::ext_dim(std::size_t i, std::size_t j, std::size_t n) const {
  if (n == 0) return hom_[i][j];
  if (n > ext_.size()) throw std::out_of_range("Ext degree not tabulated");
  return ext_[n - 1][i][j];
}

const Subcat& Catalog::syzygy_summands(std::size_t i, std::size_t n) const {
  if (n == 0 || n > syz_.size()) throw std::out_of_range("syzygy degree not tabulated");
  return syz_[n - 1][i];
}

const Subcat& Catalog::cosyzygy_summands(std::size_t i, std::size_t n) const {
  if (n == 0 || n > cosyz_.size()) throw std::out_of_range("cosyzygy degree not tabulated");
  return cosyz_[n - 1][i];
}

Subcat Catalog::right_perp(const Subcat& s) const {
  Subcat out = all();
  for (auto i : members(s)) out &= right_perp_rows_[i];
  return out;
}

Subcat Catalog::left_perp(const Subcat& s) const {
  Subcat out = all();
  for (auto j : members(s)) out &= left_perp_rows_[j];
  return out;
}

Subcat Catalog::fac(const Subcat& s) const {
  Subcat out = s;
  const auto ms = members(s);
  if (ms.empty()) return out;
  const std::size_t nv = algebra_.num_vertices();
  for (std::size_t x = 0; x < size(); ++x) {
    if (out.test(x)) continue;
    bool full = true;
    for (std::size_t v = 0; v < nv && full; ++v) {
      Subspace tr(modules_[x].dim(v), algebra_.prime());
      for (auto m : ms) {
        tr = tr.sum(trace_[m][x][v]);
        if (tr.dim() == modules_[x].dim(v)) break;
      }
      full = tr.dim() == modules_[x].dim(v);
    }
    if (full) out.set(x);
  }
  return out;
}

Subcat Catalog::sub(const Subcat& s) const {
  Subcat out = s;
  const auto ms = members(s);
  if (ms.empty()) return out;
  const std::size_t nv = algebra_.num_vertices();
  for (std::size_t x = 0; x < size(); ++x) {
    if (out.test(x)) continue;
    bool zero = true;
    for (std::size_t v = 0; v < nv && zero; ++v) {
      Subspace rej = Subspace::full(modules_[x].dim(v), algebra_.prime());
      for (auto m : ms) {
        rej = rej.intersect(reject_[x][m][v]);
        if (rej.dim() == 0) break;
      }
      zero = rej.dim() == 0;
    }
    if (zero) out.set(x);
  }
  return out;
}

std::string Catalog::describe(const Subcat& s) const {
  if (s.none()) return "0";
  std::string out;
  for (auto i : members(s)) out += (out.empty() ? "" : ",") + names_[i];
  return out;
}

void Catalog::build() {
  const Algebra& a = algebra_;
  const std::size_t k = modules_.size();
  const std::size_t nv = a.num_vertices();

  names_.clear();
  std::map<std::string, std::size_t> seen;
  for (const auto& m : modules_) names_.push_back(torsionlab::describe(a, m));
  for (auto& n : names_) ++seen[n];
  std::map<std::string, std::size_t> counter;
  for (auto& n : names_) {
    if (seen[n] > 1) n += "#" + std::to_string(++counter[n]);
  }

  hom_.assign(k, std::vector<std::size_t>(k, 0));
  trace_.assign(k, std::vector<std::vector<Subspace>>(k));
  reject_.assign(k, std::vector<std::vector<Subspace>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto maps = hom(a, modules_[i], modules_[j]);
      hom_[i][j] = maps.size();
      auto& tr = trace_[i][j];
      auto& rj = reject_[i][j];
      for (std::size_t v = 0; v < nv; ++v) {
        tr.emplace_back(modules_[j].dim(v), a.prime());
        rj.push_back(Subspace::full(modules_[i].dim(v), a.prime()));
      }
      for (const auto& f : maps) {
        for (std::size_t v = 0; v < nv; ++v) {
          tr[v] = tr[v].sum(image(f.components[v]));
          rj[v] = rj[v].intersect(kernel(f.components[v]));
        }
      }
    }
  }
  right_perp_rows_.assign(k, Subcat(k));
  left_perp_rows_.assign(k, Subcat(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (hom_[i][j] == 0) {
        right_perp_rows_[i].set(j);
        left_perp_rows_[j].set(i);
      }
    }
  }

  simples_.clear();
  for (std::size_t v = 0; v < nv; ++v) {
    const auto s = index_of(a.simple(v));
    if (!s) throw NotInCatalog("simple module missing from the catalog");
    simples_.push_back(*s);
  }

  ext_sum_.assign(k, std::vector<Subcat>(k, Subcat(k)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& e : extension_middle_terms(a, modules_[i], modules_[j])) {
        ext_sum_[i][j] |= summands(e);
      }
    }
  }

  constexpr std::size_t degrees = 2;
  ext_.assign(degrees, std::vector<std::vector<std::size_t>>(k, std::vector<std::size_t>(k, 0)));
  syz_.assign(degrees, std::vector<Subcat>(k, Subcat(k)));
  cosyz_.assign(degrees, std::vector<Subcat>(k, Subcat(k)));
  proj_cover_.assign(k, Subcat(k));
  inj_env_.assign(k, Subcat(k));
  std::vector<std::optional<std::size_t>> proj(nv), inj(nv);
  for (std::size_t i = 0; i < k; ++i) {
    const auto r = min_resolution(a, modules_[i], degrees + 1);
    for (std::size_t n = 1; n <= degrees; ++n) {
      for (std::size_t j = 0; j < k; ++j) ext_[n - 1][i][j] = torsionlab::ext_dim(a, r, modules_[j], n);
      syz_[n - 1][i] = summands(r.syzygies[n]);
      cosyz_[n - 1][i] = summands(cosyzygy(a, modules_[i], n));
    }
    const auto env = injective_envelope(a, modules_[i]);
    for (std::size_t v = 0; v < nv; ++v) {
      if (r.multiplicities[0][v]) {
        if (!proj[v]) proj[v] = index_of(a.projective(v));
        if (!proj[v]) throw NotInCatalog("indecomposable projective missing from the catalog");
        proj_cover_[i].set(*proj[v]);
      }
      if (env.multiplicities[v]) {
        if (!inj[v]) inj[v] = index_of(a.injective(v));
        if (!inj[v]) throw NotInCatalog("indecomposable injective missing from the catalog");
        inj_env_[i].set(*inj[v]);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Closures

bool is_closed_under_quotients(const Catalog& c, const Subcat& s) { return c.fac(s) == s; }

bool is_closed_under_submodules(const Catalog& c, const Subcat& s) { return c.sub(s) == s; }

bool is_closed_under_extensions(const Catalog& c, const Subcat& s) {
  const auto ms = members(s);
  for (auto i : ms) {
    for (auto j : ms) {
      if (!c.extension_summands(i, j).is_subset_of(s)) return false;
    }
  }
  return true;
}

bool is_torsion_class(const Catalog& c, const Subcat& s) {
  return is_closed_under_quotients(c, s) && is_closed_under_extensions(c, s);
}

bool is_torsion_free_class(const Catalog& c, const Subcat& s) {
  return is_closed_under_submodules(c, s) && is_closed_under_extensions(c, s);
}

namespace {

template <class Close>
Subcat extension_fixpoint(const Catalog& c, Subcat s, Close&& close) {
  while (true) {
    Subcat next = close(s);
    const auto ms = members(next);
    for (auto i : ms) {
      for (auto j : ms) next |= c.extension_summands(i, j);
    }
    if (next == s) return s;
    s = std::move(next);
  }
}

}  // namespace

Subcat torsion_closure(const Catalog& c, const Subcat& s) {
  const Subcat t = extension_fixpoint(c, s, [&](const Subcat& x) { return c.fac(x); });
  if (t != c.left_perp(c.right_perp(s))) {
    throw std::logic_error("torsion closure audit failed for {" + c.describe(s) + "}: fixpoint {" +
                           c.describe(t) + "} differs from the double perpendicular");
  }
  return t;
}

Subcat free_closure(const Catalog& c, const Subcat& s) {
  const Subcat f = extension_fixpoint(c, s, [&](const Subcat& x) { return c.sub(x); });
  if (f != c.right_perp(c.left_perp(s))) {
    throw std::logic_error("torsion-free closure audit failed for {" + c.describe(s) +
                           "}: fixpoint {" + c.describe(f) +
                           "} differs from the double perpendicular");
  }
  return f;
}

// ---------------------------------------------------------------------------
// Torsion pairs

TorsionPair pair_from_torsion_class(const Catalog& c, const Subcat& tors) {
  return {tors, c.right_perp(tors)};
}

TorsionLattice enumerate_torsion_pairs(const Catalog& c, const EnumerationLimits& lim) {
  const auto start = std::chrono::steady_clock::now();
  auto check_budget = [&](std::size_t count) {
    if (count > lim.cap) throw BudgetExceeded(count, "class cap exceeded");
    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    if (el.count() > lim.seconds) throw BudgetExceeded(count, "time budget exceeded");
  };

  std::vector<Subcat> generators;
  for (std::size_t i = 0; i < c.size(); ++i) generators.push_back(torsion_closure(c, c.single(i)));

  std::unordered_set<Subcat, BitsetHash> seen{c.empty()};
  std::vector<Subcat> classes{c.empty()};
  std::deque<Subcat> queue{c.empty()};
  while (!queue.empty()) {
    const Subcat t = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      if (g.is_subset_of(t)) continue;
      Subcat j = c.left_perp(c.right_perp(t | g));
      if (seen.insert(j).second) {
        classes.push_back(j);
        queue.push_back(std::move(j));
        check_budget(classes.size());
      }
    }
  }

  // every class is a fixpoint of the constructive closure, and meets stay inside
  for (const auto& t : classes) {
    if (torsion_closure(c, t) != t) {
      throw std::logic_error("enumerated class {" + c.describe(t) + "} is not closed");
    }
  }
  for (std::size_t x = 0; x < classes.size(); ++x) {
    for (std::size_t y = x + 1; y < classes.size(); ++y) {
      if (!seen.count(classes[x] & classes[y])) {
        throw std::logic_error("intersection of torsion classes is not a torsion class");
      }
    }
    check_budget(classes.size());
  }

  std::sort(classes.begin(), classes.end(), [](const Subcat& a, const Subcat& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.test(i) != b.test(i)) return a.test(i);
    }
    return false;
  });
  const std::size_t k = classes.size();
  std::vector<Bitset> down(k, Bitset(k));
  std::vector<std::string> labels;
  TorsionLattice out;
  for (std::size_t b = 0; b < k; ++b) {
    labels.push_back("{" + (classes[b].none() ? std::string() : c.describe(classes[b])) + "}");
    for (std::size_t a = 0; a < k; ++a) {
      if (classes[a].is_subset_of(classes[b])) down[b].set(a);
    }
    out.pairs.push_back(pair_from_torsion_class(c, classes[b]));
  }
  out.lattice =
      FinLattice::from_order(Poset::from_down_sets(std::move(labels), std::move(down)));
  return out;
}

bool is_omega_n(const Catalog& c, const TorsionPair& t, std::size_t n, OmegaRoute route) {
  if (n == 0) throw std::invalid_argument("omega_n requires n >= 1");
  switch (route) {
    case OmegaRoute::ext:
      for (auto i : members(t.tors)) {
        for (auto j : members(t.free)) {
          if (c.ext_dim(i, j, n)) return false;
        }
      }
      return true;
    case OmegaRoute::syzygy:
      for (auto i : members(t.tors)) {
        if (!c.syzygy_summands(i, n).is_subset_of(t.tors)) return false;
      }
      return true;
    case OmegaRoute::cosyzygy:
      for (auto j : members(t.free)) {
        if (!c.cosyzygy_summands(j, n).is_subset_of(t.free)) return false;
      }
      return true;
  }
  return false;
}

bool is_hereditary(const Catalog& c, const TorsionPair& t) {
  return is_closed_under_submodules(c, t.tors);
}

bool is_cohereditary(const Catalog& c, const TorsionPair& t) {
  return is_closed_under_quotients(c, t.free);
}

bool is_hereditary_by_envelopes(const Catalog& c, const TorsionPair& t) {
  for (auto j : members(t.free)) {
    if (!c.injective_envelope_summands(j).is_subset_of(t.free)) return false;
  }
  return true;
}

bool is_cohereditary_by_covers(const Catalog& c, const TorsionPair& t) {
  for (auto i : members(t.tors)) {
    if (!c.projective_cover_summands(i).is_subset_of(t.tors)) return false;
  }
  return true;
}

bool is_split(const Catalog& c, const TorsionPair& t) {
  for (auto j : members(t.free)) {
    for (auto i : members(t.tors)) {
      if (c.ext_dim(j, i, 1)) return false;
    }
  }
  return true;
}

bool is_serre(const Catalog& c, const Subcat& s) {
  return is_closed_under_submodules(c, s) && is_closed_under_quotients(c, s) &&
         is_closed_under_extensions(c, s);
}

// ---------------------------------------------------------------------------
// omega lattice through simples

std::vector<std::pair<std::size_t, std::size_t>> ext_quiver(const Algebra& a) {
  std::vector<Module> simples;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) simples.push_back(a.simple(v));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < simples.size(); ++x) {
    for (std::size_t y = 0; y < simples.size(); ++y) {
      if (ext1(a, simples[x], simples[y]).dim()) out.emplace_back(x, y);
    }
  }
  return out;
}

FinLattice omega_lattice_via_simples(const Algebra& a) {
  const std::size_t n = a.num_vertices();
  std::vector<Bitset> reach(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v) reach[v].set(v);
  for (auto [x, y] : ext_quiver(a)) reach[x].set(y);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (reach[i].test(k)) reach[i] |= reach[k];
    }
  }
  // strongly connected components collapse to one poset element
  std::vector<std::size_t> comp(n, n);
  std::vector<Bitset> comp_members;
  for (std::size_t v = 0; v < n; ++v) {
    if (comp[v] != n) continue;
    Bitset m(n);
    for (std::size_t w = 0; w < n; ++w) {
      if (reach[v].test(w) && reach[w].test(v)) {
        comp[w] = comp_members.size();
        m.set(w);
      }
    }
    comp_members.push_back(std::move(m));
  }
  const std::size_t k = comp_members.size();
  std::vector<std::string> comp_labels(k);
  std::vector<Bitset> down(k, Bitset(k));
  for (std::size_t b = 0; b < k; ++b) {
    const auto rep = members(comp_members[b]).front();
    for (std::size_t w = 0; w < n; ++w) {
      if (reach[rep].test(w)) down[b].set(comp[w]);
    }
  }
  // successor-closed sets are the down-sets of "is reached from"
  const Poset reached = Poset::from_down_sets(std::move(comp_labels), std::move(down));
  std::vector<Bitset> sets;
  for (const auto& ideal : order_ideals(reached)) {
    Bitset s(n);
    for (auto cidx : members(ideal.members)) s |= comp_members[cidx];
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end(), [](const Bitset& x, const Bitset& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x.test(i) != y.test(i)) return x.test(i);
    }
    return false;
  });
  const std::size_t m = sets.size();
  std::vector<Bitset> order(m, Bitset(m));
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < m; ++b) {
    std::string s;
    for (auto v : members(sets[b])) s += (s.empty() ? "" : ",") + a.vertex_label(v);
    labels.push_back("{" + s + "}");
    for (std::size_t x = 0; x < m; ++x) {
      if (sets[x].is_subset_of(sets[b])) order[b].set(x);
    }
  }
  return FinLattice::from_order(Poset::from_down_sets(std::move(labels), std::move(order)));
}

std::vector<std::size_t> verify_theorem_1(std::size_t n) {
  if (n < 2 || n > 8) throw std::invalid_argument("verify_theorem_1 supports 2 <= n <= 8");
  const FinLattice dyck = dyck_lattice(n);
  const FinLattice omega =
      omega_lattice_via_simples(incidence_algebra(opposite(interval_poset(n - 1))));
  if (dyck.size() != omega.size()) {
    throw VerificationFailed("size mismatch: Dyck lattice has " + std::to_string(dyck.size()) +
                             " elements, omega lattice has " + std::to_string(omega.size()));
  }
  auto iso = lattice_isomorphic(dyck, omega);
  if (!iso) throw VerificationFailed("no lattice isomorphism between Dyck and omega lattices");
  if (!verify_lattice_isomorphism(dyck, omega, *iso)) {
    throw VerificationFailed("candidate isomorphism fails the meet/join tables");
  }
  return *iso;
}

}  // namespace torsionlab
