#include "torsionlab/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace torsionlab {

namespace {

std::string pair_name(const Poset& p, std::size_t a, std::size_t b) {
  return p.label(a) + ", " + p.label(b);
}

}  // namespace

FinLattice FinLattice::from_order(const Poset& order) {
  const std::size_t n = order.size();
  if (n == 0) throw NotALattice(0, 0, "empty poset is not a lattice");
  FinLattice l;
  l.order_ = order;
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  std::vector<std::size_t> below(n), above(n);
  for (std::size_t a = 0; a < n; ++a) {
    below[a] = order.down_set(a).count();
    above[a] = order.up_set(a).count();
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Bitset lower = order.down_set(a) & order.down_set(b);
      std::size_t best = Bitset::npos;
      for (auto x = lower.find_first(); x != Bitset::npos; x = lower.find_next(x)) {
        if (best == Bitset::npos || below[x] > below[best]) best = x;
      }
      if (best == Bitset::npos || order.down_set(best) != lower) {
        throw NotALattice(a, b, "no greatest lower bound for " + pair_name(order, a, b));
      }
      const Bitset upper = order.up_set(a) & order.up_set(b);
      std::size_t least = Bitset::npos;
      for (auto x = upper.find_first(); x != Bitset::npos; x = upper.find_next(x)) {
        if (least == Bitset::npos || above[x] > above[least]) least = x;
      }
      if (least == Bitset::npos || order.up_set(least) != upper) {
        throw NotALattice(a, b, "no least upper bound for " + pair_name(order, a, b));
      }
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint32_t>(best);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint32_t>(least);
    }
  }
  const auto mins = order.minimal_elements();
  const auto maxs = order.maximal_elements();
  l.bottom_ = mins.front();
  l.top_ = maxs.front();
  return l;
}

FinLattice ideal_lattice(const Poset& p) {
  const auto ideals = order_ideals(p);
  const std::size_t n = ideals.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& id : ideals) {
    std::string s = "{";
    bool first = true;
    for (auto x : members(id.members)) {
      s += (first ? "" : ",") + p.label(x);
      first = false;
    }
    labels.push_back(s + "}");
  }
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      if (ideals[a].members.is_subset_of(ideals[b].members)) down[b].set(a);
    }
  }
  return FinLattice::from_order(Poset::from_down_sets(std::move(labels), std::move(down)));
}

FinLattice dual(const FinLattice& l) { return FinLattice::from_order(opposite(l.order())); }

bool is_distributive(const FinLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
      }
    }
  }
  return true;
}

namespace {

// For each a, the elements b sharing a given a∨b must have a meet that still
// joins with a to the same value. This is SD∨ evaluated on whole fibres.
bool semidistributive(const FinLattice& l, bool join_side) {
  const std::size_t n = l.size();
  auto op = [&](std::size_t x, std::size_t y) {
    return join_side ? l.join(x, y) : l.meet(x, y);
  };
  auto co = [&](std::size_t x, std::size_t y) {
    return join_side ? l.meet(x, y) : l.join(x, y);
  };
  const std::size_t none = n;
  std::vector<std::size_t> fibre(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(fibre.begin(), fibre.end(), none);
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = op(a, b);
      fibre[v] = fibre[v] == none ? b : co(fibre[v], b);
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (fibre[v] != none && op(a, fibre[v]) != v) return false;
    }
  }
  return true;
}

}  // namespace

bool is_join_semidistributive(const FinLattice& l) { return semidistributive(l, true); }
bool is_meet_semidistributive(const FinLattice& l) { return semidistributive(l, false); }

std::vector<Irreducible> join_irreducibles(const FinLattice& l) {
  std::vector<Irreducible> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    const auto lc = l.order().lower_covers(x);
    if (lc.size() == 1) out.push_back({x, lc.front()});
  }
  return out;
}

std::vector<Irreducible> meet_irreducibles(const FinLattice& l) {
  std::vector<Irreducible> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    const auto uc = l.order().upper_covers(x);
    if (uc.size() == 1) out.push_back({x, uc.front()});
  }
  return out;
}

Congruence::Congruence(std::vector<std::size_t> block_of) : block_of_(std::move(block_of)) {
  for (std::size_t x = 0; x < block_of_.size(); ++x) {
    if (block_of_[x] > x || block_of_[block_of_[x]] != block_of_[x]) {
      throw std::invalid_argument("congruence labelling is not canonical");
    }
  }
}

Congruence Congruence::discrete(std::size_t n) {
  std::vector<std::size_t> b(n);
  std::iota(b.begin(), b.end(), 0);
  return Congruence(std::move(b));
}

Congruence Congruence::full(std::size_t n) {
  return Congruence(std::vector<std::size_t>(n, 0));
}

Congruence Congruence::from_labels(const std::vector<std::size_t>& labels) {
  std::unordered_map<std::size_t, std::size_t> first;
  std::vector<std::size_t> b(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = first.emplace(labels[x], x);
    b[x] = it->second;
  }
  return Congruence(std::move(b));
}

std::size_t Congruence::block_count() const {
  std::size_t k = 0;
  for (std::size_t x = 0; x < block_of_.size(); ++x) k += block_of_[x] == x;
  return k;
}

std::vector<std::vector<std::size_t>> Congruence::blocks() const {
  std::map<std::size_t, std::vector<std::size_t>> m;
  for (std::size_t x = 0; x < block_of_.size(); ++x) m[block_of_[x]].push_back(x);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, v] : m) out.push_back(std::move(v));
  return out;
}

bool Congruence::refines(const Congruence& o) const {
  for (std::size_t x = 0; x < block_of_.size(); ++x) {
    if (o.block_of_[x] != o.block_of_[block_of_[x]]) return false;
  }
  return true;
}

std::size_t CongruenceHash::operator()(const Congruence& c) const {
  std::size_t h = 0;
  for (auto x : c.canonical()) h = h * 1000003u ^ x;
  return h;
}

bool is_compatible(const FinLattice& l, const Congruence& c) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!c.same(a, b)) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (!c.same(l.meet(a, x), l.meet(b, x)) || !c.same(l.join(a, x), l.join(b, x))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

Congruence canonical(UnionFind& uf) {
  std::vector<std::size_t> labels(uf.parent.size());
  for (std::size_t x = 0; x < labels.size(); ++x) labels[x] = uf.find(x);
  return Congruence::from_labels(labels);
}

}  // namespace

Congruence principal_congruence(const FinLattice& l, std::size_t a, std::size_t b) {
  const std::size_t n = l.size();
  UnionFind uf(n);
  // Every pair that caused a merge generates the equivalence; closing each
  // generator under the translations x -> x∧c, x -> x∨c gives compatibility.
  std::deque<std::pair<std::size_t, std::size_t>> work;
  if (uf.unite(a, b)) work.emplace_back(a, b);
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (std::size_t c = 0; c < n; ++c) {
      const auto mx = l.meet(x, c), my = l.meet(y, c);
      if (uf.unite(mx, my)) work.emplace_back(mx, my);
      const auto jx = l.join(x, c), jy = l.join(y, c);
      if (uf.unite(jx, jy)) work.emplace_back(jx, jy);
    }
  }
  return canonical(uf);
}

Congruence congruence_join(const Congruence& x, const Congruence& y) {
  UnionFind uf(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) {
    uf.unite(e, x.block_of(e));
    uf.unite(e, y.block_of(e));
  }
  return canonical(uf);
}

CongruenceLattice congruence_lattice(const FinLattice& l) {
  std::vector<Congruence> gens;
  {
    std::unordered_set<Congruence, CongruenceHash> seen;
    for (auto [a, b] : l.covers()) {
      auto c = principal_congruence(l, a, b);
      if (seen.insert(c).second) gens.push_back(std::move(c));
    }
  }
  std::vector<Congruence> all{Congruence::discrete(l.size())};
  std::unordered_set<Congruence, CongruenceHash> seen{all.front()};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& g : gens) {
      auto c = congruence_join(all[i], g);
      if (seen.insert(c).second) all.push_back(std::move(c));
    }
  }
  std::sort(all.begin(), all.end(), [](const Congruence& x, const Congruence& y) {
    const auto bx = x.block_count(), by = y.block_count();
    if (bx != by) return bx > by;
    return x < y;
  });
  const std::size_t n = all.size();
  std::vector<std::string> labels;
  for (const auto& c : all) {
    std::string s;
    for (const auto& blk : c.blocks()) {
      if (blk.size() < 2) continue;
      s += "{";
      for (std::size_t i = 0; i < blk.size(); ++i) s += (i ? "," : "") + l.label(blk[i]);
      s += "}";
    }
    labels.push_back(s.empty() ? "0" : s);
  }
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      if (all[a].refines(all[b])) down[b].set(a);
    }
  }
  return {FinLattice::from_order(Poset::from_down_sets(std::move(labels), std::move(down))),
          std::move(all)};
}

Poset forcing_poset(const FinLattice& l) {
  const auto con = congruence_lattice(l);
  const auto jis = join_irreducibles(con.lattice);
  // Name each join-irreducible congruence by the first cover of L generating it.
  std::vector<std::string> labels;
  std::vector<std::size_t> elems;
  for (const auto& ji : jis) {
    const auto& target = con.congruences[ji.element];
    std::string name = con.lattice.label(ji.element);
    for (auto [a, b] : l.covers()) {
      if (principal_congruence(l, a, b) == target) {
        name = "con(" + l.label(a) + "," + l.label(b) + ")";
        break;
      }
    }
    labels.push_back(name);
    elems.push_back(ji.element);
  }
  const std::size_t k = elems.size();
  std::vector<Bitset> down(k, Bitset(k));
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t a = 0; a < k; ++a) {
      if (con.congruences[elems[a]].refines(con.congruences[elems[b]])) down[b].set(a);
    }
  }
  return Poset::from_down_sets(std::move(labels), std::move(down));
}

bool is_congruence_uniform(const FinLattice& l) {
  const auto con = congruence_lattice(l);
  std::unordered_set<Congruence, CongruenceHash> ji_cons;
  for (const auto& ji : join_irreducibles(con.lattice)) {
    ji_cons.insert(con.congruences[ji.element]);
  }
  auto bijective = [&](const std::vector<Irreducible>& irr, bool lower) {
    if (irr.size() != ji_cons.size()) return false;
    std::unordered_set<Congruence, CongruenceHash> hit;
    for (const auto& j : irr) {
      auto c = lower ? principal_congruence(l, j.cover, j.element)
                     : principal_congruence(l, j.element, j.cover);
      if (!ji_cons.count(c) || !hit.insert(std::move(c)).second) return false;
    }
    return true;
  };
  return bijective(join_irreducibles(l), true) && bijective(meet_irreducibles(l), false);
}

bool verify_lattice_isomorphism(const FinLattice& l, const FinLattice& m,
                                const std::vector<std::size_t>& image) {
  const std::size_t n = l.size();
  if (m.size() != n || image.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto y : image) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (image[l.meet(a, b)] != m.meet(image[a], image[b])) return false;
      if (image[l.join(a, b)] != m.join(image[a], image[b])) return false;
    }
  }
  return true;
}

namespace {

using Sig = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Sig> element_signatures(const FinLattice& l) {
  std::vector<Sig> s(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    s[x] = {l.order().down_set(x).count(), l.order().up_set(x).count(),
            l.order().lower_covers(x).size(), l.order().upper_covers(x).size()};
  }
  return s;
}

}  // namespace

std::optional<std::vector<std::size_t>> lattice_isomorphic(const FinLattice& l,
                                                           const FinLattice& m) {
  const std::size_t n = l.size();
  if (m.size() != n || l.covers().size() != m.covers().size()) return std::nullopt;
  const auto sl = element_signatures(l);
  const auto sm = element_signatures(m);
  {
    auto a = sl, b = sm;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  auto jl = join_irreducibles(l);
  const auto jm = join_irreducibles(m);
  if (jl.size() != jm.size()) return std::nullopt;
  std::sort(jl.begin(), jl.end(), [&](const Irreducible& a, const Irreducible& b) {
    return l.order().down_set(a.element).count() < l.order().down_set(b.element).count();
  });
  const std::size_t k = jl.size();
  std::vector<std::size_t> assign(k);
  std::vector<bool> used(jm.size(), false);
  std::vector<std::size_t> image(n);

  auto complete = [&]() -> bool {
    // x = join of join-irreducibles below it
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t y = m.bottom();
      for (std::size_t i = 0; i < k; ++i) {
        if (l.leq(jl[i].element, x)) y = m.join(y, jm[assign[i]].element);
      }
      image[x] = y;
    }
    return verify_lattice_isomorphism(l, m, image);
  };

  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == k) return complete();
    const auto x = jl[depth].element;
    for (std::size_t c = 0; c < jm.size(); ++c) {
      const auto y = jm[c].element;
      if (used[c] || sl[x] != sm[y]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const auto px = jl[d].element;
        const auto py = jm[assign[d]].element;
        ok = l.leq(px, x) == m.leq(py, y) && l.leq(x, px) == m.leq(y, py);
      }
      if (!ok) continue;
      used[c] = true;
      assign[depth] = c;
      if (search(depth + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return image;
}

}  // namespace torsionlab
