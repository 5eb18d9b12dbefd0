// Acceptance run: one line per criterion with wall time against its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "torsionlab/algebra.hpp"
#include "torsionlab/catalan.hpp"
#include "torsionlab/lattice.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::set<Subcat> select(const TorsionLattice& t, const std::function<bool(const TorsionPair&)>& f) {
  std::set<Subcat> out;
  for (const auto& p : t.pairs) {
    if (f(p)) out.insert(p.tors);
  }
  return out;
}

Outcome example_algebra_exact() {
  Outcome o;
  const Algebra a = example_algebra();
  const Catalog c(a);
  o.require(c.size() == 5, "indecomposables " + std::to_string(c.size()));
  const auto gd = global_dimension(a, 6);
  o.require(!gd.exceeded && gd.value == 2, "global dimension " + std::to_string(gd.value));
  const auto t = enumerate_torsion_pairs(c);
  o.require(t.pairs.size() == 6, "torsion pairs " + std::to_string(t.pairs.size()));
  if (!o.pass) return o;

  auto idx = [&](const Module& m) { return *c.index_of(m); };
  auto cls = [&](std::vector<std::size_t> v) { return bitset_of(c.size(), v); };
  const auto s1 = idx(a.simple(0)), s2 = idx(a.simple(1));
  const auto p1 = idx(a.projective(0)), p2 = idx(a.projective(1)), i1 = idx(a.injective(0));
  const Subcat zero = c.empty(), all = c.all(), f1 = cls({s1}), f2 = cls({s2}),
               add1 = cls({s1, p1}), add2 = cls({s2, p2, i1});

  std::map<Subcat, std::size_t> at;
  for (std::size_t i = 0; i < t.pairs.size(); ++i) at[t.pairs[i].tors] = i;
  bool classes = true;
  for (const auto& s : {zero, f1, f2, add1, add2, all}) classes = classes && at.count(s);
  o.require(classes, "torsion classes differ");
  if (classes) {
    const std::set<std::pair<std::size_t, std::size_t>> want{
        {at[zero], at[f1]}, {at[zero], at[f2]}, {at[f1], at[add1]},
        {at[f2], at[add2]}, {at[add1], at[all]}, {at[add2], at[all]}};
    const std::set<std::pair<std::size_t, std::size_t>> got(t.lattice.covers().begin(),
                                                            t.lattice.covers().end());
    o.require(want == got, "Hasse diagram differs");
  }
  o.require(select(t, [&](auto& p) { return is_hereditary(c, p); }) ==
                std::set<Subcat>{zero, f1, f2, all},
            "hereditary classes");
  o.require(select(t, [&](auto& p) { return is_cohereditary(c, p); }) ==
                std::set<Subcat>{zero, add1, add2, all},
            "cohereditary classes");
  o.require(select(t, [&](auto& p) { return is_omega_n(c, p, 1, OmegaRoute::ext); }) ==
                std::set<Subcat>{zero, all},
            "omega pairs");
  o.require(select(t, [&](auto& p) { return is_omega_n(c, p, 2, OmegaRoute::ext); }) ==
                std::set<Subcat>{zero, f2, add1, all},
            "omega_2 pairs");
  if (o.pass) o.detail = "5 indecomposables, 6 pairs, gl.dim 2, all class lists match";
  return o;
}

Outcome catalan_counts() {
  Outcome o;
  const std::vector<std::size_t> expect{5, 14, 42};
  std::string sizes;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto l = omega_lattice_via_simples(incidence_algebra(opposite(interval_poset(n))));
    const auto d = dyck_lattice(n + 1);
    sizes += (sizes.empty() ? "" : ", ") + std::to_string(l.size());
    o.require(l.size() == expect[n - 2], "omega size for n=" + std::to_string(n));
    o.require(d.size() == l.size(), "Dyck size for n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "omega lattice sizes " + sizes;
  return o;
}

Outcome theorem_1() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    try {
      verify_theorem_1(n);
    } catch (const VerificationFailed& e) {
      o.require(false, "n=" + std::to_string(n) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "isomorphisms verified for n = 2..6";
  return o;
}

Outcome theorem_2() {
  Outcome o;
  std::string dual_note;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto con = congruence_lattice(tamari_lattice(n)).lattice;
    const auto dyck = dyck_lattice(n);
    const bool direct = lattice_isomorphic(con, dyck).has_value();
    o.require(direct, "Con(Tam_" + std::to_string(n) + ") not isomorphic to Dyck_" +
                          std::to_string(n));
    if (!direct && lattice_isomorphic(con, dual(dyck))) {
      dual_note += (dual_note.empty() ? "" : ",") + std::to_string(n);
    }
  }
  for (std::size_t n = 2; n <= 3; ++n) {
    o.require(poset_isomorphic(forcing_poset(tamari_lattice(n + 1)), opposite(interval_poset(n)))
                  .has_value(),
              "forcing poset of Tam_" + std::to_string(n + 1));
  }
  if (!dual_note.empty()) {
    o.detail += "; isomorphic to the dual Dyck lattice for n=" + dual_note;
  }
  if (o.pass) o.detail = "Con(Tam_n) = Dyck_n for n = 2..4, forcing posets match";
  return o;
}

Outcome equivalence_suites() {
  Outcome o;
  for (const auto& [name, a] : std::vector<std::pair<std::string, Algebra>>{
           {"example", example_algebra()},
           {"int:2", incidence_algebra(interval_poset(2))}}) {
    const Catalog c(a);
    const auto t = enumerate_torsion_pairs(c);
    std::size_t bad_routes = 0, bad_lemma = 0;
    for (const auto& p : t.pairs) {
      for (std::size_t n = 1; n <= 2; ++n) {
        const bool e = is_omega_n(c, p, n, OmegaRoute::ext);
        if (e != is_omega_n(c, p, n, OmegaRoute::syzygy) ||
            e != is_omega_n(c, p, n, OmegaRoute::cosyzygy)) {
          ++bad_routes;
        }
      }
      if (is_omega_n(c, p, 1, OmegaRoute::ext) != (is_hereditary(c, p) && is_cohereditary(c, p))) {
        ++bad_lemma;
      }
    }
    o.require(bad_routes == 0, name + ": routes disagree");
    o.require(bad_lemma == 0, name + ": omega vs hereditary and cohereditary");
    for (std::size_t n = 1; n <= 2; ++n) {
      std::vector<bool> in(t.pairs.size());
      for (std::size_t i = 0; i < in.size(); ++i) in[i] = is_omega_n(c, t.pairs[i], n, OmegaRoute::ext);
      bool closed = true;
      for (std::size_t x = 0; x < in.size(); ++x) {
        for (std::size_t y = 0; y < in.size(); ++y) {
          if (in[x] && in[y] && !(in[t.lattice.meet(x, y)] && in[t.lattice.join(x, y)])) {
            closed = false;
          }
        }
      }
      o.require(closed, name + ": omega_" + std::to_string(n) + " not a sublattice");
    }
    o.require(is_semidistributive(t.lattice), name + ": torsion lattice not semidistributive");
    o.require(is_distributive(omega_lattice_via_simples(a)), name + ": omega lattice");
  }
  if (o.pass) o.detail = "example and int:2, all pairs";
  return o;
}

Outcome hereditary_count() {
  Outcome o;
  const auto t = enumerate_torsion_pairs(Catalog(incidence_algebra(interval_poset(2))));
  o.require(t.pairs.size() == 14, std::to_string(t.pairs.size()) + " torsion pairs");
  if (o.pass) o.detail = "14 torsion pairs";
  return o;
}

std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      a[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(1, 1);
  return out;
}

std::set<std::vector<std::size_t>> brute_congruences(const FinLattice& l) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = l.size();
  for (const auto& p : set_partitions(n)) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (p[x] != p[y]) continue;
        for (std::size_t z = 0; z < n && ok; ++z) {
          ok = p[l.meet(x, z)] == p[l.meet(y, z)] && p[l.join(x, z)] == p[l.join(y, z)];
        }
      }
    }
    if (ok) out.insert(Congruence::from_labels(p).canonical());
  }
  return out;
}

FinLattice lattice_from_covers(std::size_t n,
                               const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinLattice::from_order(Poset::from_covers(labels, covers));
}

Outcome oracle_equivalences() {
  Outcome o;
  const std::vector<std::pair<std::string, FinLattice>> corpus{
      {"chain4", FinLattice::from_order(chain(4))},
      {"chain7", FinLattice::from_order(chain(7))},
      {"2x2", ideal_lattice(antichain(2))},
      {"N5", lattice_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}})},
      {"M3", lattice_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})},
      {"2x3", lattice_from_covers(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}})},
      {"Tam3", tamari_lattice(3)},
      {"Dyck3", dyck_lattice(3)},
      {"ideals Int[2]", ideal_lattice(interval_poset(2))},
      {"Boolean3", ideal_lattice(antichain(3))},
  };
  for (const auto& [name, l] : corpus) {
    std::set<std::vector<std::size_t>> fast;
    for (const auto& c : congruence_lattice(l).congruences) fast.insert(c.canonical());
    o.require(fast == brute_congruences(l), "congruences of " + name);
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto t = enumerate_torsion_pairs(Catalog(linear_path_algebra(n)));
    const auto sym = typeA_torsion_lattice(n);
    o.require(t.pairs.size() == sym.size() && lattice_isomorphic(t.lattice, sym).has_value(),
              "type A n=" + std::to_string(n));
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " lattices, type A n = 1..3";
  return o;
}

Outcome extended_int3() {
  Outcome o;
  const Catalog c(incidence_algebra(interval_poset(3)));
  EnumerationLimits lim;
  lim.seconds = 600;
  try {
    const auto t = enumerate_torsion_pairs(c, lim);
    std::size_t w1 = 0, w2 = 0;
    for (const auto& p : t.pairs) {
      w1 += is_omega_n(c, p, 1, OmegaRoute::ext);
      w2 += is_omega_n(c, p, 2, OmegaRoute::ext);
    }
    o.require(c.size() == 35, "indecomposables " + std::to_string(c.size()));
    o.require(t.pairs.size() == 808, "torsion pairs " + std::to_string(t.pairs.size()));
    o.require(w2 == 239, "omega_2 " + std::to_string(w2));
    o.require(w1 == 14, "omega " + std::to_string(w1));
    if (o.pass) o.detail = "35 indecomposables, 808 pairs, 239 omega_2, 14 omega";
  } catch (const BudgetExceeded& e) {
    o.require(false, std::string("budget exceeded: ") + e.what());
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, "example algebra, exact reproduction", 1, example_algebra_exact},
      {2, "Catalan counts", 3, catalan_counts},
      {3, "Dyck lattices and omega lattices, n = 2..6", 10, theorem_1},
      {4, "congruences of Tamari lattices", 60, theorem_2},
      {5, "equivalence suites", 120, equivalence_suites},
      {6, "torsion pairs of the int:2 incidence algebra", 30, hereditary_count},
      {7, "oracle equivalences", 60, oracle_equivalences},
      {8, "extended: int:3 counts", 600, extended_int3},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) o.require(false, "over time limit");
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %.3fs (limit %.0fs)  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL",
                secs, c.limit, c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
