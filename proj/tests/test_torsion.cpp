#include <doctest.h>

#include <set>

#include "torsionlab/algebra.hpp"
#include "torsionlab/catalan.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

std::size_t by_name(const Catalog& c, const std::string& name) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.name(i) == name) return i;
  }
  FAIL("no module named " << name);
  return 0;
}

Subcat named(const Catalog& c, const std::vector<std::string>& names) {
  Subcat s = c.empty();
  for (const auto& n : names) s.set(by_name(c, n));
  return s;
}

// perpendicular categories straight from a table of Hom dimensions
Subcat hom_right_perp(const Catalog& c, const Subcat& s) {
  Subcat out = c.empty();
  for (std::size_t y = 0; y < c.size(); ++y) {
    bool z = true;
    for (auto x : members(s)) z = z && hom_dim(c.algebra(), c.module(x), c.module(y)) == 0;
    out[y] = z;
  }
  return out;
}

Subcat hom_left_perp(const Catalog& c, const Subcat& s) {
  Subcat out = c.empty();
  for (std::size_t x = 0; x < c.size(); ++x) {
    bool z = true;
    for (auto y : members(s)) z = z && hom_dim(c.algebra(), c.module(x), c.module(y)) == 0;
    out[x] = z;
  }
  return out;
}

// torsion classes are exactly the subsets T with T = left perp of (right perp of T)
std::set<Subcat> brute_torsion_classes(const Catalog& c) {
  std::set<Subcat> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.size()); ++mask) {
    Subcat s(c.size(), mask);
    if (hom_left_perp(c, hom_right_perp(c, s)) == s) out.insert(s);
  }
  return out;
}

bool omega_by_definition(const Catalog& c, const TorsionPair& t, std::size_t n) {
  const auto& a = c.algebra();
  for (auto i : members(t.tors)) {
    for (auto j : members(t.free)) {
      if (ext_dim(a, c.module(i), c.module(j), n) != 0) return false;
    }
  }
  return true;
}

FinLattice sublattice_on(const FinLattice& l, const std::vector<std::size_t>& keep) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(l.label(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (l.leq(keep[a], keep[b])) rel.emplace_back(a, b);
    }
  }
  return FinLattice::from_order(Poset::from_relation(labels, rel));
}

std::vector<Algebra> small_algebras() {
  return {example_algebra(2), example_algebra(3), incidence_algebra(interval_poset(2)),
          linear_path_algebra(3), incidence_algebra(opposite(interval_poset(2)))};
}

}  // namespace

TEST_CASE("example algebra catalog") {
  const Catalog c(example_algebra());
  CHECK(c.size() == 5);
  std::set<std::string> names;
  for (std::size_t i = 0; i < c.size(); ++i) names.insert(c.name(i));
  CHECK(names == std::set<std::string>{"S1", "S2", "P1", "P2", "I1"});
  CHECK(c.describe(c.empty()) == "0");
  CHECK(c.summands(direct_sum(c.module(0), c.module(0))) == c.single(0));
  CHECK(c.summands(Module({3, 0}, {Matrix(0, 3), Matrix(3, 0)}, 2)) == named(c, {"S1"}));
  // int3 has indecomposables with an entry 2, so syzygies leave a catalog bounded by 1
  CHECK_THROWS_AS(Catalog(incidence_algebra(interval_poset(3)), 1), NotInCatalog);
}

TEST_CASE("example algebra closures and perpendiculars") {
  const Catalog c(example_algebra());
  CHECK(torsion_closure(c, named(c, {"I1"})) == named(c, {"S2", "P2", "I1"}));
  CHECK(c.right_perp(named(c, {"S1", "P1"})) == named(c, {"S2"}));
  CHECK(torsion_closure(c, named(c, {"P1"})) == named(c, {"S1", "P1"}));
  CHECK(torsion_closure(c, named(c, {"S1", "S2"})) == c.all());
  CHECK(c.fac(named(c, {"P2"})).test(by_name(c, "S2")));
  CHECK(c.sub(named(c, {"P2"})).test(by_name(c, "S2")));
  CHECK(free_closure(c, named(c, {"S1"})) == named(c, {"S1"}));
}

TEST_CASE("perpendiculars agree with the Hom table") {
  for (const auto& a : small_algebras()) {
    const Catalog c(a);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.size()); ++mask) {
      const Subcat s(c.size(), mask);
      CHECK(c.right_perp(s) == hom_right_perp(c, s));
      CHECK(c.left_perp(s) == hom_left_perp(c, s));
    }
  }
}

TEST_CASE("torsion classes against the double-perpendicular characterisation") {
  for (const auto& a : small_algebras()) {
    const Catalog c(a);
    const auto brute = brute_torsion_classes(c);
    const auto t = enumerate_torsion_pairs(c);
    std::set<Subcat> found;
    for (const auto& p : t.pairs) found.insert(p.tors);
    CHECK(found.size() == t.pairs.size());
    CHECK(found == brute);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.size()); ++mask) {
      const Subcat s(c.size(), mask);
      CHECK(is_torsion_class(c, s) == (brute.count(s) == 1));
      CHECK(brute.count(torsion_closure(c, s)) == 1);
      CHECK(s.is_subset_of(torsion_closure(c, s)));
    }
  }
}

TEST_CASE("torsion pair counts") {
  CHECK(enumerate_torsion_pairs(Catalog(example_algebra())).pairs.size() == 6);
  CHECK(enumerate_torsion_pairs(Catalog(example_algebra(3))).pairs.size() == 6);
  CHECK(enumerate_torsion_pairs(Catalog(incidence_algebra(interval_poset(2)))).pairs.size() ==
        14);
  // semisimple: every subset, Boolean lattice
  const Catalog ss(incidence_algebra(antichain(3)));
  const auto t = enumerate_torsion_pairs(ss);
  CHECK(t.pairs.size() == 8);
  CHECK(lattice_isomorphic(t.lattice, ideal_lattice(antichain(3))).has_value());
}

TEST_CASE("pairs: free class is the right perpendicular and the order is inclusion") {
  for (const auto& a : small_algebras()) {
    const Catalog c(a);
    const auto t = enumerate_torsion_pairs(c);
    for (std::size_t i = 0; i < t.pairs.size(); ++i) {
      const auto& p = t.pairs[i];
      CHECK(p == pair_from_torsion_class(c, p.tors));
      CHECK(p.free == hom_right_perp(c, p.tors));
      CHECK(p.tors == hom_left_perp(c, p.free));
      CHECK(is_torsion_free_class(c, p.free));
      for (std::size_t j = 0; j < t.pairs.size(); ++j) {
        CHECK(t.lattice.leq(i, j) == p.tors.is_subset_of(t.pairs[j].tors));
        CHECK(t.lattice.leq(i, j) == t.pairs[j].free.is_subset_of(p.free));
      }
    }
    CHECK(is_semidistributive(t.lattice));
  }
}

TEST_CASE("example algebra: hereditary, cohereditary and omega pairs") {
  const Catalog c(example_algebra());
  const auto t = enumerate_torsion_pairs(c);
  auto select = [&](auto pred) {
    std::set<Subcat> s;
    for (const auto& p : t.pairs) {
      if (pred(p)) s.insert(p.tors);
    }
    return s;
  };
  const Subcat zero = c.empty(), all = c.all();
  const Subcat f1 = named(c, {"S1"}), f2 = named(c, {"S2"});
  const Subcat add1 = named(c, {"S1", "P1"}), add2 = named(c, {"S2", "P2", "I1"});
  CHECK(select([&](auto& p) { return is_hereditary(c, p); }) ==
        std::set<Subcat>{zero, f1, f2, all});
  CHECK(select([&](auto& p) { return is_cohereditary(c, p); }) ==
        std::set<Subcat>{zero, add1, add2, all});
  CHECK(select([&](auto& p) { return is_omega_n(c, p, 1, OmegaRoute::ext); }) ==
        std::set<Subcat>{zero, all});
  CHECK(select([&](auto& p) { return is_omega_n(c, p, 2, OmegaRoute::ext); }) ==
        std::set<Subcat>{zero, f2, add1, all});
}

TEST_CASE("omega routes agree and match the definition") {
  std::vector<Algebra> algs = small_algebras();
  algs.push_back(incidence_algebra(interval_poset(3)));
  for (const auto& a : algs) {
    const Catalog c(a);
    const auto t = enumerate_torsion_pairs(c);
    for (const auto& p : t.pairs) {
      for (std::size_t n = 1; n <= 2; ++n) {
        const bool e = is_omega_n(c, p, n, OmegaRoute::ext);
        CHECK(e == is_omega_n(c, p, n, OmegaRoute::syzygy));
        CHECK(e == is_omega_n(c, p, n, OmegaRoute::cosyzygy));
      }
      if (c.size() <= 6) {
        CHECK(is_omega_n(c, p, 1, OmegaRoute::ext) == omega_by_definition(c, p, 1));
        CHECK(is_omega_n(c, p, 2, OmegaRoute::ext) == omega_by_definition(c, p, 2));
      }
      CHECK(is_hereditary(c, p) == is_hereditary_by_envelopes(c, p));
      CHECK(is_cohereditary(c, p) == is_cohereditary_by_covers(c, p));
    }
  }
}

TEST_CASE("omega pairs are the hereditary and cohereditary ones, with Serre classes") {
  std::vector<Algebra> algs = small_algebras();
  algs.push_back(incidence_algebra(interval_poset(3)));
  for (const auto& a : algs) {
    const Catalog c(a);
    const auto t = enumerate_torsion_pairs(c);
    for (const auto& p : t.pairs) {
      const bool w = is_omega_n(c, p, 1, OmegaRoute::ext);
      CHECK(w == (is_hereditary(c, p) && is_cohereditary(c, p)));
      CHECK(w == (is_serre(c, p.tors) && is_serre(c, p.free)));
      // omega_1 pairs are omega_2
      if (w) CHECK(is_omega_n(c, p, 2, OmegaRoute::ext));
    }
  }
}

TEST_CASE("omega_n pairs form a sublattice") {
  std::vector<Algebra> algs = small_algebras();
  algs.push_back(incidence_algebra(interval_poset(3)));
  for (const auto& a : algs) {
    const Catalog c(a);
    const auto t = enumerate_torsion_pairs(c);
    for (std::size_t n = 1; n <= 2; ++n) {
      std::vector<bool> in(t.pairs.size());
      for (std::size_t i = 0; i < in.size(); ++i) {
        in[i] = is_omega_n(c, t.pairs[i], n, OmegaRoute::ext);
      }
      CHECK(in[t.lattice.bottom()]);
      CHECK(in[t.lattice.top()]);
      for (std::size_t x = 0; x < in.size(); ++x) {
        for (std::size_t y = 0; y < in.size(); ++y) {
          if (in[x] && in[y]) {
            CHECK(in[t.lattice.meet(x, y)]);
            CHECK(in[t.lattice.join(x, y)]);
          }
        }
      }
    }
  }
}

TEST_CASE("omega lattice through simples matches the enumerated omega pairs") {
  for (const auto& a : {incidence_algebra(interval_poset(2)), incidence_algebra(interval_poset(3)),
                        linear_path_algebra(3), example_algebra()}) {
    const Catalog c(a);
    const auto t = enumerate_torsion_pairs(c);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < t.pairs.size(); ++i) {
      if (is_omega_n(c, t.pairs[i], 1, OmegaRoute::ext)) keep.push_back(i);
    }
    const auto via = omega_lattice_via_simples(a);
    CHECK(via.size() == keep.size());
    CHECK(is_distributive(via));
    CHECK(lattice_isomorphic(via, sublattice_on(t.lattice, keep)).has_value());
  }
}

TEST_CASE("omega counts of interval incidence algebras") {
  const std::vector<std::size_t> expect{2, 5, 14, 42, 132};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto l = omega_lattice_via_simples(incidence_algebra(opposite(interval_poset(n))));
    CHECK(l.size() == expect[n - 1]);
    CHECK(l.size() == catalan_number(n + 1));
  }
}

TEST_CASE("omega lattice ignores the relations") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto a = incidence_algebra(opposite(interval_poset(n)));
    const auto kq = underlying_path_algebra(a);
    CHECK(ext_quiver(a) == ext_quiver(kq));
    CHECK(lattice_isomorphic(omega_lattice_via_simples(a), omega_lattice_via_simples(kq))
              .has_value());
  }
}

TEST_CASE("omega lattice of the example algebra equals that of its quiver") {
  const auto a = example_algebra();
  const auto kq = underlying_path_algebra(a);
  CHECK(ext_quiver(a) == ext_quiver(kq));
  CHECK(lattice_isomorphic(omega_lattice_via_simples(a), omega_lattice_via_simples(kq))
            .has_value());
}

TEST_CASE("ext quiver of the example algebra has both arrows") {
  const auto q = ext_quiver(example_algebra());
  CHECK(q.size() == 2);
  CHECK(omega_lattice_via_simples(example_algebra()).size() == 2);
}

TEST_CASE("Dyck lattices and omega lattices") {
  for (std::size_t n = 2; n <= 6; ++n) CHECK(verify_theorem_1(n).size() == catalan_number(n));
  CHECK_THROWS_AS(verify_theorem_1(1), std::invalid_argument);
}

TEST_CASE("enumeration budget") {
  const Catalog c(incidence_algebra(interval_poset(3)));
  EnumerationLimits lim;
  lim.cap = 50;
  CHECK_THROWS_AS(enumerate_torsion_pairs(c, lim), BudgetExceeded);
  lim.cap = 2000;
  lim.seconds = 0.0;
  CHECK_THROWS_AS(enumerate_torsion_pairs(c, lim), BudgetExceeded);
}

TEST_CASE("int3 torsion counts") {
  const Catalog c(incidence_algebra(interval_poset(3)));
  CHECK(c.size() == 35);
  const auto t = enumerate_torsion_pairs(c);
  CHECK(t.pairs.size() == 808);
  std::size_t w1 = 0, w2 = 0;
  for (const auto& p : t.pairs) {
    w1 += is_omega_n(c, p, 1, OmegaRoute::ext);
    w2 += is_omega_n(c, p, 2, OmegaRoute::ext);
  }
  CHECK(w1 == 14);
  CHECK(w2 == 239);
}
