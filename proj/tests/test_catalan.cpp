#include <doctest.h>

#include <set>

#include "torsionlab/algebra.hpp"
#include "torsionlab/catalan.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

// brute-force count of U/D words staying nonnegative
std::size_t brute_dyck_count(std::size_t n) {
  std::size_t count = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << (2 * n)); ++w) {
    int h = 0;
    bool ok = true;
    for (std::size_t i = 0; i < 2 * n && ok; ++i) {
      h += (w >> i & 1) ? 1 : -1;
      ok = h >= 0;
    }
    count += ok && h == 0;
  }
  return count;
}

bool pointwise_leq(const DyckPath& a, const DyckPath& b) {
  const auto x = a.heights(), y = b.heights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("catalan numbers") {
  const std::vector<std::size_t> expect{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (std::size_t n = 0; n < expect.size(); ++n) CHECK(catalan_number(n) == expect[n]);
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(dyck_paths(n).size() == brute_dyck_count(n));
    CHECK(binary_trees(n).size() == catalan_number(n));
  }
}

TEST_CASE("dyck path parsing") {
  CHECK(DyckPath::parse("UUDD").semilength() == 2);
  CHECK(DyckPath::parse("UDUD").heights() == std::vector<int>{0, 1, 0, 1, 0});
  CHECK_THROWS_AS(DyckPath::parse("DU"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UUD"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UXDD"), std::invalid_argument);
}

TEST_CASE("dyck lattice is pointwise order with min/max operations") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto paths = dyck_paths(n);
    const auto l = dyck_lattice(n);
    REQUIRE(l.size() == paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
      CHECK(l.label(i) == paths[i].str());
      for (std::size_t j = 0; j < paths.size(); ++j) {
        CHECK(l.leq(i, j) == pointwise_leq(paths[i], paths[j]));
        CHECK(l.label(l.meet(i, j)) == dyck_meet(paths[i], paths[j]).str());
        CHECK(l.label(l.join(i, j)) == dyck_join(paths[i], paths[j]).str());
      }
    }
    CHECK(is_distributive(l));
  }
}

TEST_CASE("dyck paths biject with order ideals of the interval poset") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto paths = dyck_paths(n);
    const Poset p = interval_poset(n - 1);
    std::set<std::vector<std::size_t>> seen;
    for (const auto& d : paths) {
      const auto ideal = dyck_to_ideal(d);
      CHECK(p.is_down_closed(ideal.members));
      seen.insert(members(ideal.members));
    }
    CHECK(seen.size() == paths.size());
    CHECK(seen.size() == order_ideals(p).size());
    // order isomorphism: pointwise order corresponds to inclusion
    for (const auto& a : paths) {
      for (const auto& b : paths) {
        const auto x = dyck_to_ideal(a).members, y = dyck_to_ideal(b).members;
        CHECK(pointwise_leq(a, b) == x.is_subset_of(y));
      }
    }
    CHECK(lattice_isomorphic(dyck_lattice(n), ideal_lattice(p)).has_value());
  }
}

TEST_CASE("binary trees and rotations") {
  const auto t = BinaryTree::parse("(())");
  CHECK(t.internal_nodes() == 2);
  CHECK(t.left().str() == "()");
  CHECK(t.right().is_leaf());
  CHECK(t.right_rotations() == std::vector<BinaryTree>{BinaryTree::parse("()()")});
  CHECK(BinaryTree::parse("()()").right_rotations().empty());
  CHECK(BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf()).str() == "()");
  CHECK_THROWS(BinaryTree::parse("(()"));
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& b : binary_trees(n)) {
      for (const auto& r : b.right_rotations()) CHECK(r.internal_nodes() == n);
    }
  }
}

TEST_CASE("tamari lattice properties") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto l = tamari_lattice(n);
    CHECK(l.size() == catalan_number(n));
    // covers are exactly the right rotations
    std::size_t rotations = 0;
    for (const auto& b : binary_trees(n)) rotations += b.right_rotations().size();
    CHECK(l.covers().size() == rotations);
    CHECK(is_semidistributive(l));
    CHECK(is_congruence_uniform(l));
    CHECK(join_irreducibles(l).size() == n * (n - 1) / 2);
    if (n >= 3) CHECK_FALSE(is_distributive(l));
  }
  CHECK(lattice_isomorphic(tamari_lattice(3), dyck_lattice(3)) == std::nullopt);
}

TEST_CASE("tamari congruences") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto l = tamari_lattice(n);
    const auto forcing = forcing_poset(l);
    CHECK(poset_isomorphic(forcing, opposite(interval_poset(n - 1))).has_value());
    CHECK(poset_isomorphic(forcing, brick_forcing_poset(n - 1)).has_value());
    const auto con = congruence_lattice(l);
    CHECK(con.congruences.size() == catalan_number(n));
    CHECK(lattice_isomorphic(con.lattice, ideal_lattice(forcing)).has_value());
    CHECK(lattice_isomorphic(con.lattice, dual(dyck_lattice(n))).has_value());
  }
}

TEST_CASE("rel_star is the interval poset one size down") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(rel_star(n).size() == n * (n - 1) / 2);
    CHECK(poset_isomorphic(rel_star(n), interval_poset(n - 1)).has_value());
  }
}

TEST_CASE("type A torsion lattice is the Tamari lattice") {
  CHECK(typeA_interval_labels(2) == std::vector<std::string>{"M[1,1]", "M[2,2]", "M[1,2]"});
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto l = typeA_torsion_lattice(n);
    CHECK(l.size() == catalan_number(n + 1));
    const auto m = lattice_isomorphic(l, tamari_lattice(n + 1));
    REQUIRE(m.has_value());
    CHECK(verify_lattice_isomorphism(l, tamari_lattice(n + 1), *m));
  }
}

TEST_CASE("type A combinatorial model matches the module engine") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Algebra a = linear_path_algebra(n, 2);
    const Catalog cat(a);
    REQUIRE(cat.size() == n * (n + 1) / 2);
    const auto tors = enumerate_torsion_pairs(cat);
    const auto comb = typeA_torsion_lattice(n);
    CHECK(tors.pairs.size() == comb.size());
    CHECK(lattice_isomorphic(tors.lattice, comb).has_value());
    // both sides list interval supports; compare the sets of supports
    std::set<std::set<std::vector<std::size_t>>> engine, model;
    for (const auto& p : tors.pairs) {
      std::set<std::vector<std::size_t>> s;
      for (auto i : members(p.tors)) s.insert(cat.module(i).dims());
      engine.insert(s);
    }
    const auto labels = typeA_interval_labels(n);
    const Poset ip = interval_poset(n);
    for (std::size_t x = 0; x < comb.size(); ++x) {
      std::set<std::vector<std::size_t>> s;
      for (std::size_t k = 0; k < labels.size(); ++k) {
        if (comb.label(x).find(labels[k]) == std::string::npos) continue;
        // "M[i,j]" -> support i..j
        const auto& lab = ip.label(k);
        const auto comma = lab.find(',');
        const std::size_t i = std::stoul(lab.substr(1, comma - 1));
        const std::size_t j = std::stoul(lab.substr(comma + 1));
        std::vector<std::size_t> dv(n, 0);
        for (std::size_t v = i; v <= j; ++v) dv[v - 1] = 1;
        s.insert(dv);
      }
      model.insert(s);
    }
    CHECK(engine == model);
  }
}
