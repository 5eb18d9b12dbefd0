#include <doctest.h>

#include "torsionlab/catalan.hpp"
#include "torsionlab/lattice.hpp"

using namespace torsionlab;

// Con(Tam_n) and the ideals of the brick forcing poset, against the Dyck
// lattice under pointwise order and against its dual.

TEST_CASE("ideals of Int([2]) and Con(Tam_3)") {
  const auto con = congruence_lattice(tamari_lattice(3)).lattice;
  CHECK(con.size() == 5);
  CHECK(lattice_isomorphic(ideal_lattice(interval_poset(2)), con).has_value());
  CHECK(lattice_isomorphic(ideal_lattice(opposite(interval_poset(2))), con).has_value());
}

TEST_CASE("Con(Tam_n) and Dyck_n") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto con = congruence_lattice(tamari_lattice(n)).lattice;
    CHECK(con.size() == dyck_lattice(n).size());
    CHECK(lattice_isomorphic(con, dyck_lattice(n)).has_value());
    CHECK(lattice_isomorphic(con, dual(dyck_lattice(n))).has_value());
  }
}

TEST_CASE("ideals of the brick forcing poset and Dyck_{n+1}") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const auto ideals = ideal_lattice(brick_forcing_poset(n));
    CHECK(lattice_isomorphic(ideals, dyck_lattice(n + 1)).has_value());
    CHECK(lattice_isomorphic(ideals, dual(dyck_lattice(n + 1))).has_value());
  }
}

TEST_CASE("Dyck lattices are not self-dual from n = 3") {
  CHECK(lattice_isomorphic(dyck_lattice(2), dual(dyck_lattice(2))).has_value());
  for (std::size_t n = 3; n <= 6; ++n) {
    CAPTURE(n);
    CHECK_FALSE(lattice_isomorphic(dyck_lattice(n), dual(dyck_lattice(n))).has_value());
  }
}
