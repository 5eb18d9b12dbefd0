#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "torsionlab/lattice.hpp"
#include "torsionlab/poset.hpp"

using namespace torsionlab;

namespace {

std::size_t brute_ideal_count(const Poset& p) {
  const std::size_t n = p.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (std::size_t b = 0; b < n && closed; ++b) {
      if (!(mask >> b & 1)) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (p.leq(a, b) && !(mask >> a & 1)) closed = false;
      }
    }
    count += closed;
  }
  return count;
}

// random partial order from a random DAG on a fixed linear order
Poset random_poset(std::mt19937& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng() % 3 == 0) covers.emplace_back(a, b);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Poset::from_covers(labels, covers);
}

}  // namespace

TEST_CASE("interval posets") {
  CHECK_THROWS(interval_poset(0));
  CHECK(interval_poset(1).size() == 1);
  const auto p2 = interval_poset(2);
  CHECK(p2.size() == 3);
  CHECK(p2.covers().size() == 2);
  CHECK(p2.labels() == std::vector<std::string>{"[1,1]", "[2,2]", "[1,2]"});
  CHECK(p2.maximal_elements().size() == 1);
  CHECK(p2.minimal_elements().size() == 2);
  const auto p3 = interval_poset(3);
  CHECK(p3.size() == 6);
  // third diagram of the figure: three atoms, two middle elements, one top, 4 + 2 covers
  CHECK(p3.covers().size() == 6);
  CHECK(p3.minimal_elements().size() == 3);
  CHECK(p3.maximal_elements().size() == 1);
  CHECK(interval_poset(4).size() == 10);
  CHECK(interval_poset(4).covers().size() == 12);
}

TEST_CASE("opposite") {
  std::mt19937 rng(1);
  for (int t = 0; t < 10; ++t) {
    const auto p = random_poset(rng, 6);
    CHECK(opposite(opposite(p)) == p);
  }
  CHECK(opposite(antichain(3)) == antichain(3));
  const auto op = opposite(interval_poset(2));
  CHECK(op.minimal_elements() == std::vector<std::size_t>{2});
}

TEST_CASE("construction rejects non-orders") {
  CHECK_THROWS_AS(Poset::from_relation({"a", "b"}, {{0, 1}, {1, 0}}), NotAPartialOrder);
  CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{0, 1}, {1, 0}}), NotAPartialOrder);
}

TEST_CASE("order ideal counts") {
  CHECK(order_ideals(antichain(4)).size() == 16);
  CHECK(order_ideals(interval_poset(2)).size() == 5);
  CHECK(order_ideals(interval_poset(3)).size() == 14);
  CHECK(order_ideals(interval_poset(4)).size() == 42);
  CHECK(order_ideals(interval_poset(5)).size() == 132);
  CHECK(order_ideals(chain(5)).size() == 6);
}

TEST_CASE("order ideals match brute force and every ideal is down-closed") {
  std::mt19937 rng(2);
  for (int t = 0; t < 25; ++t) {
    const auto p = random_poset(rng, 2 + rng() % 8);
    const auto ideals = order_ideals(p);
    CHECK(ideals.size() == brute_ideal_count(p));
    CHECK(ideals.size() == order_ideals(opposite(p)).size());
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& i : ideals) {
      CHECK(p.is_down_closed(i.members));
      distinct.insert(members(i.members));
    }
    CHECK(distinct.size() == ideals.size());
    CHECK(is_distributive(ideal_lattice(p)));
  }
}

TEST_CASE("large ideal enumeration does not recurse") {
  // 2^20 ideals
  CHECK(order_ideals(antichain(20)).size() == (std::size_t{1} << 20));
}

TEST_CASE("covers close to the order") {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_poset(rng, 7);
    CHECK(Poset::from_covers(p.labels(), p.covers()) == p);
  }
}

TEST_CASE("poset isomorphism") {
  const auto p = interval_poset(3);
  const auto id = poset_isomorphic(p, p);
  REQUIRE(id.has_value());
  CHECK_FALSE(poset_isomorphic(chain(2), antichain(2)).has_value());
  CHECK_FALSE(poset_isomorphic(interval_poset(2), opposite(interval_poset(2))).has_value());
  std::mt19937 rng(6);
  for (int t = 0; t < 10; ++t) {
    const auto q = random_poset(rng, 7);
    // relabel by a random permutation
    std::vector<std::size_t> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (auto [a, b] : q.relation()) rel.emplace_back(perm[a], perm[b]);
    const auto r = Poset::from_relation(q.labels(), rel);
    const auto m = poset_isomorphic(q, r);
    REQUIRE(m.has_value());
    for (std::size_t a = 0; a < 7; ++a) {
      for (std::size_t b = 0; b < 7; ++b) CHECK(q.leq(a, b) == r.leq((*m)[a], (*m)[b]));
    }
  }
}
