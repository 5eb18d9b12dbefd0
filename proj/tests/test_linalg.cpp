#include <doctest.h>

#include <random>

#include "torsionlab/linalg.hpp"

using namespace torsionlab;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Scalar p) {
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  Matrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  }
  return m;
}

// all vectors of F_p^n, as columns
std::vector<std::vector<Scalar>> all_vectors(std::size_t n, Scalar p) {
  std::vector<std::vector<Scalar>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& v : out) {
      for (Scalar x = 0; x < p; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::size_t brute_kernel_size(const Matrix& m) {
  std::size_t count = 0;
  for (const auto& v : all_vectors(m.cols(), m.prime())) {
    if ((m * Matrix::column(v, m.prime())).is_zero()) ++count;
  }
  return count;
}

std::size_t power(std::size_t p, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= p;
  return r;
}

}  // namespace

TEST_CASE("rref of identity and zero") {
  const auto id = Matrix::identity(3);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 3);
  const Matrix z(2, 4);
  r = rref(z);
  CHECK(r.reduced == z);
  CHECK(r.rank == 0);
}

TEST_CASE("rref over F2 of the all-ones 2x2") {
  const auto m = Matrix::from_rows({{1, 1}, {1, 1}}, 2);
  const auto r = rref(m);
  CHECK(r.reduced == Matrix::from_rows({{1, 1}, {0, 0}}, 2));
  CHECK(r.rank == 1);
}

TEST_CASE("solve") {
  const auto id = Matrix::identity(3, 3);
  std::mt19937 rng(7);
  const auto b = random_matrix(rng, 3, 2, 3);
  REQUIRE(solve(id, b).has_value());
  CHECK(*solve(id, b) == b);
  const Matrix z(2, 2);
  const auto x = solve(z, Matrix(2, 1));
  REQUIRE(x.has_value());
  CHECK((z * *x).is_zero());
  CHECK_FALSE(solve(z, Matrix::from_rows({{1}, {0}}, 1)).has_value());
}

TEST_CASE("kernel and image examples") {
  const Matrix z(2, 3);
  CHECK(kernel(z).dim() == 3);
  CHECK(image(z).dim() == 0);
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(image(Matrix::identity(3)).dim() == 3);
  const auto m = Matrix::from_rows({{1, 1}}, 2);
  const auto k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(std::vector<Scalar>{1, 1}));
  CHECK(image(m).dim() == 1);
}

TEST_CASE("rank-nullity and kernel size against exhaustive enumeration") {
  std::mt19937 rng(11);
  for (Scalar p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      const auto m = random_matrix(rng, r, c, p);
      const auto k = kernel(m);
      CHECK(k.dim() + rank(m) == c);
      CHECK(power(p, k.dim()) == brute_kernel_size(m));
      for (std::size_t i = 0; i < k.dim(); ++i) {
        CHECK((m * Matrix::column(k.basis().row(i), p)).is_zero());
      }
    }
  }
}

TEST_CASE("solve round trip") {
  std::mt19937 rng(3);
  for (Scalar p : {2u, 3u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      const auto a = random_matrix(rng, r, c, p);
      const auto b = random_matrix(rng, r, 1 + rng() % 3, p);
      if (auto x = solve(a, b)) {
        CHECK(a * *x == b);
      } else {
        // inconsistent: some column of b leaves the column space
        bool outside = false;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (!image(a).contains(b.col(j))) outside = true;
        }
        CHECK(outside);
      }
      const auto x0 = random_matrix(rng, c, 2, p);
      const auto y = solve(a, a * x0);
      REQUIRE(y.has_value());
      CHECK(a * *y == a * x0);
    }
  }
}

TEST_CASE("subspace canonical form is basis independent") {
  std::mt19937 rng(5);
  for (Scalar p : {2u, 3u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_matrix(rng, 3, 5, p);
      // invertible row mixing gives another spanning set of the same row space
      Matrix g = random_matrix(rng, 3, 3, p);
      while (!inverse(g)) g = random_matrix(rng, 3, 3, p);
      CHECK(Subspace::from_rows(m) == Subspace::from_rows(g * m));
    }
  }
}

TEST_CASE("subspace sum and intersection dimensions") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = Subspace::from_rows(random_matrix(rng, 2, 4, 2));
    const auto b = Subspace::from_rows(random_matrix(rng, 2, 4, 2));
    const auto s = a.sum(b), i = a.intersect(b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    // exhaustive intersection count
    std::size_t common = 0;
    for (const auto& v : all_vectors(4, 2)) common += a.contains(v) && b.contains(v);
    CHECK(common == power(2, i.dim()));
  }
}

TEST_CASE("inverse and pow") {
  const auto m = Matrix::from_rows({{1, 1}, {0, 1}}, 2, 3);
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(2, 3));
  CHECK(m.pow(3) == Matrix::identity(2, 3));
  CHECK_FALSE(inverse(Matrix::from_rows({{1, 1}, {1, 1}}, 2)).has_value());
  CHECK(Matrix::identity(2).pow(0) == Matrix::identity(2));
}

TEST_CASE("field arithmetic") {
  PrimeField f{5};
  for (Scalar a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(-1) == 4);
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}
