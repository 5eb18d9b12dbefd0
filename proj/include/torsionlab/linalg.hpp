#pragma once

// Dense exact linear algebra over a prime field F_p.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torsionlab {

using Scalar = std::uint32_t;

/// Arithmetic in F_p. `p` must be prime; checked by `is_prime` at the boundary.
struct PrimeField {
  Scalar p = 2;

  Scalar add(Scalar a, Scalar b) const { return (a + b) % p; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p - b) % p; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t{a} * b) % p);
  }
  Scalar neg(Scalar a) const { return (p - a) % p; }
  Scalar inv(Scalar a) const;
  Scalar reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p);
    return static_cast<Scalar>(r < 0 ? r + p : r);
  }
  bool operator==(const PrimeField& o) const = default;
};

bool is_prime(std::uint64_t n);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Scalar p = 2);

  static Matrix identity(std::size_t n, Scalar p = 2);
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols, Scalar p = 2);
  /// Column vector.
  static Matrix column(const std::vector<Scalar>& v, Scalar p = 2);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar prime() const { return field_.p; }
  const PrimeField& field() const { return field_; }

  Scalar operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t v) {
    data_[r * cols_ + c] = field_.reduce(v);
  }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> col(std::size_t c) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Scalar s) const;
  Matrix transpose() const;
  Matrix pow(std::size_t k) const;

  /// Columns [c0, c0 + n).
  Matrix col_block(std::size_t c0, std::size_t n) const;
  Matrix row_block(std::size_t r0, std::size_t n) const;
  Matrix select_cols(const std::vector<std::size_t>& cols) const;

  bool operator==(const Matrix& o) const = default;

  std::vector<std::vector<std::int64_t>> to_rows() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_{};
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// X with A X = B, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Subspace of F_p^n with a canonical (reduced row echelon) basis stored as rows.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, Scalar p);
  /// Span of the rows of `spanning`.
  static Subspace from_rows(const Matrix& spanning);
  static Subspace from_columns(const Matrix& spanning);
  static Subspace full(std::size_t ambient_dim, Scalar p);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  Scalar prime() const { return p_; }
  /// Rows form the canonical basis.
  const Matrix& basis() const { return basis_; }
  /// Canonical basis as columns.
  Matrix basis_columns() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Standard basis vectors spanning a complement, as columns.
  Matrix complement_columns() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Scalar p_ = 2;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : M x = 0} inside F_p^cols.
Subspace kernel(const Matrix& m);
/// Column space inside F_p^rows.
Subspace image(const Matrix& m);

}  // namespace torsionlab
