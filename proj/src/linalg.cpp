#include "torsionlab/linalg.hpp"

#include <sstream>

namespace torsionlab {

Scalar PrimeField::inv(Scalar a) const {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar p)
    : rows_(rows), cols_(cols), field_{p}, data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, Scalar p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols, Scalar p) {
  Matrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v, Scalar p) {
  Matrix m(v.size(), 1, p);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % p;
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> Matrix::col(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (auto x : data_) {
    if (x) return false;
  }
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
  Matrix out(rows_, o.cols_, field_.p);
  const std::uint64_t p = field_.p;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        out.data_[i * o.cols_ + j] = static_cast<Scalar>(
            (out.data_[i * o.cols_ + j] + a * o(k, j)) % p);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix sum shape");
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = field_.add(data_[i], o.data_[i]);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix difference shape");
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = field_.sub(data_[i], o.data_[i]);
  }
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = field_.mul(x, s % field_.p);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_.p);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) throw std::invalid_argument("power of non-square matrix");
  Matrix result = identity(rows_, field_.p);
  Matrix base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Matrix Matrix::col_block(std::size_t c0, std::size_t n) const {
  Matrix out(rows_, n, field_.p);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = (*this)(r, c0 + c);
  }
  return out;
}

Matrix Matrix::row_block(std::size_t r0, std::size_t n) const {
  Matrix out(n, cols_, field_.p);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r0 + r, c);
  }
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
  Matrix out(rows_, cols.size(), field_.p);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(r, cols[c]);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_,
                                             std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape");
  Matrix out(a.rows(), a.cols() + b.cols(), a.prime());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape");
  Matrix out(a.rows() + b.rows(), a.cols(), a.prime());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) out(a.rows() + r, c) = b(r, c);
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.prime());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      out(a.rows() + r, a.cols() + c) = b(r, c);
    }
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const auto& f = m.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    }
    const Scalar s = f.inv(a(row, col));
    if (s != 1) {
      for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), s);
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
      }
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  auto r = rref(hstack(m, Matrix::identity(n, m.prime())));
  if (r.rank < n || (n && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.col_block(n, n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  auto r = rref(hstack(a, b));
  Matrix x(n, b.cols(), a.prime());
  for (std::size_t i = 0; i < r.rank; ++i) {
    const auto pc = r.pivots[i];
    if (pc >= n) return std::nullopt;  // pivot in the augmented block
    for (std::size_t c = 0; c < b.cols(); ++c) x(pc, c) = r.reduced(i, n + c);
  }
  return x;
}

Subspace::Subspace(std::size_t ambient_dim, Scalar p)
    : ambient_(ambient_dim), p_(p), basis_(0, ambient_dim, p) {}

Subspace Subspace::from_rows(const Matrix& spanning) {
  Subspace s(spanning.cols(), spanning.prime());
  auto r = rref(spanning);
  s.basis_ = r.reduced.row_block(0, r.rank);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::from_columns(const Matrix& spanning) {
  return from_rows(spanning.transpose());
}

Subspace Subspace::full(std::size_t ambient_dim, Scalar p) {
  return from_rows(Matrix::identity(ambient_dim, p));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector dimension");
  Matrix row(1, ambient_, p_);
  for (std::size_t i = 0; i < ambient_; ++i) row(0, i) = v[i] % p_;
  return rank(vstack(basis_, row)) == dim();
}

bool Subspace::contains(const Subspace& o) const {
  return sum(o).dim() == dim();
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  return from_rows(vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  // x = B^T u = C^T w  <=>  [B^T | -C^T] (u, w) = 0
  const Matrix bt = basis_.transpose();
  const Matrix ct = o.basis_.transpose().scaled(p_ - 1);
  const Subspace k = kernel(hstack(bt, ct));
  const Matrix u = k.basis().col_block(0, dim());
  return from_rows(u * basis_);
}

Matrix Subspace::complement_columns() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto pc : pivots_) is_pivot[pc] = true;
  Matrix out(ambient_, ambient_ - dim(), p_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!is_pivot[i]) out(i, c++) = 1;
  }
  return out;
}

Subspace kernel(const Matrix& m) {
  auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto pc : r.pivots) is_pivot[pc] = true;
  Matrix basis(n - r.rank, n, m.prime());
  const auto& f = m.field();
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(k, free) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      basis(k, r.pivots[i]) = f.neg(r.reduced(i, free));
    }
    ++k;
  }
  return Subspace::from_rows(basis);
}

Subspace image(const Matrix& m) { return Subspace::from_columns(m); }

}  // namespace torsionlab
