#include "mlb/linalg.hpp"

#include <algorithm>
#include <string>

namespace mlb {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n);
  v.at(index) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimMismatch("vector lengths differ");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimMismatch("vector lengths differ");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Rational& s, std::span<const Rational> v) {
  Vector out(v.begin(), v.end());
  for (auto& c : out) c *= s;
  return out;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw ShapeError("matrix has " + std::to_string(data_.size()) + " entries, expected " +
                     std::to_string(rows_ * cols_));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return mlb::is_zero(data_); }

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimMismatch("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimMismatch("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimMismatch("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DimMismatch("matrix product dimension mismatch");
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (auto& c : m.data_) c *= s;
  return m;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return reduce(work).size();
}

Matrix invert_matrix(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = reduce(aug);
  std::size_t left_rank = 0;
  for (auto p : pivots)
    if (p < n) ++left_rank;
  if (left_rank < n) throw Singular(left_rank, n);
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix work = m;
  const auto pivots = reduce(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Tensor2 outer(std::span<const Rational> a, std::span<const Rational> b) {
  Tensor2 t({a.size(), b.size()});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) t(i, j) = a[i] * b[j];
  }
  return t;
}

Tensor3 outer(std::span<const Rational> a, std::span<const Rational> b, std::span<const Rational> c) {
  Tensor3 t({a.size(), b.size(), c.size()});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) t(i, j, k) = ab * c[k];
    }
  }
  return t;
}

Matrix as_matrix(const Tensor2& t) {
  return Matrix(t.dim(0), t.dim(1), std::vector<Rational>(t.coeffs().begin(), t.coeffs().end()));
}

Tensor2 from_matrix(const Matrix& m) {
  return Tensor2({m.rows(), m.cols()}, std::vector<Rational>(m.entries().begin(), m.entries().end()));
}

FactorPermutation compose(const FactorPermutation& second, const FactorPermutation& first) {
  if (second.size() != first.size()) throw ArityMismatch("composing permutations of different arity");
  FactorPermutation out(first.size());
  for (std::size_t k = 0; k < first.size(); ++k) out[k] = second.at(first[k]);
  return out;
}

FactorPermutation inverse(const FactorPermutation& perm) {
  FactorPermutation out(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out.at(perm[k]) = k;
  return out;
}

namespace detail {

void check_permutation(const FactorPermutation& perm, std::size_t arity) {
  if (perm.size() != arity)
    throw ArityMismatch("permutation of " + std::to_string(perm.size()) + " factors applied to arity " +
                        std::to_string(arity));
  std::vector<bool> seen(arity, false);
  for (auto p : perm) {
    if (p >= arity || seen[p]) throw ArityMismatch("not a permutation of the tensor factors");
    seen[p] = true;
  }
}

}  // namespace detail

}  // namespace mlb
