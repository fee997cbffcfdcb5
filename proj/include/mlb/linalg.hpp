#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mlb/errors.hpp"
#include "mlb/rational.hpp"

namespace mlb {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
/// Standard basis vector e_index of length n (0-based index).
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(std::span<const Rational> v);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& s, std::span<const Rational> v);

/// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-list constructor; throws ShapeError on ragged input.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  /// Throws ShapeError unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> entries() const { return data_; }

  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Vector apply(std::span<const Rational> v) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Rational& s, Matrix m);
  friend Matrix operator-(Matrix m) { return Rational(-1) * std::move(m); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const Matrix& m);

/// Exact inverse.  Throws ShapeError for non-square input and Singular (with
/// the rank) when no inverse exists.
Matrix invert_matrix(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column of the reduced row
/// echelon form.
std::vector<Vector> nullspace(const Matrix& m);

/// Element of V_1 (x) ... (x) V_Arity stored densely; coefficient
/// (i_1,...,i_k) multiplies b_{i_1} (x) ... (x) b_{i_k}, lexicographic layout.
template <std::size_t Arity>
class Tensor {
public:
  using Index = std::array<std::size_t, Arity>;

  Tensor() { dims_.fill(0); }
  explicit Tensor(Index dims) : dims_(dims), coeffs_(volume(dims)) {}
  /// Throws ShapeError unless coeffs.size() matches the product of dims.
  Tensor(Index dims, std::vector<Rational> coeffs) : dims_(dims), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != volume(dims_)) throw ShapeError("tensor coefficient count does not match dims");
  }

  static Tensor cube(std::size_t n) {
    Index d;
    d.fill(n);
    return Tensor(d);
  }

  const Index& dims() const { return dims_; }
  std::size_t dim(std::size_t axis) const { return dims_[axis]; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  std::size_t offset(const Index& idx) const {
    std::size_t off = 0;
    for (std::size_t a = 0; a < Arity; ++a) off = off * dims_[a] + idx[a];
    return off;
  }
  Index unravel(std::size_t off) const {
    Index idx{};
    for (std::size_t a = Arity; a-- > 0;) {
      idx[a] = off % dims_[a];
      off /= dims_[a];
    }
    return idx;
  }

  template <typename... I>
  Rational& operator()(I... i) {
    static_assert(sizeof...(I) == Arity);
    return coeffs_[offset(Index{static_cast<std::size_t>(i)...})];
  }
  template <typename... I>
  const Rational& operator()(I... i) const {
    static_assert(sizeof...(I) == Arity);
    return coeffs_[offset(Index{static_cast<std::size_t>(i)...})];
  }
  Rational& at(const Index& idx) { return coeffs_[offset(idx)]; }
  const Rational& at(const Index& idx) const { return coeffs_[offset(idx)]; }
  Rational& flat(std::size_t off) { return coeffs_[off]; }
  const Rational& flat(std::size_t off) const { return coeffs_[off]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  Tensor& operator+=(const Tensor& rhs) {
    if (dims_ != rhs.dims_) throw DimMismatch("tensor dims differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& rhs) {
    if (dims_ != rhs.dims_) throw DimMismatch("tensor dims differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  Tensor& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend Tensor operator+(Tensor lhs, const Tensor& rhs) { return lhs += rhs; }
  friend Tensor operator-(Tensor lhs, const Tensor& rhs) { return lhs -= rhs; }
  friend Tensor operator*(const Rational& s, Tensor t) { return t *= s; }
  friend Tensor operator-(Tensor t) { return t *= Rational(-1); }
  friend bool operator==(const Tensor&, const Tensor&) = default;

private:
  static std::size_t volume(const Index& dims) {
    std::size_t v = 1;
    for (auto d : dims) v *= d;
    return v;
  }

  Index dims_;
  std::vector<Rational> coeffs_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

Tensor2 outer(std::span<const Rational> a, std::span<const Rational> b);
Tensor3 outer(std::span<const Rational> a, std::span<const Rational> b, std::span<const Rational> c);

/// Reads a Tensor2 as the matrix of its coefficients (rows = left factor).
Matrix as_matrix(const Tensor2& t);
Tensor2 from_matrix(const Matrix& m);

/// Permutation of tensor factors: factor k of the input lands in slot
/// perm[k] of the output.  The switch is {1, 0}; the cyclic shift
/// x(x)y(x)z -> y(x)z(x)x is {2, 0, 1}.
using FactorPermutation = std::vector<std::size_t>;

/// perm2 after perm1, so permute(permute(t, p1), p2) == permute(t, compose(p2, p1)).
FactorPermutation compose(const FactorPermutation& second, const FactorPermutation& first);
FactorPermutation inverse(const FactorPermutation& perm);

namespace detail {
void check_permutation(const FactorPermutation& perm, std::size_t arity);
}

/// Throws ArityMismatch when perm is not a permutation of the tensor's factors.
template <std::size_t Arity>
Tensor<Arity> permute_tensor(const Tensor<Arity>& t, const FactorPermutation& perm) {
  detail::check_permutation(perm, Arity);
  typename Tensor<Arity>::Index out_dims{};
  for (std::size_t k = 0; k < Arity; ++k) out_dims[perm[k]] = t.dim(k);
  Tensor<Arity> out(out_dims);
  for (std::size_t off = 0; off < t.size(); ++off) {
    if (t.flat(off).is_zero()) continue;
    const auto idx = t.unravel(off);
    typename Tensor<Arity>::Index target{};
    for (std::size_t k = 0; k < Arity; ++k) target[perm[k]] = idx[k];
    out.at(target) = t.flat(off);
  }
  return out;
}

/// tau(a (x) b) = b (x) a.
inline Tensor2 switch_factors(const Tensor2& t) { return permute_tensor(t, {1, 0}); }
/// sigma(x (x) y (x) z) = y (x) z (x) x.
inline Tensor3 cycle_factors(const Tensor3& t) { return permute_tensor(t, {2, 0, 1}); }

/// One slot of a factorwise map F_1 (x) ... (x) F_k.  Default-constructed
/// slots act as the identity.
class FactorMap {
public:
  FactorMap() = default;
  FactorMap(Matrix m) : matrix_(std::move(m)), identity_(false) {}  // NOLINT(google-explicit-constructor)
  static FactorMap identity() { return {}; }

  bool is_identity() const { return identity_; }
  const Matrix& matrix() const { return matrix_; }

private:
  Matrix matrix_;
  bool identity_ = true;
};

/// (F_1 (x) ... (x) F_k)(t), applied one factor at a time.  Throws
/// ArityMismatch when maps.size() != Arity and DimMismatch when a map's
/// column count differs from the corresponding tensor dim.
template <std::size_t Arity>
Tensor<Arity> apply_factorwise(std::span<const FactorMap> maps, const Tensor<Arity>& t) {
  if (maps.size() != Arity) throw ArityMismatch("number of factor maps differs from tensor arity");
  Tensor<Arity> current = t;
  for (std::size_t axis = 0; axis < Arity; ++axis) {
    const FactorMap& f = maps[axis];
    if (f.is_identity()) continue;
    const Matrix& m = f.matrix();
    if (m.cols() != current.dim(axis)) throw DimMismatch("factor map columns differ from tensor dim");
    auto dims = current.dims();
    dims[axis] = m.rows();
    Tensor<Arity> next(dims);
    for (std::size_t off = 0; off < current.size(); ++off) {
      const Rational& c = current.flat(off);
      if (c.is_zero()) continue;
      auto idx = current.unravel(off);
      const std::size_t col = idx[axis];
      for (std::size_t row = 0; row < m.rows(); ++row) {
        const Rational& a = m(row, col);
        if (a.is_zero()) continue;
        idx[axis] = row;
        next.at(idx) += a * c;
      }
    }
    current = std::move(next);
  }
  return current;
}

template <std::size_t Arity>
Tensor<Arity> apply_factorwise(std::initializer_list<FactorMap> maps, const Tensor<Arity>& t) {
  return apply_factorwise<Arity>(std::span<const FactorMap>(maps.begin(), maps.size()), t);
}

}  // namespace mlb
