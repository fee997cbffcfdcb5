#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mlb/axioms.hpp"
#include "mlb/linalg.hpp"

namespace mlb {

/// Raw multiplication table e_i * e_j = sum_k c(i,j,k) e_k.  No axioms are
/// assumed; this is the input side of every validator.
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : table_(Tensor3::cube(dim)) {}
  /// Throws ShapeError unless the table is dim x dim x dim.
  explicit StructureConstants(Tensor3 table);
  /// Throws ShapeError unless values.size() == dim^3 (layout (i,j,k) lexicographic).
  static StructureConstants from_flat(std::size_t dim, std::vector<Rational> values);

  std::size_t dim() const { return table_.dim(0); }
  const Tensor3& table() const { return table_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return table_(i, j, k); }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return table_(i, j, k); }

  /// Bilinear extension of the table; throws DimMismatch on wrong lengths.
  Vector multiply(std::span<const Rational> x, std::span<const Rational> y) const;
  Vector product(std::size_t i, std::size_t j) const;
  /// Matrix of y -> x * y; entry (k, j) is sum_i x_i c(i,j,k).
  Matrix left_multiplication(std::span<const Rational> x) const;
  Matrix left_multiplication(std::size_t i) const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
  Tensor3 table_;
};

/// Checks "commutative" (c(i,j,k) == c(j,i,k)) and "jacobi"
/// (x(yz) + y(zx) + z(xy) == 0) on all basis pairs and triples.  Witnesses
/// carry the lexicographically first violating tuple and its residual.
AxiomReport validate_mock_lie(const StructureConstants& c);

/// Checks "anti_associative": (x*y)*z + x*(y*z) == 0 on basis triples.
AxiomReport check_anti_associative(const StructureConstants& star);

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "e");

/// Commutative algebra satisfying the Jacobi identity.  Instances exist only
/// in validated state.
class MockLieAlgebra {
public:
  /// Throws NotMockLie when validate_mock_lie fails, ShapeError when the
  /// label count differs from the dimension.  Empty labels default to e1..en.
  static MockLieAlgebra create(StructureConstants constants, std::vector<std::string> labels = {});
  static MockLieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return constants_.dim(); }
  const StructureConstants& constants() const { return constants_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vector multiply(std::span<const Rational> x, std::span<const Rational> y) const {
    return constants_.multiply(x, y);
  }
  Vector product(std::size_t i, std::size_t j) const { return constants_.product(i, j); }
  Matrix left_multiplication(std::span<const Rational> x) const { return constants_.left_multiplication(x); }
  Matrix left_multiplication(std::size_t i) const { return constants_.left_multiplication(i); }

  /// Structural equality of the multiplication tables; labels are cosmetic.
  friend bool operator==(const MockLieAlgebra& a, const MockLieAlgebra& b) {
    return a.constants_ == b.constants_;
  }

private:
  MockLieAlgebra(StructureConstants constants, std::vector<std::string> labels)
      : constants_(std::move(constants)), labels_(std::move(labels)) {}

  StructureConstants constants_;
  std::vector<std::string> labels_;
};

inline Vector multiply(const MockLieAlgebra& a, std::span<const Rational> x, std::span<const Rational> y) {
  return a.multiply(x, y);
}

/// Symmetrization x * y + y * x of an anti-associative product.  Throws
/// NotAntiAssociative naming the first failing triple.
MockLieAlgebra from_anti_associative(const StructureConstants& star);

/// Seeded square-zero central extension on V (+) W: a random symmetric
/// bilinear map V x V -> W, every other product zero.  At least one structure
/// constant is nonzero whenever both dims are positive.
MockLieAlgebra random_central_extension(std::size_t dim_v, std::size_t dim_w, std::uint64_t seed);

}  // namespace mlb
