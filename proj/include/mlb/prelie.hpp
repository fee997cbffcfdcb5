#pragma once

#include <string>
#include <vector>

#include "mlb/representation.hpp"

namespace mlb {

/// Checks "mock_pre_lie": Aass(x,y,z) == -Aass(y,x,z) on basis triples, with
/// Aass(x,y,z) = (x.y).z + x.(y.z).  The witness residual is
/// Aass(x,y,z) + Aass(y,x,z).
AxiomReport validate_mock_pre_lie(const StructureConstants& d);

/// Product x.y = sum_k d(i,j,k) e_k, not necessarily commutative.  Instances
/// exist only in validated state.
class MockPreLieAlgebra {
public:
  /// Throws NotMockPreLie, or ShapeError on a label count mismatch.
  static MockPreLieAlgebra create(StructureConstants constants, std::vector<std::string> labels = {});

  std::size_t dim() const { return constants_.dim(); }
  const StructureConstants& constants() const { return constants_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Vector multiply(std::span<const Rational> x, std::span<const Rational> y) const {
    return constants_.multiply(x, y);
  }
  Vector product(std::size_t i, std::size_t j) const { return constants_.product(i, j); }
  Matrix left_multiplication(std::size_t i) const { return constants_.left_multiplication(i); }

  friend bool operator==(const MockPreLieAlgebra& a, const MockPreLieAlgebra& b) {
    return a.constants_ == b.constants_;
  }

private:
  MockPreLieAlgebra(StructureConstants constants, std::vector<std::string> labels)
      : constants_(std::move(constants)), labels_(std::move(labels)) {}

  StructureConstants constants_;
  std::vector<std::string> labels_;
};

struct SubAdjacent {
  MockLieAlgebra algebra;   // x * y = x.y + y.x
  Representation theta;     // theta(x)y = x.y
};

SubAdjacent sub_adjacent(const MockPreLieAlgebra& p);

struct OOperatorCheck {
  /// Single check "o_operator"; witness indices are the module basis pair
  /// (u,v), residual T(u)*T(v) - T(rho(Tu)v + rho(Tv)u).
  AxiomReport report;
  /// The representation is the adjoint representation of its own algebra.
  bool adjoint = false;

  bool ok() const { return report.ok(); }
  bool rota_baxter() const { return adjoint && report.ok(); }
};

/// Throws ShapeError unless t is algebra dim x module dim.
OOperatorCheck check_o_operator(const Representation& rep, const Matrix& t);

/// T: V -> A for a representation (V, rho) of A.  Instances are validated.
class OOperator {
public:
  /// Throws NotOOperator or ShapeError.
  static OOperator create(Representation rep, Matrix map);

  const Representation& rep() const { return rep_; }
  const Matrix& map() const { return map_; }

private:
  OOperator(Representation rep, Matrix map) : rep_(std::move(rep)), map_(std::move(map)) {}

  Representation rep_;
  Matrix map_;
};

/// u.v = rho(Tu)v on the module space.
MockPreLieAlgebra prelie_from_o_operator(const OOperator& op);

/// x.y = T(rho(x) T^-1 y) on the algebra itself; its sub-adjacent algebra is
/// the original one.  Throws Singular when T is not invertible.
MockPreLieAlgebra compatible_prelie_from_invertible_o(const OOperator& op);

/// x.y = T^-1(L(x)^T T y) with <T(x), y> = w(x, y).  Satisfies
/// w(x.y, z) == w(y, x*z) and symmetrizes to the product of a.  Throws
/// NotSymplectic unless check_symplectic_form passes.
MockPreLieAlgebra prelie_from_symplectic(const MockLieAlgebra& a, const BilinearForm& w);

}  // namespace mlb
