#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlb/algebra.hpp"

namespace mlb {

/// Checks "representation": rho(e_i * e_j) == -rho(e_i)rho(e_j) - rho(e_j)rho(e_i)
/// on all basis pairs.  The witness residual is
/// rho(e_i * e_j) + rho(e_i)rho(e_j) + rho(e_j)rho(e_i).
/// Throws ShapeError unless there is one square matrix per basis element,
/// all of the same size.
AxiomReport validate_representation(const MockLieAlgebra& a, std::span<const Matrix> action);
AxiomReport validate_representation(const StructureConstants& c, std::span<const Matrix> action);

/// Validated representation of a mock-Lie algebra on a module of dimension
/// module_dim(); action(i) is the matrix of rho(e_i).
class Representation {
public:
  /// Throws NotRepresentation (or ShapeError) when validation fails.
  static Representation create(MockLieAlgebra algebra, std::vector<Matrix> action);

  const MockLieAlgebra& algebra() const { return algebra_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }
  /// rho(x) for an arbitrary algebra element x.
  Matrix act(std::span<const Rational> x) const;

  /// True when the module is the algebra itself acting by left multiplication.
  bool is_adjoint() const;

  friend bool operator==(const Representation&, const Representation&) = default;

private:
  Representation(MockLieAlgebra algebra, std::size_t module_dim, std::vector<Matrix> action)
      : algebra_(std::move(algebra)), module_dim_(module_dim), action_(std::move(action)) {}

  MockLieAlgebra algebra_;
  std::size_t module_dim_;
  std::vector<Matrix> action_;
};

Representation adjoint_rep(const MockLieAlgebra& a);
Representation zero_representation(const MockLieAlgebra& a, std::size_t module_dim);

/// rho* on the dual module, written in the dual basis: rho*(e_i) = rho(e_i)^T.
Representation dual_representation(const Representation& r);

/// A (+) V with (x+u)(y+v) = xy + rho(x)v + rho(y)u.  Basis order is the
/// algebra basis followed by the module basis, labelled <prefix>1..<prefix>m.
MockLieAlgebra semidirect_product(const Representation& r, const std::string& module_prefix = "v");

class BilinearForm {
public:
  BilinearForm() = default;
  /// Throws ShapeError for a non-square gram matrix.
  explicit BilinearForm(Matrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational operator()(std::span<const Rational> x, std::span<const Rational> y) const;

  bool is_symmetric() const { return gram_ == gram_.transpose(); }
  bool is_skew() const { return gram_ == -gram_.transpose(); }
  bool is_nondegenerate() const { return rank(gram_) == gram_.rows(); }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
  Matrix gram_;
};

/// Checks "invariant" (w(xy, z) == w(x, yz) on basis triples), "symmetric"
/// and "nondegenerate".  Throws ShapeError when the gram size differs from
/// the algebra dimension.
AxiomReport check_invariant_form(const MockLieAlgebra& a, const BilinearForm& w);
AxiomReport check_invariant_form(const StructureConstants& c, const BilinearForm& w);

/// phi: A -> A* with <phi(x), y> = w(x, y), in the dual basis.  The result
/// is verified to intertwine the adjoint and coadjoint representations.
/// Throws FormNotAdmissible unless w is symmetric, invariant, nondegenerate.
Matrix equivalence_from_form(const MockLieAlgebra& a, const BilinearForm& w);

/// Checks "skew", "nondegenerate" and "cyclic"
/// (w(xy, z) + w(yz, x) + w(zx, y) == 0 on basis triples).
AxiomReport check_symplectic_form(const MockLieAlgebra& a, const BilinearForm& w);

}  // namespace mlb
