#pragma once

#include <string>
#include <vector>

#include "mlb/representation.hpp"

namespace mlb {

/// Linear map A -> A (x) A stored as one image per basis element.  The
/// algebra is kept as raw constants so that cobrackets over candidate
/// (possibly non-mock-Lie) products, such as a dual product, can be checked.
class Cobracket {
public:
  Cobracket() = default;
  /// Throws ShapeError unless there is one dim x dim image per basis element.
  Cobracket(StructureConstants algebra, std::vector<Tensor2> images);
  static Cobracket zero(const StructureConstants& algebra);

  std::size_t dim() const { return algebra_.dim(); }
  const StructureConstants& algebra() const { return algebra_; }
  const std::vector<Tensor2>& images() const { return images_; }
  const Tensor2& image(std::size_t i) const { return images_.at(i); }
  /// Delta(x) by linearity; throws DimMismatch.
  Tensor2 apply(std::span<const Rational> x) const;

  friend bool operator==(const Cobracket&, const Cobracket&) = default;

private:
  StructureConstants algebra_;
  std::vector<Tensor2> images_;
};

/// f_j <> f_k = sum_i Delta(e_i)[j,k] f_i, in the basis of A* dual to A's.
StructureConstants dual_product_from_cobracket(const Cobracket& d);

/// Checks "compatible": Delta(x*y) + (L(x)(x)id + id(x)L(x))Delta(y)
/// + (L(y)(x)id + id(x)L(y))Delta(x) == 0 on basis pairs (x,y).  The
/// witness residual is that sum.
AxiomReport check_cocycle_compatibility(const Cobracket& d);

/// Checks "symmetric" (tau Delta(e_i) == Delta(e_i)), "dual_jacobi" (Jacobi
/// identity of the dual product) and "compatible".
AxiomReport validate_bialgebra(const Cobracket& d);

/// The product of A read as a cobracket gamma on A*:
/// gamma(f_i) = sum_{a,b} c(a,b,i) f_a (x) f_b.  Its algebra is the dual product.
Cobracket dual_cobracket(const Cobracket& d);

/// Two candidate algebras with mutual actions.  rho[i] acts on H for the A
/// basis element e_i; mu[p] acts on A for the H basis element h_p.
struct MatchedPairData {
  StructureConstants a;
  StructureConstants h;
  std::vector<Matrix> rho;
  std::vector<Matrix> mu;
  std::vector<std::string> a_labels;
  std::vector<std::string> h_labels;
};

/// Builds the data from validated pieces; throws DimMismatch unless rho acts
/// on H's space and mu on A's.
MatchedPairData make_matched_pair(const Representation& rho, const Representation& mu);

/// (A, A*; L*, coadjoint of the dual product) for a cobracket on A.
MatchedPairData standard_matched_pair(const Cobracket& d);

/// Checks, in order: "a.commutative", "a.jacobi", "h.commutative",
/// "h.jacobi", "rho.representation", "mu.representation", then
/// "rho_compatibility" (witness (i,p,q), residual in H):
///   rho(x)(a<>b) + rho(x)a<>b + a<>rho(x)b + rho(mu(a)x)b + rho(mu(b)x)a
/// and "mu_compatibility" (witness (p,i,j), residual in A):
///   mu(a)(x*y) + mu(a)x*y + x*mu(a)y + mu(rho(x)a)y + mu(rho(y)a)x.
/// Throws ShapeError on inconsistent sizes.
AxiomReport check_matched_pair(const MatchedPairData& m);

/// Constants of A (+) H with
/// (x+a)(y+b) = xy + mu(b)x + mu(a)y + a<>b + rho(y)a + rho(x)b,
/// basis order A then H.  No axioms are checked.
StructureConstants bicrossed_constants(const MatchedPairData& m);

/// Validated A |><| H.  Throws NotMatchedPair when check_matched_pair fails.
MockLieAlgebra bicrossed_product(const MatchedPairData& m);

struct ManinTripleData {
  StructureConstants total;
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  BilinearForm form;
};

struct ManinReport {
  /// "total.commutative", "total.jacobi", "plus_subalgebra",
  /// "minus_subalgebra", "plus_isotropic", "minus_isotropic", "invariant",
  /// "symmetric", "nondegenerate".
  AxiomReport report;
  /// plus is the first half of the basis, minus the second, and the form is
  /// the pairing <x, f> + <f, x> between them.
  bool standard = false;

  bool ok() const { return report.ok(); }
};

/// Throws ShapeError unless plus and minus partition the basis.
ManinReport check_manin_triple(const ManinTripleData& m);

/// Total A (+) A* with the bicrossed product of standard_matched_pair(d),
/// split A / A*, with the pairing form.
ManinTripleData standard_manin_triple(const Cobracket& d);

/// Gram matrix of the pairing between A and A* on A (+) A*.
Matrix pairing_form(std::size_t n);

struct DoubleConstruction {
  MockLieAlgebra algebra;   // A |><| A*, basis e1..en, f1..fn
  Tensor2 canonical_r;      // sum_i e_i (x) f_i
  Cobracket cobracket;      // coboundary cobracket of canonical_r
  /// "i1_homomorphism": Delta_D(e_i) == -Delta_A(e_i);
  /// "i2_homomorphism": Delta_D(f_i) == gamma(f_i).
  AxiomReport homomorphisms;
};

/// Throws NotBialgebra unless validate_bialgebra(d) passes, DimMismatch when
/// d belongs to a different algebra.
DoubleConstruction double_construction(const MockLieAlgebra& a, const Cobracket& d);

}  // namespace mlb
