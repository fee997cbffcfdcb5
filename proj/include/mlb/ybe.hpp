#pragma once

#include <string>
#include <vector>

#include "mlb/bialgebra.hpp"
#include "mlb/prelie.hpp"

namespace mlb {

/// r = sum coeff(i,j) e_i (x) e_j read as A* -> A; column j is r(f_j).
struct RMap {
  Matrix map;
  bool nondegenerate = false;
};
RMap r_as_map(const Tensor2& r);

/// Delta(x) = (L(x)(x)id - id(x)L(x)) r.  Throws DimMismatch unless r is
/// dim x dim.
Cobracket coboundary_cobracket(const MockLieAlgebra& a, const Tensor2& r);

/// (id + sigma + sigma^2)((id (x) Delta) Delta(e_i)) for every basis element.
std::vector<Tensor3> e_delta(const Cobracket& d);

/// The three products r12*r13, r13*r23, r12*r23 for r = sum a_ij e_i (x) e_j:
///   r12*r13 = sum a_ij a_pq (e_i e_p) (x) e_j (x) e_q
///   r13*r23 = sum a_ij a_pq e_i (x) e_p (x) (e_j e_q)
///   r12*r23 = sum a_ij a_pq e_i (x) (e_j e_p) (x) e_q
struct YbTerms {
  Tensor3 r12_r13;
  Tensor3 r13_r23;
  Tensor3 r12_r23;
};
YbTerms yb_bracket_terms(const StructureConstants& c, const Tensor2& r);

/// [[r,r]] = r12*r13 + r13*r23 - r12*r23.  Throws DimMismatch.
Tensor3 yb_bracket(const MockLieAlgebra& a, const Tensor2& r);

/// Q(x) = L(x)(x)id(x)id + id(x)L(x)(x)id + id(x)id(x)L(x) applied to t.
Tensor3 q_action(const MockLieAlgebra& a, std::span<const Rational> x, const Tensor3& t);

enum class Classification { triangular, quasitriangular, coboundary_only, not_coboundary_admissible };
std::string to_string(Classification c);

struct CoboundaryReport {
  bool cond_i = false;   // (L(x)(x)id - id(x)L(x))(r + tau r) == 0 for all x
  bool cond_ii = false;  // Q(x)[[r,r]] == 0 for all x
  bool ybe = false;      // [[r,r]] == 0
  bool skew = false;     // tau r == -r
  Classification classification = Classification::not_coboundary_admissible;
  Tensor3 bracket;
  /// Checks "cond_i", "cond_ii", "ybe", "skew" with first witnesses.
  AxiomReport report;
};
CoboundaryReport check_coboundary_conditions(const MockLieAlgebra& a, const Tensor2& r);

/// Checks "operator_form": r(f_j)*r(f_q) == r(L(r f_j)^T f_q + L(r f_q)^T f_j)
/// for all dual basis pairs; witness (j,q) with the difference in A.
/// Throws NotSkew unless r is skew-symmetric.
AxiomReport check_ybe_operator_form(const MockLieAlgebra& a, const Tensor2& r);

struct RotaBaxterCorrespondence {
  bool ybe = false;
  bool rota_baxter = false;
  Matrix r_phi;  // r o phi: A -> A
  /// Checks "ybe", "rota_baxter" and "agreement" (the two flags coincide).
  AxiomReport report;
};
/// Throws NotSkew or FormNotAdmissible.
RotaBaxterCorrespondence rota_baxter_correspondence(const MockLieAlgebra& a, const Tensor2& r,
                                                    const BilinearForm& w);

struct Lift {
  MockLieAlgebra algebra;  // A |x rho* V*, basis e1..en, f1..fm
  Tensor2 r;               // T - tau(T) with T = sum_i T(v_i) (x) v_i*
  Tensor3 bracket;         // [[r,r]] in the lifted algebra
};

/// Does not require t to be an O-operator.  Throws ShapeError unless t is
/// algebra dim x module dim.
Lift lift_o_operator(const Representation& rep, const Matrix& t);

/// Lift of the identity O-operator of the sub-adjacent algebra on (A, Theta).
Lift canonical_solution_from_prelie(const MockPreLieAlgebra& p);

}  // namespace mlb
