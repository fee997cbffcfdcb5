#pragma once

#include <string>
#include <vector>

#include "generators.hpp"
#include "mlb/ybe.hpp"

namespace mlb::testing {

/// Outcome of a randomized property run.  `positives` / `negatives` count
/// instances on which the compared predicates were true / false, so a sweep
/// that never exercises one side is visible.
struct Sweep {
  int trials = 0;
  int positives = 0;
  int negatives = 0;
  int disagreements = 0;
  std::string first_failure;

  bool ok() const { return disagreements == 0 && trials > 0; }
  void record(bool lhs, bool rhs, const std::string& what);
  std::string summary() const;
};

struct RCase {
  MockLieAlgebra algebra;
  Tensor2 r;
};

/// Basis of the annihilator {x : x y = 0 for all y}.
std::vector<Vector> annihilator(const MockLieAlgebra& a);

/// (algebra, r) pairs with total dim <= max_dim from several families:
/// random r on random algebras, r supported on the annihilator, lifted
/// O-operators, and the canonical r of a trivial double.
RCase random_r_case(Rng& rng, std::size_t max_dim, bool skew_only);

/// Cobrackets mixing bialgebras and non-bialgebras: coboundaries of
/// random r, the zero cobracket, random symmetric maps and single-entry
/// mutations of coboundaries.
struct CobracketCase {
  MockLieAlgebra algebra;
  Cobracket delta;
};
CobracketCase random_cobracket_case(Rng& rng, std::size_t max_dim);
/// Copy of d with one image coefficient changed; `symmetric` keeps tau d = d.
Cobracket mutate_cobracket(Rng& rng, const Cobracket& d, bool symmetric);

/// Coboundary cobracket always passes the compatibility check.
Sweep sweep_coboundary_compatibility(std::uint64_t seed, int count, std::size_t max_dim);
/// E_Delta(e_i) + Q(e_i)[[r,r]] == 0 for skew r.
Sweep sweep_bracket_identity(std::uint64_t seed, int count, std::size_t max_dim);
/// validate_bialgebra(coboundary) == cond_i && cond_ii.
Sweep sweep_coboundary_conditions(std::uint64_t seed, int count, std::size_t max_dim);
/// [[r,r]] == 0 iff the operator form holds, skew r.
Sweep sweep_operator_form(std::uint64_t seed, int count, std::size_t max_dim);
/// check_o_operator == ([[T - tau T]] == 0) on generated and mutated T, and
/// agreement with the operator form in the lifted algebra.
Sweep sweep_lift(std::uint64_t seed, int count, std::size_t max_dim);
/// Canonical r of generated mock-pre-Lie algebras solves the equation.
Sweep sweep_canonical_solution(std::uint64_t seed, int count, std::size_t max_dim);
/// bialgebra ok == matched pair ok == Manin triple ok.
Sweep sweep_bialgebra_equivalence(const std::vector<CobracketCase>& cases);
Sweep sweep_bialgebra_equivalence(std::uint64_t seed, int count, std::size_t max_dim);
/// Both compatibility equations of the standard matched pair agree.
Sweep sweep_matched_pair_equations(std::uint64_t seed, int count, std::size_t max_dim);
/// Compatibility of Delta on (A, A*) iff compatibility of gamma on (A*, A),
/// restricted to symmetric Delta with a mock-Lie dual product.
Sweep sweep_dual_cobracket(std::uint64_t seed, int count, std::size_t max_dim);
/// Double of a bialgebra: canonical r satisfies cond_i, cond_ii, ybe, and the
/// embeddings are homomorphisms.
Sweep check_double(const MockLieAlgebra& a, const Cobracket& d);
Sweep sweep_double(std::uint64_t seed, int count, std::size_t max_dim);
/// Dual representations validate; semidirect products validate; one mutated
/// action entry that breaks the representation also breaks Jacobi.
Sweep sweep_dual_and_semidirect(std::uint64_t seed, int count, std::size_t max_dim);
/// ybe flag == Rota-Baxter flag of r o phi on doubles with the pairing form.
Sweep sweep_rota_baxter(std::uint64_t seed, int count, std::size_t max_dim);
/// Library coboundary, bracket, E_Delta and Q agree with the oracle.
Sweep sweep_oracle_agreement(std::uint64_t seed, int count, std::size_t max_dim);

}  // namespace mlb::testing
