#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

using namespace mlb;
using namespace mlb::testing;

namespace {

void expect_sweep(const Sweep& s, bool need_both_sides = true) {
  EXPECT_TRUE(s.ok()) << s.summary();
  if (need_both_sides) {
    EXPECT_GT(s.positives, 0) << s.summary();
    EXPECT_GT(s.negatives, 0) << s.summary();
  }
}

}  // namespace

TEST(RAsMap, Examples) {
  const RMap zero = r_as_map(Tensor2::cube(3));
  EXPECT_TRUE(zero.map.is_zero());
  EXPECT_FALSE(zero.nondegenerate);
  const RMap w = r_as_map(wedge(4, 1, 2));
  // r(f2) = e1, r(f1) = -e2
  EXPECT_EQ(w.map.column(1), e(4, 1));
  EXPECT_EQ(w.map.column(0), scale(-1, e(4, 2)));
  EXPECT_FALSE(w.nondegenerate);
  EXPECT_TRUE(r_as_map(wedge(2, 1, 2)).nondegenerate);
}

TEST(CoboundaryCobracket, A4) {
  const MockLieAlgebra a = a4();
  const Cobracket d = coboundary_cobracket(a, wedge(4, 1, 2));
  EXPECT_EQ(d.image(0), simple2(4, 2, 2, 2));
  EXPECT_EQ(d.image(2), simple2(4, 2, 4) + simple2(4, 4, 2));
  EXPECT_TRUE(d.image(1).is_zero());
  EXPECT_TRUE(d.image(3).is_zero());
  const Cobracket zero = coboundary_cobracket(a, Tensor2::cube(4));
  for (const auto& img : zero.images()) EXPECT_TRUE(img.is_zero());
  EXPECT_THROW(coboundary_cobracket(a, Tensor2::cube(3)), DimMismatch);
}

TEST(YbBracket, A4Terms) {
  const MockLieAlgebra a = a4();
  const YbTerms t = yb_bracket_terms(a.constants(), wedge(4, 1, 2));
  EXPECT_EQ(t.r12_r13, simple3(4, 2, 2, 2));
  EXPECT_EQ(t.r13_r23, simple3(4, 2, 2, 2));
  EXPECT_EQ(t.r12_r23, simple3(4, 2, 2, 2, -1));
  EXPECT_EQ(yb_bracket(a, wedge(4, 1, 2)), simple3(4, 2, 2, 2, 3));
  EXPECT_TRUE(yb_bracket(a, wedge(4, 2, 4)).is_zero());
  EXPECT_THROW(yb_bracket(a, Tensor2::cube(2)), DimMismatch);
}

TEST(EDelta, Examples) {
  const std::vector<Tensor3> zero = e_delta(Cobracket::zero(a4().constants()));
  for (const auto& t : zero) EXPECT_TRUE(t.is_zero());
  const Cobracket d(a2().constants(), {simple2(2, 1, 1), Tensor2::cube(2)});
  EXPECT_EQ(e_delta(d)[0], simple3(2, 1, 1, 1, 3));
  EXPECT_TRUE(e_delta(d)[1].is_zero());
}

TEST(QAction, Examples) {
  const MockLieAlgebra a = a4();
  // Q(e1)(e1(x)e1(x)e1) = e2 in each slot
  const Tensor3 q = q_action(a, e(4, 1), simple3(4, 1, 1, 1));
  EXPECT_EQ(q, simple3(4, 2, 1, 1) + simple3(4, 1, 2, 1) + simple3(4, 1, 1, 2));
  EXPECT_TRUE(q_action(a, e(4, 1), simple3(4, 2, 2, 2)).is_zero());
  EXPECT_TRUE(q_action(a, e(4, 2), simple3(4, 1, 3, 1)).is_zero());
}

TEST(CoboundaryConditions, A4Classification) {
  const MockLieAlgebra a = a4();
  const CoboundaryReport r12 = check_coboundary_conditions(a, wedge(4, 1, 2));
  EXPECT_TRUE(r12.cond_i);
  EXPECT_TRUE(r12.cond_ii);
  EXPECT_FALSE(r12.ybe);
  EXPECT_TRUE(r12.skew);
  EXPECT_EQ(r12.classification, Classification::coboundary_only);
  EXPECT_EQ(to_string(r12.classification), "coboundary-only");
  EXPECT_EQ(r12.bracket, simple3(4, 2, 2, 2, 3));

  const CoboundaryReport r24 = check_coboundary_conditions(a, wedge(4, 2, 4));
  EXPECT_TRUE(r24.ybe);
  EXPECT_EQ(r24.classification, Classification::triangular);
  EXPECT_EQ(to_string(r24.classification), "triangular");
}

TEST(CoboundaryConditions, OtherClasses) {
  // e1(x)e1 on A2: Delta(e1) = e2(x)e1 - e1(x)e2 is not symmetric
  const CoboundaryReport bad = check_coboundary_conditions(a2(), simple2(2, 1, 1));
  EXPECT_FALSE(bad.cond_i);
  EXPECT_EQ(bad.classification, Classification::not_coboundary_admissible);
  EXPECT_EQ(to_string(bad.classification), "not-coboundary-admissible");
  EXPECT_FALSE(bad.report.flag("skew"));

  // e2(x)e2 on A2 lies in the annihilator: symmetric, solves the equation
  const CoboundaryReport quasi = check_coboundary_conditions(a2(), simple2(2, 2, 2));
  EXPECT_TRUE(quasi.cond_i);
  EXPECT_TRUE(quasi.ybe);
  EXPECT_FALSE(quasi.skew);
  EXPECT_EQ(quasi.classification, Classification::quasitriangular);
  EXPECT_EQ(to_string(quasi.classification), "quasitriangular");
}

TEST(OperatorForm, Examples) {
  const MockLieAlgebra a = a4();
  EXPECT_TRUE(check_ybe_operator_form(a, wedge(4, 2, 4)).ok());
  const AxiomReport r = check_ybe_operator_form(a, wedge(4, 1, 2));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.checks().front().name, "operator_form");
  EXPECT_THROW(check_ybe_operator_form(a, simple2(4, 1, 2)), NotSkew);
}

TEST(RotaBaxterCorrespondence, A4) {
  const MockLieAlgebra a = a4();
  const RotaBaxterCorrespondence good = rota_baxter_correspondence(a, wedge(4, 2, 4), a4_hyperbolic());
  EXPECT_TRUE(good.ybe);
  EXPECT_TRUE(good.rota_baxter);
  EXPECT_TRUE(good.report.flag("agreement"));
  EXPECT_EQ(good.r_phi, as_matrix(wedge(4, 2, 4)) * a4_hyperbolic().gram().transpose());

  const RotaBaxterCorrespondence bad = rota_baxter_correspondence(a, wedge(4, 1, 2), a4_hyperbolic());
  EXPECT_FALSE(bad.ybe);
  EXPECT_FALSE(bad.rota_baxter);
  EXPECT_TRUE(bad.report.flag("agreement"));

  EXPECT_THROW(rota_baxter_correspondence(a, simple2(4, 1, 2), a4_hyperbolic()), NotSkew);
  EXPECT_THROW(rota_baxter_correspondence(a, wedge(4, 1, 2), BilinearForm(Matrix::identity(4))), FormNotAdmissible);
}

TEST(Lift, ZeroAndBad) {
  const Representation ad = adjoint_rep(a4());
  const Lift zero = lift_o_operator(ad, Matrix(4, 4));
  EXPECT_EQ(zero.algebra.dim(), 8u);
  EXPECT_TRUE(zero.r.is_zero());
  EXPECT_TRUE(zero.bracket.is_zero());

  Matrix t(4, 4);
  t(0, 1) = 1;
  const Lift bad = lift_o_operator(ad, t);
  // r = e1(x)f2 - f2(x)e1
  EXPECT_EQ(bad.r, simple2(8, 1, 6) - simple2(8, 6, 1));
  EXPECT_FALSE(bad.bracket.is_zero());
  EXPECT_THROW(lift_o_operator(ad, Matrix(4, 3)), ShapeError);
}

TEST(Lift, IdentityOnP2) {
  const Lift l = canonical_solution_from_prelie(p2());
  EXPECT_EQ(l.r, simple2(4, 1, 3) + simple2(4, 2, 4) - simple2(4, 3, 1) - simple2(4, 4, 2));
  EXPECT_TRUE(l.bracket.is_zero());
  EXPECT_EQ(l.algebra.labels()[2], "f1");
}

TEST(YbeProperties, CoboundaryIsCompatible) { expect_sweep(sweep_coboundary_compatibility(401, 200, 5), false); }

TEST(YbeProperties, BracketIdentity) { expect_sweep(sweep_bracket_identity(403, 100, 5), false); }

TEST(YbeProperties, CoboundaryConditionsDecideBialgebra) { expect_sweep(sweep_coboundary_conditions(405, 150, 5)); }

TEST(YbeProperties, OperatorFormAgrees) { expect_sweep(sweep_operator_form(407, 100, 5)); }

TEST(YbeProperties, LiftAgreesWithOOperator) { expect_sweep(sweep_lift(409, 100, 3)); }

TEST(YbeProperties, CanonicalSolutions) { expect_sweep(sweep_canonical_solution(411, 50, 5), false); }

TEST(YbeProperties, RotaBaxterAgrees) { expect_sweep(sweep_rota_baxter(413, 100, 4)); }

TEST(YbeProperties, OracleAgreement) { expect_sweep(sweep_oracle_agreement(415, 80, 5), false); }

TEST(YbeProperties, BracketTermsMatchOracleOnA4) {
  const oracle::Bracket b = oracle::yb_bracket(oracle::Table(a4().constants()), wedge(4, 1, 2));
  EXPECT_EQ(b.r12_r13, oracle::flatten3(simple3(4, 2, 2, 2)));
  EXPECT_EQ(b.r13_r23, oracle::flatten3(simple3(4, 2, 2, 2)));
  EXPECT_EQ(b.r12_r23, oracle::flatten3(simple3(4, 2, 2, 2, -1)));
}
