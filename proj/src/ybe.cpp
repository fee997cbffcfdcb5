#include "mlb/ybe.hpp"

namespace mlb {

namespace {

void require_square(const MockLieAlgebra& a, const Tensor2& r) {
  if (r.dim(0) != a.dim() || r.dim(1) != a.dim()) throw DimMismatch("r must be a dim x dim tensor");
}

Tensor3 zero_cube(std::size_t n) { return Tensor3::cube(n); }

}  // namespace

RMap r_as_map(const Tensor2& r) {
  Matrix m = as_matrix(r);
  const bool nondegenerate = m.is_square() && rank(m) == m.rows();
  return RMap{std::move(m), nondegenerate};
}

Cobracket coboundary_cobracket(const MockLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  std::vector<Tensor2> images;
  images.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix l = a.left_multiplication(i);
    images.push_back(apply_factorwise({FactorMap(l), FactorMap()}, r) -
                     apply_factorwise({FactorMap(), FactorMap(l)}, r));
  }
  return Cobracket(a.constants(), std::move(images));
}

std::vector<Tensor3> e_delta(const Cobracket& d) {
  const std::size_t n = d.dim();
  std::vector<Tensor3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // (id (x) Delta) Delta(e_i)
    Tensor3 t = zero_cube(n);
    const Tensor2& di = d.image(i);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Rational& c = di(a, b);
        if (c.is_zero()) continue;
        const Tensor2& db = d.image(b);
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q)
            if (!db(p, q).is_zero()) t(a, p, q) += c * db(p, q);
      }
    Tensor3 once = cycle_factors(t);
    Tensor3 twice = cycle_factors(once);
    out.push_back(t + once + twice);
  }
  return out;
}

YbTerms yb_bracket_terms(const StructureConstants& c, const Tensor2& r) {
  const std::size_t n = c.dim();
  if (r.dim(0) != n || r.dim(1) != n) throw DimMismatch("r must be a dim x dim tensor");
  YbTerms out{zero_cube(n), zero_cube(n), zero_cube(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& aij = r(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Rational& apq = r(p, q);
          if (apq.is_zero()) continue;
          const Rational w = aij * apq;
          for (std::size_t k = 0; k < n; ++k) {
            if (!c(i, p, k).is_zero()) out.r12_r13(k, j, q) += c(i, p, k) * w;
            if (!c(j, q, k).is_zero()) out.r13_r23(i, p, k) += c(j, q, k) * w;
            if (!c(j, p, k).is_zero()) out.r12_r23(i, k, q) += c(j, p, k) * w;
          }
        }
    }
  return out;
}

Tensor3 yb_bracket(const MockLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  YbTerms t = yb_bracket_terms(a.constants(), r);
  return t.r12_r13 + t.r13_r23 - t.r12_r23;
}

Tensor3 q_action(const MockLieAlgebra& a, std::span<const Rational> x, const Tensor3& t) {
  const Matrix l = a.left_multiplication(x);
  return apply_factorwise({FactorMap(l), FactorMap(), FactorMap()}, t) +
         apply_factorwise({FactorMap(), FactorMap(l), FactorMap()}, t) +
         apply_factorwise({FactorMap(), FactorMap(), FactorMap(l)}, t);
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::triangular:
      return "triangular";
    case Classification::quasitriangular:
      return "quasitriangular";
    case Classification::coboundary_only:
      return "coboundary-only";
    case Classification::not_coboundary_admissible:
      return "not-coboundary-admissible";
  }
  return "unknown";
}

CoboundaryReport check_coboundary_conditions(const MockLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  const std::size_t n = a.dim();
  CoboundaryReport out;

  const Tensor2 sym = r + switch_factors(r);
  std::optional<Witness> w_i;
  for (std::size_t i = 0; i < n && !w_i; ++i) {
    const Matrix l = a.left_multiplication(i);
    Tensor2 t = apply_factorwise({FactorMap(l), FactorMap()}, sym) - apply_factorwise({FactorMap(), FactorMap(l)}, sym);
    if (!t.is_zero()) w_i = Witness::of_tensor({i}, t);
  }

  out.bracket = yb_bracket(a, r);
  std::optional<Witness> w_ii;
  for (std::size_t i = 0; i < n && !w_ii; ++i) {
    Tensor3 t = q_action(a, unit_vector(n, i), out.bracket);
    if (!t.is_zero()) w_ii = Witness::of_tensor({i}, t);
  }

  out.cond_i = !w_i;
  out.cond_ii = !w_ii;
  out.ybe = out.bracket.is_zero();
  out.skew = switch_factors(r) == -r;

  out.report.add(Check{"cond_i", out.cond_i, w_i});
  out.report.add(Check{"cond_ii", out.cond_ii, w_ii});
  out.report.add(Check{"ybe", out.ybe, out.ybe ? std::nullopt : std::optional(Witness::of_tensor({}, out.bracket))});
  out.report.add(Check{"skew", out.skew, out.skew ? std::nullopt : std::optional(Witness::of_tensor({}, sym))});

  if (!(out.cond_i && out.cond_ii)) out.classification = Classification::not_coboundary_admissible;
  else if (out.ybe && out.skew) out.classification = Classification::triangular;
  else if (out.ybe) out.classification = Classification::quasitriangular;
  else out.classification = Classification::coboundary_only;
  return out;
}

AxiomReport check_ybe_operator_form(const MockLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  if (!(switch_factors(r) == -r)) throw NotSkew("r is not skew-symmetric");
  const std::size_t n = a.dim();
  const Matrix m = as_matrix(r);
  std::vector<Vector> images;
  std::vector<Matrix> coadjoint;
  for (std::size_t j = 0; j < n; ++j) {
    images.push_back(m.column(j));
    coadjoint.push_back(a.left_multiplication(images.back()).transpose());
  }
  AxiomReport report;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t q = 0; q < n; ++q) {
      const Vector lhs = a.multiply(images[j], images[q]);
      const Vector rhs = m.apply(add(coadjoint[j].column(q), coadjoint[q].column(j)));
      Vector residual = subtract(lhs, rhs);
      if (!is_zero(residual)) {
        report.fail("operator_form", Witness::of_vector({j, q}, residual));
        return report;
      }
    }
  report.pass("operator_form");
  return report;
}

RotaBaxterCorrespondence rota_baxter_correspondence(const MockLieAlgebra& a, const Tensor2& r,
                                                    const BilinearForm& w) {
  require_square(a, r);
  if (!(switch_factors(r) == -r)) throw NotSkew("r is not skew-symmetric");
  const Matrix phi = equivalence_from_form(a, w);

  RotaBaxterCorrespondence out;
  const Tensor3 bracket = yb_bracket(a, r);
  out.ybe = bracket.is_zero();
  out.r_phi = as_matrix(r) * phi;
  const OOperatorCheck check = check_o_operator(adjoint_rep(a), out.r_phi);
  out.rota_baxter = check.rota_baxter();

  out.report.add(Check{"ybe", out.ybe, out.ybe ? std::nullopt : std::optional(Witness::of_tensor({}, bracket))});
  out.report.add(Check{"rota_baxter", out.rota_baxter, check.report.first_violation()});
  out.report.add(Check{"agreement", out.ybe == out.rota_baxter, std::nullopt});
  return out;
}

Lift lift_o_operator(const Representation& rep, const Matrix& t) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t m = rep.module_dim();
  if (t.rows() != n || t.cols() != m)
    throw ShapeError("O-operator must be " + std::to_string(n) + "x" + std::to_string(m));
  MockLieAlgebra hat = semidirect_product(dual_representation(rep), "f");
  Tensor2 r = Tensor2::cube(n + m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < m; ++i) {
      r(k, n + i) = t(k, i);
      r(n + i, k) = -t(k, i);
    }
  Tensor3 bracket = yb_bracket(hat, r);
  return Lift{std::move(hat), std::move(r), std::move(bracket)};
}

Lift canonical_solution_from_prelie(const MockPreLieAlgebra& p) {
  const SubAdjacent s = sub_adjacent(p);
  return lift_o_operator(s.theta, Matrix::identity(p.dim()));
}

}  // namespace mlb
