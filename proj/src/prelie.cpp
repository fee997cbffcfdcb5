#include "mlb/prelie.hpp"

#include <stdexcept>

namespace mlb {

namespace {

// Product with matrix M_i as its left multiplication: d(i,j,k) = M_i(k,j).
StructureConstants from_left_multiplications(const std::vector<Matrix>& left) {
  const std::size_t n = left.size();
  StructureConstants d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d(i, j, k) = left[i](k, j);
  return d;
}

bool symmetrizes_to(const StructureConstants& d, const StructureConstants& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d(i, j, k) + d(j, i, k) != c(i, j, k)) return false;
  return true;
}

}  // namespace

AxiomReport validate_mock_pre_lie(const StructureConstants& d) {
  const std::size_t n = d.dim();
  auto aass = [&](std::size_t i, std::size_t j, std::size_t k) {
    return add(d.multiply(d.product(i, j), unit_vector(n, k)), d.multiply(unit_vector(n, i), d.product(j, k)));
  };
  AxiomReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector sum = add(aass(i, j, k), aass(j, i, k));
        if (!is_zero(sum)) {
          report.fail("mock_pre_lie", Witness::of_vector({i, j, k}, sum));
          return report;
        }
      }
  report.pass("mock_pre_lie");
  return report;
}

MockPreLieAlgebra MockPreLieAlgebra::create(StructureConstants constants, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(constants.dim());
  if (labels.size() != constants.dim()) throw ShapeError("basis label count differs from dimension");
  const AxiomReport report = validate_mock_pre_lie(constants);
  if (!report.ok()) throw NotMockPreLie("not a mock-pre-Lie algebra: " + report.describe_failure());
  return MockPreLieAlgebra(std::move(constants), std::move(labels));
}

SubAdjacent sub_adjacent(const MockPreLieAlgebra& p) {
  const std::size_t n = p.dim();
  const StructureConstants& d = p.constants();
  StructureConstants sym(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sym(i, j, k) = d(i, j, k) + d(j, i, k);
  MockLieAlgebra algebra = MockLieAlgebra::create(std::move(sym), p.labels());
  std::vector<Matrix> theta;
  theta.reserve(n);
  for (std::size_t i = 0; i < n; ++i) theta.push_back(p.left_multiplication(i));
  Representation rep = Representation::create(algebra, std::move(theta));
  return SubAdjacent{std::move(algebra), std::move(rep)};
}

OOperatorCheck check_o_operator(const Representation& rep, const Matrix& t) {
  const MockLieAlgebra& a = rep.algebra();
  const std::size_t m = rep.module_dim();
  if (t.rows() != a.dim() || t.cols() != m)
    throw ShapeError("O-operator must be " + std::to_string(a.dim()) + "x" + std::to_string(m));

  std::vector<Vector> images;
  std::vector<Matrix> acts;
  for (std::size_t u = 0; u < m; ++u) {
    images.push_back(t.column(u));
    acts.push_back(rep.act(images.back()));
  }

  OOperatorCheck out;
  out.adjoint = rep.is_adjoint();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      const Vector lhs = a.multiply(images[u], images[v]);
      const Vector rhs = t.apply(add(acts[u].column(v), acts[v].column(u)));
      Vector residual = subtract(lhs, rhs);
      if (!is_zero(residual)) {
        out.report.fail("o_operator", Witness::of_vector({u, v}, residual));
        return out;
      }
    }
  out.report.pass("o_operator");
  return out;
}

OOperator OOperator::create(Representation rep, Matrix map) {
  const OOperatorCheck check = check_o_operator(rep, map);
  if (!check.ok()) throw NotOOperator("not an O-operator: " + check.report.describe_failure());
  return OOperator(std::move(rep), std::move(map));
}

MockPreLieAlgebra prelie_from_o_operator(const OOperator& op) {
  const std::size_t m = op.rep().module_dim();
  std::vector<Matrix> left;
  left.reserve(m);
  for (std::size_t u = 0; u < m; ++u) left.push_back(op.rep().act(op.map().column(u)));
  return MockPreLieAlgebra::create(from_left_multiplications(left));
}

MockPreLieAlgebra compatible_prelie_from_invertible_o(const OOperator& op) {
  const Matrix& t = op.map();
  const Matrix t_inv = invert_matrix(t);
  const MockLieAlgebra& a = op.rep().algebra();
  std::vector<Matrix> left;
  left.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) left.push_back(t * op.rep().action(i) * t_inv);
  MockPreLieAlgebra p = MockPreLieAlgebra::create(from_left_multiplications(left), a.labels());
  if (!symmetrizes_to(p.constants(), a.constants()))
    throw std::logic_error("induced pre-Lie product is not compatible with the algebra");
  return p;
}

MockPreLieAlgebra prelie_from_symplectic(const MockLieAlgebra& a, const BilinearForm& w) {
  const AxiomReport report = check_symplectic_form(a, w);
  if (!report.ok()) throw NotSymplectic("form is not symplectic: " + report.describe_failure());
  const std::size_t n = a.dim();
  const Matrix t = w.gram().transpose();
  const Matrix t_inv = invert_matrix(t);
  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) left.push_back(t_inv * a.left_multiplication(i).transpose() * t);
  MockPreLieAlgebra p = MockPreLieAlgebra::create(from_left_multiplications(left), a.labels());

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (w(p.product(i, j), unit_vector(n, k)) != w(unit_vector(n, j), a.product(i, k)))
          throw std::logic_error("induced pre-Lie product is not adjoint to the form");
  if (!symmetrizes_to(p.constants(), a.constants()))
    throw std::logic_error("induced pre-Lie product is not compatible with the algebra");
  return p;
}

}  // namespace mlb
