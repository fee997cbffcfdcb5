#include "mlb/representation.hpp"

#include <stdexcept>

namespace mlb {

namespace {

std::size_t check_action_shape(const StructureConstants& a, std::span<const Matrix> action) {
  if (action.size() != a.dim())
    throw ShapeError("representation needs one matrix per basis element (" + std::to_string(a.dim()) +
                     "), got " + std::to_string(action.size()));
  const std::size_t m = action.empty() ? 0 : action.front().rows();
  for (const auto& mat : action)
    if (mat.rows() != m || mat.cols() != m) throw ShapeError("representation matrices must be square and uniform");
  return m;
}

Matrix combine(std::span<const Matrix> action, std::span<const Rational> x, std::size_t m) {
  Matrix out(m, m);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * action[i];
  return out;
}

Rational form_on_basis(const Matrix& gram, std::span<const Rational> x, std::size_t k) {
  // w(x, e_k)
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += x[i] * gram(i, k);
  return s;
}

Check nondegenerate_check(const Matrix& gram) {
  auto kernel = nullspace(gram.transpose());
  if (kernel.empty()) return Check{"nondegenerate", true, std::nullopt};
  return Check{"nondegenerate", false, Witness::of_vector({}, kernel.front())};
}

}  // namespace

AxiomReport validate_representation(const MockLieAlgebra& a, std::span<const Matrix> action) {
  return validate_representation(a.constants(), action);
}

AxiomReport validate_representation(const StructureConstants& a, std::span<const Matrix> action) {
  const std::size_t m = check_action_shape(a, action);
  const std::size_t n = a.dim();
  AxiomReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix residual = combine(action, a.product(i, j), m);
      residual += action[i] * action[j];
      residual += action[j] * action[i];
      if (!residual.is_zero()) {
        report.fail("representation", Witness::of_matrix({i, j}, residual));
        return report;
      }
    }
  report.pass("representation");
  return report;
}

Representation Representation::create(MockLieAlgebra algebra, std::vector<Matrix> action) {
  const AxiomReport report = validate_representation(algebra, action);
  if (!report.ok()) throw NotRepresentation("not a representation: " + report.describe_failure());
  const std::size_t m = action.empty() ? 0 : action.front().rows();
  return Representation(std::move(algebra), m, std::move(action));
}

Matrix Representation::act(std::span<const Rational> x) const {
  if (x.size() != algebra_.dim()) throw DimMismatch("element length differs from algebra dimension");
  return combine(action_, x, module_dim_);
}

bool Representation::is_adjoint() const {
  if (module_dim_ != algebra_.dim()) return false;
  for (std::size_t i = 0; i < action_.size(); ++i)
    if (action_[i] != algebra_.left_multiplication(i)) return false;
  return true;
}

Representation adjoint_rep(const MockLieAlgebra& a) {
  std::vector<Matrix> action;
  action.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) action.push_back(a.left_multiplication(i));
  return Representation::create(a, std::move(action));
}

Representation zero_representation(const MockLieAlgebra& a, std::size_t module_dim) {
  return Representation::create(a, std::vector<Matrix>(a.dim(), Matrix(module_dim, module_dim)));
}

Representation dual_representation(const Representation& r) {
  std::vector<Matrix> action;
  action.reserve(r.action().size());
  for (const auto& m : r.action()) action.push_back(m.transpose());
  return Representation::create(r.algebra(), std::move(action));
}

MockLieAlgebra semidirect_product(const Representation& r, const std::string& module_prefix) {
  const MockLieAlgebra& a = r.algebra();
  const std::size_t n = a.dim();
  const std::size_t m = r.module_dim();
  StructureConstants c(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = a.constants()(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        const Rational& coeff = r.action(i)(v, u);
        if (coeff.is_zero()) continue;
        c(i, n + u, n + v) = coeff;
        c(n + u, i, n + v) = coeff;
      }
  auto labels = a.labels();
  for (const auto& l : default_labels(m, module_prefix)) labels.push_back(l);
  return MockLieAlgebra::create(std::move(c), std::move(labels));
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw ShapeError("gram matrix must be square");
}

Rational BilinearForm::operator()(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimMismatch("operand length differs from form dimension");
  const Vector gy = gram_.apply(y);
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += x[i] * gy[i];
  return s;
}

AxiomReport check_invariant_form(const MockLieAlgebra& a, const BilinearForm& w) {
  return check_invariant_form(a.constants(), w);
}

AxiomReport check_invariant_form(const StructureConstants& a, const BilinearForm& w) {
  if (w.dim() != a.dim()) throw ShapeError("gram size differs from algebra dimension");
  const std::size_t n = a.dim();
  const Matrix& g = w.gram();
  AxiomReport report;

  std::optional<Witness> inv;
  for (std::size_t i = 0; i < n && !inv; ++i)
    for (std::size_t j = 0; j < n && !inv; ++j)
      for (std::size_t k = 0; k < n && !inv; ++k) {
        const Rational lhs = form_on_basis(g, a.product(i, j), k);
        const Rational rhs = w(unit_vector(n, i), a.product(j, k));
        if (lhs != rhs) inv = Witness::of_vector({i, j, k}, Vector{lhs - rhs});
      }
  report.add(Check{"invariant", !inv, inv});

  std::optional<Witness> sym;
  for (std::size_t i = 0; i < n && !sym; ++i)
    for (std::size_t j = i + 1; j < n && !sym; ++j)
      if (g(i, j) != g(j, i)) sym = Witness::of_vector({i, j}, Vector{g(i, j) - g(j, i)});
  report.add(Check{"symmetric", !sym, sym});
  report.add(nondegenerate_check(g));
  return report;
}

Matrix equivalence_from_form(const MockLieAlgebra& a, const BilinearForm& w) {
  const AxiomReport report = check_invariant_form(a, w);
  if (!report.ok()) throw FormNotAdmissible("form is not admissible: " + report.describe_failure());
  // <phi(e_i), e_j> = w(e_i, e_j), so column i of phi is row i of the gram.
  Matrix phi = w.gram().transpose();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix l = a.left_multiplication(i);
    if (l.transpose() * phi != phi * l) throw std::logic_error("form does not intertwine adjoint and coadjoint");
  }
  return phi;
}

AxiomReport check_symplectic_form(const MockLieAlgebra& a, const BilinearForm& w) {
  if (w.dim() != a.dim()) throw ShapeError("gram size differs from algebra dimension");
  const std::size_t n = a.dim();
  const Matrix& g = w.gram();
  AxiomReport report;

  std::optional<Witness> skew;
  for (std::size_t i = 0; i < n && !skew; ++i)
    for (std::size_t j = i; j < n && !skew; ++j)
      if (g(i, j) != -g(j, i)) skew = Witness::of_vector({i, j}, Vector{g(i, j) + g(j, i)});
  report.add(Check{"skew", !skew, skew});
  report.add(nondegenerate_check(g));

  std::optional<Witness> cyc;
  for (std::size_t i = 0; i < n && !cyc; ++i)
    for (std::size_t j = 0; j < n && !cyc; ++j)
      for (std::size_t k = 0; k < n && !cyc; ++k) {
        const Rational s = form_on_basis(g, a.product(i, j), k) + form_on_basis(g, a.product(j, k), i) +
                           form_on_basis(g, a.product(k, i), j);
        if (!s.is_zero()) cyc = Witness::of_vector({i, j, k}, Vector{s});
      }
  report.add(Check{"cyclic", !cyc, cyc});
  return report;
}

}  // namespace mlb
