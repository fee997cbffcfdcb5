#include "mlb/algebra.hpp"

#include <random>

namespace mlb {

StructureConstants::StructureConstants(Tensor3 table) : table_(std::move(table)) {
  const auto& d = table_.dims();
  if (d[0] != d[1] || d[1] != d[2]) throw ShapeError("structure constants must form a dim^3 array");
}

StructureConstants StructureConstants::from_flat(std::size_t dim, std::vector<Rational> values) {
  if (values.size() != dim * dim * dim)
    throw ShapeError("expected " + std::to_string(dim * dim * dim) + " structure constants, got " +
                     std::to_string(values.size()));
  return StructureConstants(Tensor3({dim, dim, dim}, std::move(values)));
}

Vector StructureConstants::multiply(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimMismatch("operand length differs from algebra dimension");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = table_(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

Vector StructureConstants::product(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = table_(i, j, k);
  return out;
}

Matrix StructureConstants::left_multiplication(std::span<const Rational> x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimMismatch("operand length differs from algebra dimension");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = table_(i, j, k);
        if (!c.is_zero()) m(k, j) += x[i] * c;
      }
  }
  return m;
}

Matrix StructureConstants::left_multiplication(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = table_(i, j, k);
  return m;
}

AxiomReport validate_mock_lie(const StructureConstants& c) {
  const std::size_t n = c.dim();
  AxiomReport report;

  std::optional<Witness> asym;
  for (std::size_t i = 0; i < n && !asym; ++i)
    for (std::size_t j = i + 1; j < n && !asym; ++j) {
      Vector diff = subtract(c.product(i, j), c.product(j, i));
      if (!is_zero(diff)) asym = Witness::of_vector({i, j}, diff);
    }
  report.add(Check{"commutative", !asym, asym});

  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) left.push_back(c.left_multiplication(i));

  std::optional<Witness> jac;
  for (std::size_t i = 0; i < n && !jac; ++i)
    for (std::size_t j = 0; j < n && !jac; ++j)
      for (std::size_t k = 0; k < n && !jac; ++k) {
        Vector sum = left[i].apply(c.product(j, k));
        sum = add(sum, left[j].apply(c.product(k, i)));
        sum = add(sum, left[k].apply(c.product(i, j)));
        if (!is_zero(sum)) jac = Witness::of_vector({i, j, k}, sum);
      }
  report.add(Check{"jacobi", !jac, jac});
  return report;
}

AxiomReport check_anti_associative(const StructureConstants& star) {
  const std::size_t n = star.dim();
  AxiomReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = star.multiply(star.product(i, j), unit_vector(n, k));
        const Vector rhs = star.multiply(unit_vector(n, i), star.product(j, k));
        Vector sum = add(lhs, rhs);
        if (!is_zero(sum)) {
          report.fail("anti_associative", Witness::of_vector({i, j, k}, sum));
          return report;
        }
      }
  report.pass("anti_associative");
  return report;
}

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

MockLieAlgebra MockLieAlgebra::create(StructureConstants constants, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(constants.dim());
  if (labels.size() != constants.dim()) throw ShapeError("basis label count differs from dimension");
  const AxiomReport report = validate_mock_lie(constants);
  if (!report.ok()) throw NotMockLie("not a mock-Lie algebra: " + report.describe_failure());
  return MockLieAlgebra(std::move(constants), std::move(labels));
}

MockLieAlgebra MockLieAlgebra::abelian(std::size_t dim) {
  return MockLieAlgebra(StructureConstants(dim), default_labels(dim));
}

MockLieAlgebra from_anti_associative(const StructureConstants& star) {
  const AxiomReport report = check_anti_associative(star);
  if (!report.ok()) throw NotAntiAssociative("product is not anti-associative: " + report.describe_failure());
  const std::size_t n = star.dim();
  StructureConstants sym(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sym(i, j, k) = star(i, j, k) + star(j, i, k);
  return MockLieAlgebra::create(std::move(sym));
}

MockLieAlgebra random_central_extension(std::size_t dim_v, std::size_t dim_w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(-3, 3);
  std::uniform_int_distribution<long> denominator(1, 3);
  std::bernoulli_distribution keep(0.6);

  const std::size_t n = dim_v + dim_w;
  StructureConstants c(n);
  bool any = false;
  for (std::size_t i = 0; i < dim_v; ++i)
    for (std::size_t j = i; j < dim_v; ++j)
      for (std::size_t k = dim_v; k < n; ++k) {
        if (!keep(rng)) continue;
        long num = numerator(rng);
        if (num == 0) continue;
        const Rational value(num, denominator(rng));
        c(i, j, k) = value;
        c(j, i, k) = value;
        any = true;
      }
  if (!any && dim_v > 0 && dim_w > 0) {
    std::uniform_int_distribution<std::size_t> pick_v(0, dim_v - 1);
    std::uniform_int_distribution<std::size_t> pick_w(dim_v, n - 1);
    const std::size_t i = pick_v(rng);
    const std::size_t j = pick_v(rng);
    const std::size_t k = pick_w(rng);
    c(i, j, k) = 1;
    c(j, i, k) = 1;
  }
  return MockLieAlgebra::create(std::move(c));
}

}  // namespace mlb
