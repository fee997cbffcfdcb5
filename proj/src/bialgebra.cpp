#include "mlb/bialgebra.hpp"

#include <algorithm>

#include "mlb/ybe.hpp"

namespace mlb {

namespace {

Matrix combine(std::span<const Matrix> maps, std::span<const Rational> x, std::size_t m) {
  Matrix out(m, m);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * maps[i];
  return out;
}

// (L (x) id + id (x) L) t
Tensor2 act_both(const Matrix& l, const Tensor2& t) {
  return apply_factorwise({FactorMap(l), FactorMap()}, t) + apply_factorwise({FactorMap(), FactorMap(l)}, t);
}

void check_square_family(std::span<const Matrix> maps, std::size_t count, std::size_t size, const char* what) {
  if (maps.size() != count)
    throw ShapeError(std::string(what) + " needs " + std::to_string(count) + " matrices, got " +
                     std::to_string(maps.size()));
  for (const auto& m : maps)
    if (m.rows() != size || m.cols() != size)
      throw ShapeError(std::string(what) + " matrices must be " + std::to_string(size) + "x" + std::to_string(size));
}

Check closure_check(const StructureConstants& c, const std::vector<std::size_t>& part, std::vector<bool> inside,
                    const std::string& name) {
  for (std::size_t i : part)
    for (std::size_t j : part) {
      Vector outside = c.product(i, j);
      bool leaks = false;
      for (std::size_t k = 0; k < outside.size(); ++k) {
        if (inside[k]) outside[k] = Rational();
        else if (!outside[k].is_zero()) leaks = true;
      }
      if (leaks) return Check{name, false, Witness::of_vector({i, j}, outside)};
    }
  return Check{name, true, std::nullopt};
}

Check isotropy_check(const Matrix& gram, const std::vector<std::size_t>& part, const std::string& name) {
  for (std::size_t i : part)
    for (std::size_t j : part)
      if (!gram(i, j).is_zero()) return Check{name, false, Witness::of_vector({i, j}, Vector{gram(i, j)})};
  return Check{name, true, std::nullopt};
}

std::vector<std::string> labels_or_default(const std::vector<std::string>& labels, std::size_t n,
                                           const std::string& prefix) {
  return labels.empty() ? default_labels(n, prefix) : labels;
}

}  // namespace

Cobracket::Cobracket(StructureConstants algebra, std::vector<Tensor2> images)
    : algebra_(std::move(algebra)), images_(std::move(images)) {
  const std::size_t n = algebra_.dim();
  if (images_.size() != n)
    throw ShapeError("cobracket needs one image per basis element (" + std::to_string(n) + "), got " +
                     std::to_string(images_.size()));
  for (const auto& t : images_)
    if (t.dim(0) != n || t.dim(1) != n) throw ShapeError("cobracket images must be dim x dim tensors");
}

Cobracket Cobracket::zero(const StructureConstants& algebra) {
  const std::size_t n = algebra.dim();
  return Cobracket(algebra, std::vector<Tensor2>(n, Tensor2::cube(n)));
}

Tensor2 Cobracket::apply(std::span<const Rational> x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimMismatch("element length differs from algebra dimension");
  Tensor2 out = Tensor2::cube(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!x[i].is_zero()) out += x[i] * images_[i];
  return out;
}

StructureConstants dual_product_from_cobracket(const Cobracket& d) {
  const std::size_t n = d.dim();
  StructureConstants out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(j, k, i) = d.image(i)(j, k);
  return out;
}

AxiomReport check_cocycle_compatibility(const Cobracket& d) {
  const std::size_t n = d.dim();
  const StructureConstants& c = d.algebra();
  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) left.push_back(c.left_multiplication(i));

  AxiomReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Tensor2 residual = d.apply(c.product(i, j));
      residual += act_both(left[i], d.image(j));
      residual += act_both(left[j], d.image(i));
      if (!residual.is_zero()) {
        report.fail("compatible", Witness::of_tensor({i, j}, residual));
        return report;
      }
    }
  report.pass("compatible");
  return report;
}

AxiomReport validate_bialgebra(const Cobracket& d) {
  AxiomReport report;
  std::optional<Witness> asym;
  for (std::size_t i = 0; i < d.dim() && !asym; ++i) {
    Tensor2 diff = d.image(i) - switch_factors(d.image(i));
    if (!diff.is_zero()) asym = Witness::of_tensor({i}, diff);
  }
  report.add(Check{"symmetric", !asym, asym});

  const AxiomReport dual = validate_mock_lie(dual_product_from_cobracket(d));
  Check jacobi = *dual.find("jacobi");
  jacobi.name = "dual_jacobi";
  report.add(std::move(jacobi));

  report.merge(check_cocycle_compatibility(d));
  return report;
}

Cobracket dual_cobracket(const Cobracket& d) {
  const std::size_t n = d.dim();
  const StructureConstants& c = d.algebra();
  std::vector<Tensor2> images(n, Tensor2::cube(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i) images[i](a, b) = c(a, b, i);
  return Cobracket(dual_product_from_cobracket(d), std::move(images));
}

MatchedPairData make_matched_pair(const Representation& rho, const Representation& mu) {
  const MockLieAlgebra& a = rho.algebra();
  const MockLieAlgebra& h = mu.algebra();
  if (rho.module_dim() != h.dim()) throw DimMismatch("rho must act on the space of H");
  if (mu.module_dim() != a.dim()) throw DimMismatch("mu must act on the space of A");
  return MatchedPairData{a.constants(), h.constants(), rho.action(), mu.action(), a.labels(), h.labels()};
}

MatchedPairData standard_matched_pair(const Cobracket& d) {
  const std::size_t n = d.dim();
  MatchedPairData m;
  m.a = d.algebra();
  m.h = dual_product_from_cobracket(d);
  for (std::size_t i = 0; i < n; ++i) {
    m.rho.push_back(m.a.left_multiplication(i).transpose());
    m.mu.push_back(m.h.left_multiplication(i).transpose());
  }
  m.a_labels = default_labels(n, "e");
  m.h_labels = default_labels(n, "f");
  return m;
}

AxiomReport check_matched_pair(const MatchedPairData& m) {
  const std::size_t n = m.a.dim();
  const std::size_t h = m.h.dim();
  check_square_family(m.rho, n, h, "rho");
  check_square_family(m.mu, h, n, "mu");

  AxiomReport report;
  report.merge(validate_mock_lie(m.a), "a");
  report.merge(validate_mock_lie(m.h), "h");
  report.merge(validate_representation(m.a, m.rho), "rho");
  report.merge(validate_representation(m.h, m.mu), "mu");

  std::optional<Witness> rho_fail;
  for (std::size_t i = 0; i < n && !rho_fail; ++i)
    for (std::size_t p = 0; p < h && !rho_fail; ++p)
      for (std::size_t q = 0; q < h && !rho_fail; ++q) {
        const Matrix& rx = m.rho[i];
        Vector sum = rx.apply(m.h.product(p, q));
        sum = add(sum, m.h.multiply(rx.column(p), unit_vector(h, q)));
        sum = add(sum, m.h.multiply(unit_vector(h, p), rx.column(q)));
        sum = add(sum, combine(m.rho, m.mu[p].column(i), h).column(q));
        sum = add(sum, combine(m.rho, m.mu[q].column(i), h).column(p));
        if (!is_zero(sum)) rho_fail = Witness::of_vector({i, p, q}, sum);
      }
  report.add(Check{"rho_compatibility", !rho_fail, rho_fail});

  std::optional<Witness> mu_fail;
  for (std::size_t p = 0; p < h && !mu_fail; ++p)
    for (std::size_t i = 0; i < n && !mu_fail; ++i)
      for (std::size_t j = 0; j < n && !mu_fail; ++j) {
        const Matrix& ma = m.mu[p];
        Vector sum = ma.apply(m.a.product(i, j));
        sum = add(sum, m.a.multiply(ma.column(i), unit_vector(n, j)));
        sum = add(sum, m.a.multiply(unit_vector(n, i), ma.column(j)));
        sum = add(sum, combine(m.mu, m.rho[i].column(p), n).column(j));
        sum = add(sum, combine(m.mu, m.rho[j].column(p), n).column(i));
        if (!is_zero(sum)) mu_fail = Witness::of_vector({p, i, j}, sum);
      }
  report.add(Check{"mu_compatibility", !mu_fail, mu_fail});
  return report;
}

StructureConstants bicrossed_constants(const MatchedPairData& m) {
  const std::size_t n = m.a.dim();
  const std::size_t h = m.h.dim();
  check_square_family(m.rho, n, h, "rho");
  check_square_family(m.mu, h, n, "mu");
  StructureConstants c(n + h);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = m.a(i, j, k);
  for (std::size_t p = 0; p < h; ++p)
    for (std::size_t q = 0; q < h; ++q)
      for (std::size_t s = 0; s < h; ++s) c(n + p, n + q, n + s) = m.h(p, q, s);
  // e_i h_q = mu(h_q)e_i + rho(e_i)h_q
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < h; ++q) {
      for (std::size_t k = 0; k < n; ++k) {
        c(i, n + q, k) = m.mu[q](k, i);
        c(n + q, i, k) = m.mu[q](k, i);
      }
      for (std::size_t s = 0; s < h; ++s) {
        c(i, n + q, n + s) = m.rho[i](s, q);
        c(n + q, i, n + s) = m.rho[i](s, q);
      }
    }
  return c;
}

MockLieAlgebra bicrossed_product(const MatchedPairData& m) {
  const AxiomReport report = check_matched_pair(m);
  if (!report.ok()) throw NotMatchedPair("not a matched pair: " + report.describe_failure());
  auto labels = labels_or_default(m.a_labels, m.a.dim(), "e");
  for (const auto& l : labels_or_default(m.h_labels, m.h.dim(), "f")) labels.push_back(l);
  return MockLieAlgebra::create(bicrossed_constants(m), std::move(labels));
}

Matrix pairing_form(std::size_t n) {
  Matrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = 1;
    g(n + i, i) = 1;
  }
  return g;
}

ManinReport check_manin_triple(const ManinTripleData& m) {
  const std::size_t total = m.total.dim();
  if (m.form.dim() != total) throw ShapeError("form size differs from total dimension");
  std::vector<bool> in_plus(total, false);
  std::vector<bool> in_minus(total, false);
  for (std::size_t i : m.plus) {
    if (i >= total || in_plus[i]) throw ShapeError("plus indices must be distinct basis indices");
    in_plus[i] = true;
  }
  for (std::size_t i : m.minus) {
    if (i >= total || in_minus[i] || in_plus[i]) throw ShapeError("minus indices must be distinct and disjoint from plus");
    in_minus[i] = true;
  }
  if (m.plus.size() + m.minus.size() != total) throw ShapeError("plus and minus must cover the basis");

  ManinReport out;
  out.report.merge(validate_mock_lie(m.total), "total");
  out.report.add(closure_check(m.total, m.plus, in_plus, "plus_subalgebra"));
  out.report.add(closure_check(m.total, m.minus, in_minus, "minus_subalgebra"));
  out.report.add(isotropy_check(m.form.gram(), m.plus, "plus_isotropic"));
  out.report.add(isotropy_check(m.form.gram(), m.minus, "minus_isotropic"));
  out.report.merge(check_invariant_form(m.total, m.form));

  const std::size_t n = total / 2;
  bool standard = total % 2 == 0 && m.plus.size() == n && m.form.gram() == pairing_form(n);
  for (std::size_t i = 0; standard && i < n; ++i) standard = m.plus[i] == i && m.minus[i] == n + i;
  out.standard = standard;
  return out;
}

ManinTripleData standard_manin_triple(const Cobracket& d) {
  const std::size_t n = d.dim();
  ManinTripleData m;
  m.total = bicrossed_constants(standard_matched_pair(d));
  for (std::size_t i = 0; i < n; ++i) {
    m.plus.push_back(i);
    m.minus.push_back(n + i);
  }
  m.form = BilinearForm(pairing_form(n));
  return m;
}

DoubleConstruction double_construction(const MockLieAlgebra& a, const Cobracket& d) {
  if (!(d.algebra() == a.constants())) throw DimMismatch("cobracket belongs to a different algebra");
  const AxiomReport report = validate_bialgebra(d);
  if (!report.ok()) throw NotBialgebra("not a mock-Lie bialgebra: " + report.describe_failure());

  const std::size_t n = a.dim();
  MatchedPairData pair = standard_matched_pair(d);
  pair.a_labels = a.labels();
  MockLieAlgebra total = bicrossed_product(pair);

  Tensor2 r = Tensor2::cube(2 * n);
  for (std::size_t i = 0; i < n; ++i) r(i, n + i) = 1;
  Cobracket delta = coboundary_cobracket(total, r);

  const Cobracket gamma = dual_cobracket(d);
  AxiomReport homs;
  std::optional<Witness> i1;
  std::optional<Witness> i2;
  for (std::size_t i = 0; i < n; ++i) {
    Tensor2 expect_a = Tensor2::cube(2 * n);
    Tensor2 expect_f = Tensor2::cube(2 * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        expect_a(p, q) = -d.image(i)(p, q);
        expect_f(n + p, n + q) = gamma.image(i)(p, q);
      }
    if (!i1) {
      Tensor2 diff = delta.image(i) - expect_a;
      if (!diff.is_zero()) i1 = Witness::of_tensor({i}, diff);
    }
    if (!i2) {
      Tensor2 diff = delta.image(n + i) - expect_f;
      if (!diff.is_zero()) i2 = Witness::of_tensor({i}, diff);
    }
  }
  homs.add(Check{"i1_homomorphism", !i1, i1});
  homs.add(Check{"i2_homomorphism", !i2, i2});
  return DoubleConstruction{std::move(total), std::move(r), std::move(delta), std::move(homs)};
}

}  // namespace mlb
