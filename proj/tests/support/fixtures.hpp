#pragma once

#include "mlb/ybe.hpp"

namespace mlb::testing {

inline Vector e(std::size_t n, std::size_t one_based) { return unit_vector(n, one_based - 1); }

/// e1e1 = e2, e1e3 = e4.
inline MockLieAlgebra a4() {
  StructureConstants c(4);
  c(0, 0, 1) = 1;
  c(0, 2, 3) = 1;
  c(2, 0, 3) = 1;
  return MockLieAlgebra::create(std::move(c));
}

/// e1e1 = e2.
inline MockLieAlgebra a2() {
  StructureConstants c(2);
  c(0, 0, 1) = 1;
  return MockLieAlgebra::create(std::move(c));
}

/// e1.e1 = e2.
inline MockPreLieAlgebra p2() {
  StructureConstants c(2);
  c(0, 0, 1) = 1;
  return MockPreLieAlgebra::create(std::move(c));
}

/// e1e1 = e1, raw.
inline StructureConstants idempotent_1() {
  StructureConstants c(1);
  c(0, 0, 0) = 1;
  return c;
}

/// coeff * (e_i (x) e_j - e_j (x) e_i), 1-based.
inline Tensor2 wedge(std::size_t n, std::size_t i, std::size_t j) {
  Tensor2 r = Tensor2::cube(n);
  r(i - 1, j - 1) = 1;
  r(j - 1, i - 1) = -1;
  return r;
}

inline Tensor2 simple2(std::size_t n, std::size_t i, std::size_t j, Rational c = 1) {
  Tensor2 t = Tensor2::cube(n);
  t(i - 1, j - 1) = c;
  return t;
}

inline Tensor3 simple3(std::size_t n, std::size_t i, std::size_t j, std::size_t k, Rational c = 1) {
  Tensor3 t = Tensor3::cube(n);
  t(i - 1, j - 1, k - 1) = c;
  return t;
}

/// omega(e1,e4) = omega(e2,e3) = 1, symmetric.
inline BilinearForm a4_hyperbolic() {
  Matrix g(4, 4);
  g(0, 3) = g(3, 0) = 1;
  g(1, 2) = g(2, 1) = 1;
  return BilinearForm(g);
}

/// omega(e1,e4) = 1, omega(e2,e3) = 2, skew.  Symplectic on A4.
inline BilinearForm a4_symplectic() {
  Matrix g(4, 4);
  g(0, 3) = 1;
  g(3, 0) = -1;
  g(1, 2) = 2;
  g(2, 1) = -2;
  return BilinearForm(g);
}

/// omega(e1,e2) = omega(e3,e4) = 1, skew and nondegenerate but not cyclic on A4.
inline BilinearForm a4_skew_not_cyclic() {
  Matrix g(4, 4);
  g(0, 1) = 1;
  g(1, 0) = -1;
  g(2, 3) = 1;
  g(3, 2) = -1;
  return BilinearForm(g);
}

/// Coboundary bialgebra of r = e1 (x) e2 - e2 (x) e1 on A4.
inline Cobracket a4_cobracket() { return coboundary_cobracket(a4(), wedge(4, 1, 2)); }

}  // namespace mlb::testing
