#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlb/linalg.hpp"

namespace mlb {

/// First counterexample of a failed identity.  `indices` are 0-based basis
/// indices of the violating tuple; `residual` is the nonzero difference of
/// the two sides, stored densely with shape `residual_shape`.
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<std::size_t> residual_shape;
  std::vector<Rational> residual;

  static Witness of_vector(std::vector<std::size_t> indices, const Vector& residual);
  static Witness of_matrix(std::vector<std::size_t> indices, const Matrix& residual);
  template <std::size_t Arity>
  static Witness of_tensor(std::vector<std::size_t> indices, const Tensor<Arity>& residual) {
    return Witness{std::move(indices), std::vector<std::size_t>(residual.dims().begin(), residual.dims().end()),
                   std::vector<Rational>(residual.coeffs().begin(), residual.coeffs().end())};
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Check {
  std::string name;
  bool holds = true;
  std::optional<Witness> witness;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Ordered list of named checks.  Only the first violation of each check is
/// recorded.
class AxiomReport {
public:
  AxiomReport() = default;
  explicit AxiomReport(std::vector<Check> checks) : checks_(std::move(checks)) {}

  void add(Check check) { checks_.push_back(std::move(check)); }
  void pass(std::string name) { checks_.push_back(Check{std::move(name), true, std::nullopt}); }
  void fail(std::string name, Witness witness) {
    checks_.push_back(Check{std::move(name), false, std::move(witness)});
  }
  /// Appends every check of `other`, prefixing names with `prefix` when given.
  void merge(const AxiomReport& other, std::string_view prefix = {});

  bool ok() const;
  /// Value of a named check; throws std::out_of_range if absent.
  bool flag(std::string_view name) const;
  const Check* find(std::string_view name) const;
  std::optional<Witness> first_violation() const;
  const std::vector<Check>& checks() const { return checks_; }

  /// "name failed at (i,j,k)" summary of the first violation, 1-based.
  std::string describe_failure() const;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;

private:
  std::vector<Check> checks_;
};

}  // namespace mlb
