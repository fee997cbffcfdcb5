#include "mlb/axioms.hpp"

#include <stdexcept>

namespace mlb {

Witness Witness::of_vector(std::vector<std::size_t> indices, const Vector& residual) {
  return Witness{std::move(indices), {residual.size()}, residual};
}

Witness Witness::of_matrix(std::vector<std::size_t> indices, const Matrix& residual) {
  return Witness{std::move(indices),
                 {residual.rows(), residual.cols()},
                 std::vector<Rational>(residual.entries().begin(), residual.entries().end())};
}

void AxiomReport::merge(const AxiomReport& other, std::string_view prefix) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    if (!prefix.empty()) copy.name = std::string(prefix) + "." + copy.name;
    checks_.push_back(std::move(copy));
  }
}

bool AxiomReport::ok() const {
  for (const auto& c : checks_)
    if (!c.holds) return false;
  return true;
}

const Check* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool AxiomReport::flag(std::string_view name) const {
  const Check* c = find(name);
  if (c == nullptr) throw std::out_of_range("no check named '" + std::string(name) + "'");
  return c->holds;
}

std::optional<Witness> AxiomReport::first_violation() const {
  for (const auto& c : checks_)
    if (!c.holds) return c.witness;
  return std::nullopt;
}

std::string AxiomReport::describe_failure() const {
  for (const auto& c : checks_) {
    if (c.holds) continue;
    std::string out = c.name + " fails";
    if (c.witness && !c.witness->indices.empty()) {
      out += " at (";
      for (std::size_t i = 0; i < c.witness->indices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c.witness->indices[i] + 1);
      }
      out += ")";
    }
    return out;
  }
  return "all checks hold";
}

}  // namespace mlb
