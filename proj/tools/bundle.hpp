#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlb/ybe.hpp"

namespace mlb::cli {

using Json = nlohmann::ordered_json;

/// Input that is not JSON or cannot be read.
class ParseError : public Error {
public:
  using Error::Error;
};

/// JSON that does not describe a consistent bundle.  Messages start with the
/// location, e.g. "algebra.products[3]: index 5 out of range 1..4".
class ValidationError : public Error {
public:
  using Error::Error;
};

struct AlgebraSpec {
  StructureConstants constants;
  std::vector<std::string> labels;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// kind is "adjoint", "coadjoint" or "explicit"; only explicit carries data.
struct RepSpec {
  std::string kind;
  std::size_t module_dim = 0;
  std::vector<Matrix> action;

  friend bool operator==(const RepSpec&, const RepSpec&) = default;
};

/// T: V -> A for a named representation; empty rep means the adjoint one.
struct LinearMapSpec {
  std::string rep;
  Matrix map;

  friend bool operator==(const LinearMapSpec&, const LinearMapSpec&) = default;
};

/// kind is "", "invariant" or "symplectic".
struct FormSpec {
  std::string kind;
  Matrix gram;

  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

/// Second algebra H and the actions; the first algebra is the bundle's.
struct MatchedPairSpec {
  AlgebraSpec h;
  std::vector<Matrix> rho;
  std::vector<Matrix> mu;

  friend bool operator==(const MatchedPairSpec&, const MatchedPairSpec&) = default;
};

/// plus / minus are 0-based here and 1-based in JSON.
struct ManinSpec {
  AlgebraSpec total;
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  Matrix gram;

  friend bool operator==(const ManinSpec&, const ManinSpec&) = default;
};

/// Parsed bundle.  Products are checked for commutativity on load; no other
/// axiom is checked.  Named entries keep lexicographic order.
struct Bundle {
  std::optional<AlgebraSpec> algebra;
  std::optional<AlgebraSpec> prelie;
  std::map<std::string, RepSpec> representations;
  std::map<std::string, std::vector<Tensor2>> cobrackets;
  std::map<std::string, Tensor2> r_tensors;
  std::map<std::string, LinearMapSpec> linear_maps;
  std::map<std::string, FormSpec> bilinear_forms;
  std::optional<MatchedPairSpec> matched_pair;
  std::optional<ManinSpec> manin_triple;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

/// Throws ValidationError.
Bundle parse_bundle(const Json& doc);
/// Throws ParseError or ValidationError.
Bundle load_bundle(const std::filesystem::path& path);
Bundle load_bundle_text(const std::string& text);

/// Canonical JSON form: sparse nonzero records in lexicographic order,
/// rationals as strings.  parse_bundle(bundle_to_json(b)) == b.
Json bundle_to_json(const Bundle& b);

AlgebraSpec algebra_spec(const MockLieAlgebra& a);
/// Explicit-action spec of a representation.
RepSpec rep_spec(const Representation& r);

/// The bundle algebra as a validated mock-Lie algebra; throws ValidationError
/// when the section is missing or fails the axioms.
MockLieAlgebra require_algebra(const Bundle& b);
MockPreLieAlgebra require_prelie(const Bundle& b);

/// Entry `name` of a section, or its only entry when name is empty.  Throws
/// ValidationError naming the section and the flag that selects entries.
template <typename T>
const std::pair<const std::string, T>& select_entry(const std::map<std::string, T>& section,
                                                    const std::string& section_name, const std::string& name,
                                                    const std::string& flag) {
  if (!name.empty()) {
    const auto it = section.find(name);
    if (it == section.end()) throw ValidationError(section_name + ": no entry named '" + name + "'");
    return *it;
  }
  if (section.empty()) throw ValidationError("missing required section: " + section_name);
  if (section.size() > 1) throw ValidationError(section_name + ": several entries, select one with " + flag);
  return *section.begin();
}

}  // namespace mlb::cli
