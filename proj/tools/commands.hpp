#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace mlb::cli {

class UnknownVerb : public Error {
public:
  using Error::Error;
};

/// Entry selectors.  Empty means "the only entry of the section"; for
/// representations it falls back to the built-in adjoint representation.
struct Options {
  std::string r;
  std::string rep;
  std::string t;
  std::string form;
  std::string cobracket;
};

const std::vector<std::string>& verbs();
bool is_verb(const std::string& verb);

/// Throws UnknownVerb or ValidationError (input errors, exit 2).
/// Mathematical failures are reported as failed checks.
Report run_command(const std::string& verb, const Bundle& b, const Options& o);

inline int exit_code(const Report& r) { return r.pass() ? 0 : 1; }

/// c1*b1 + c2*b2 ... with basis names joined by the tensor sign; "0" when empty.
std::string dense_text(const std::vector<std::size_t>& shape, std::span<const Rational> coeffs,
                       const std::vector<std::vector<std::string>>& axis_labels);

}  // namespace mlb::cli
