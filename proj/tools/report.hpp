#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bundle.hpp"

namespace mlb::cli {

struct ReportCheck {
  std::string name;
  bool flag = true;
  std::optional<Witness> witness;
  /// Human form of the witness with basis labels, e.g. "at (e1,e1,e1): 3*e1".
  std::string witness_text;

  friend bool operator==(const ReportCheck&, const ReportCheck&) = default;
};

/// Outcome of one command.  The verdict is derived: pass iff every flag holds.
struct Report {
  std::string command;
  std::vector<ReportCheck> checks;
  Json info = Json::object();
  /// Bundle constructed by the command, in bundle_to_json form.
  std::optional<Json> bundle;

  bool pass() const;
  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { json, text };

/// Witness indices are 1-based in JSON; residuals are listed sparsely as
/// {"index": [...], "c": "p/q"} with the dense shape alongside.
Json report_to_json(const Report& r);
/// Inverse of report_to_json; throws ParseError on malformed input.
Report parse_report(const Json& doc);

/// Deterministic rendering.  Text is a fixed line layout: command, verdict,
/// one line per check, one line per info key, and the bundle when verbose.
std::string emit(const Report& r, Format format, bool verbose = false);

/// Error envelope for exit code 2.
std::string emit_error(const std::string& command, const std::string& kind, const std::string& message, Format format);

}  // namespace mlb::cli
