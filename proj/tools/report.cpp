#include "report.hpp"

#include <sstream>

namespace mlb::cli {

namespace {

Json witness_json(const Witness& w, const std::string& text) {
  Json indices = Json::array();
  for (auto i : w.indices) indices.push_back(i + 1);
  Json residual = Json::array();
  // unravel against the dense shape, row-major
  for (std::size_t off = 0; off < w.residual.size(); ++off) {
    if (w.residual[off].is_zero()) continue;
    Json index = Json::array();
    std::size_t rest = off;
    std::vector<std::size_t> idx(w.residual_shape.size());
    for (std::size_t a = w.residual_shape.size(); a-- > 0;) {
      idx[a] = rest % w.residual_shape[a];
      rest /= w.residual_shape[a];
    }
    for (auto i : idx) index.push_back(i + 1);
    residual.push_back(Json{{"index", std::move(index)}, {"c", w.residual[off].str()}});
  }
  return Json{{"indices", std::move(indices)}, {"shape", w.residual_shape}, {"residual", std::move(residual)},
              {"text", text}};
}

[[noreturn]] void bad(const std::string& what) { throw ParseError("report: " + what); }

Witness parse_witness(const Json& j) {
  if (!j.is_object()) bad("witness must be an object");
  Witness w;
  try {
    for (const Json& i : j.at("indices")) w.indices.push_back(i.get<std::size_t>() - 1);
    w.residual_shape = j.at("shape").get<std::vector<std::size_t>>();
    std::size_t volume = 1;
    for (auto d : w.residual_shape) volume *= d;
    w.residual.assign(volume, Rational());
    for (const Json& e : j.at("residual")) {
      const auto idx = e.at("index").get<std::vector<std::size_t>>();
      if (idx.size() != w.residual_shape.size()) bad("residual index rank differs from shape");
      std::size_t off = 0;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        if (idx[a] < 1 || idx[a] > w.residual_shape[a]) bad("residual index out of range");
        off = off * w.residual_shape[a] + (idx[a] - 1);
      }
      w.residual[off] = Rational::parse(e.at("c").get<std::string>());
    }
  } catch (const Json::exception& e) {
    bad(e.what());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  return w;
}

std::string info_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.flag) return false;
  return true;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"flag", c.flag}};
    e["witness"] = c.witness ? witness_json(*c.witness, c.witness_text) : Json(nullptr);
    checks.push_back(std::move(e));
  }
  Json out{{"command", r.command}, {"verdict", r.pass() ? "pass" : "fail"}, {"checks", std::move(checks)},
           {"info", r.info}};
  if (r.bundle) out["bundle"] = *r.bundle;
  return out;
}

Report parse_report(const Json& doc) {
  Report r;
  try {
    r.command = doc.at("command").get<std::string>();
    for (const Json& c : doc.at("checks")) {
      ReportCheck check{c.at("name").get<std::string>(), c.at("flag").get<bool>(), std::nullopt, ""};
      if (!c.at("witness").is_null()) {
        check.witness = parse_witness(c.at("witness"));
        check.witness_text = c.at("witness").at("text").get<std::string>();
      }
      r.checks.push_back(std::move(check));
    }
    r.info = doc.at("info");
    if (doc.contains("bundle")) r.bundle = doc.at("bundle");
    const std::string verdict = doc.at("verdict").get<std::string>();
    if (verdict != (r.pass() ? "pass" : "fail")) bad("verdict disagrees with the check flags");
  } catch (const Json::exception& e) {
    bad(e.what());
  }
  return r;
}

std::string emit(const Report& r, Format format, bool verbose) {
  if (format == Format::json) return report_to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "verdict: " << (r.pass() ? "pass" : "fail") << "\n";
  for (const auto& c : r.checks) {
    out << "check " << c.name << ": " << (c.flag ? "pass" : "fail");
    if (!c.flag && !c.witness_text.empty()) out << " " << c.witness_text;
    out << "\n";
  }
  for (const auto& [key, value] : r.info.items()) out << "info " << key << ": " << info_value(value) << "\n";
  if (r.bundle) {
    if (verbose)
      out << "bundle:\n" << r.bundle->dump(2) << "\n";
    else
      out << "bundle: emitted (use --emit FILE or --verbose)\n";
  }
  return out.str();
}

std::string emit_error(const std::string& command, const std::string& kind, const std::string& message, Format format) {
  if (format == Format::json)
    return Json{{"command", command}, {"verdict", "error"}, {"error", Json{{"kind", kind}, {"message", message}}}}
               .dump(2) +
           "\n";
  return "error: " + kind + ": " + message + "\n";
}

}  // namespace mlb::cli
