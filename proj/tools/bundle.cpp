#include "bundle.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace mlb::cli {

namespace {

using Keys = std::initializer_list<std::string_view>;

[[noreturn]] void fail(const std::string& loc, const std::string& what) { throw ValidationError(loc + ": " + what); }

void expect_object(const Json& j, const std::string& loc) {
  if (!j.is_object()) fail(loc, "expected an object");
}

void expect_keys(const Json& j, const std::string& loc, Keys allowed) {
  expect_object(j, loc);
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(loc, "unknown key '" + key + "'");
  }
}

const Json& field(const Json& j, const std::string& loc, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(loc, std::string("missing key '") + key + "'");
  return *it;
}

std::size_t read_count(const Json& j, const std::string& loc) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(loc, "expected a non-negative integer");
  return j.get<std::size_t>();
}

/// 1-based index in JSON, 0-based result.
std::size_t read_index(const Json& j, const std::string& loc, std::size_t bound) {
  if (!j.is_number_integer()) fail(loc, "expected an integer index");
  const long long v = j.get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > bound)
    fail(loc, "index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
  return static_cast<std::size_t>(v - 1);
}

Rational read_rational(const Json& j, const std::string& loc) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(loc, "expected a rational string \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(loc, "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

const Json& read_array(const Json& j, const std::string& loc) {
  if (!j.is_array()) fail(loc, "expected an array");
  return j;
}

/// Reads sparse records with the given 1-based index keys and a "c" value;
/// calls sink(indices, value).  Duplicate index tuples are rejected.
template <std::size_t K, typename Sink>
void read_records(const Json& j, const std::string& loc, const std::array<const char*, K>& keys,
                  const std::array<std::size_t, K>& bounds, Sink sink) {
  std::set<std::array<std::size_t, K>> seen;
  std::size_t pos = 0;
  for (const Json& rec : read_array(j, loc)) {
    const std::string rloc = loc + "[" + std::to_string(pos++) + "]";
    expect_object(rec, rloc);
    if (rec.size() != K + 1) {
      std::string expected;
      for (auto k : keys) expected += std::string(k) + ",";
      fail(rloc, "expected keys " + expected + "c");
    }
    std::array<std::size_t, K> idx{};
    for (std::size_t a = 0; a < K; ++a) idx[a] = read_index(field(rec, rloc, keys[a]), rloc + "." + keys[a], bounds[a]);
    const Rational c = read_rational(field(rec, rloc, "c"), rloc + ".c");
    if (!seen.insert(idx).second) {
      std::string t = "(";
      for (std::size_t a = 0; a < K; ++a) t += (a ? "," : "") + std::to_string(idx[a] + 1);
      fail(rloc, "duplicate entry " + t + ")");
    }
    sink(idx, c);
  }
}

std::vector<std::string> read_labels(const Json& j, const std::string& loc, std::size_t n) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const Json& l : read_array(j, loc)) {
    if (!l.is_string() || l.get<std::string>().empty()) fail(loc, "labels must be non-empty strings");
    if (!seen.insert(l.get<std::string>()).second) fail(loc, "duplicate label '" + l.get<std::string>() + "'");
    labels.push_back(l.get<std::string>());
  }
  if (labels.size() != n) fail(loc, "expected " + std::to_string(n) + " labels");
  return labels;
}

AlgebraSpec read_table(const Json& j, const std::string& loc, const std::string& prefix, bool commutative) {
  expect_keys(j, loc, {"dim", "basis", "products"});
  const std::size_t n = read_count(field(j, loc, "dim"), loc + ".dim");
  AlgebraSpec spec{StructureConstants(n), default_labels(n, prefix)};
  if (j.contains("basis")) spec.labels = read_labels(j["basis"], loc + ".basis", n);
  if (j.contains("products"))
    read_records<3>(j["products"], loc + ".products", {"i", "j", "k"}, {n, n, n},
                    [&](const std::array<std::size_t, 3>& idx, const Rational& c) {
                      spec.constants(idx[0], idx[1], idx[2]) = c;
                    });
  if (commutative)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
          if (spec.constants(i, k, m) != spec.constants(k, i, m))
            fail(loc + ".products", "asymmetric pair (" + spec.labels[i] + "," + spec.labels[k] + "): coefficient of " +
                                        spec.labels[m] + " is " + spec.constants(i, k, m).str() + " but (" +
                                        spec.labels[k] + "," + spec.labels[i] + ") gives " +
                                        spec.constants(k, i, m).str());
  return spec;
}

/// "i" picks the acting basis element, "row"/"col" the matrix entry.
std::vector<Matrix> read_action(const Json& j, const std::string& loc, std::size_t count, std::size_t size) {
  std::vector<Matrix> action(count, Matrix(size, size));
  read_records<3>(j, loc, {"i", "row", "col"}, {count, size, size},
                  [&](const std::array<std::size_t, 3>& idx, const Rational& c) { action[idx[0]](idx[1], idx[2]) = c; });
  return action;
}

Matrix read_square(const Json& j, const std::string& loc, std::size_t n) {
  Matrix m(n, n);
  read_records<2>(j, loc, {"i", "j"}, {n, n},
                  [&](const std::array<std::size_t, 2>& idx, const Rational& c) { m(idx[0], idx[1]) = c; });
  return m;
}

std::size_t need_algebra(const Bundle& b, const std::string& section) {
  if (!b.algebra) fail(section, "requires an 'algebra' section");
  return b.algebra->constants.dim();
}

std::vector<std::size_t> read_index_list(const Json& j, const std::string& loc, std::size_t bound) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  for (const Json& v : read_array(j, loc)) out.push_back(read_index(v, loc + "[" + std::to_string(pos++) + "]", bound));
  return out;
}

// --- emission ---------------------------------------------------------------

Json index_value(std::size_t zero_based) { return zero_based + 1; }

Json table_json(const AlgebraSpec& a) {
  const std::size_t n = a.constants.dim();
  Json out = Json::object();
  out["dim"] = n;
  out["basis"] = a.labels;
  Json products = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = a.constants(i, j, k);
        if (!c.is_zero()) products.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", c.str()}});
      }
  out["products"] = std::move(products);
  return out;
}

Json action_json(const std::vector<Matrix>& action) {
  Json out = Json::array();
  for (std::size_t i = 0; i < action.size(); ++i)
    for (std::size_t r = 0; r < action[i].rows(); ++r)
      for (std::size_t c = 0; c < action[i].cols(); ++c)
        if (!action[i](r, c).is_zero())
          out.push_back(Json{{"i", i + 1}, {"row", r + 1}, {"col", c + 1}, {"c", action[i](r, c).str()}});
  return out;
}

Json matrix_records(const Matrix& m, const char* row_key, const char* col_key) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.push_back(Json{{row_key, r + 1}, {col_key, c + 1}, {"c", m(r, c).str()}});
  return out;
}

}  // namespace

Bundle parse_bundle(const Json& doc) {
  expect_keys(doc, "bundle", {"algebra", "prelie", "representations", "cobrackets", "r_tensors", "linear_maps",
                              "bilinear_forms", "matched_pair", "manin_triple"});
  if (doc.empty()) throw ValidationError("missing required section: the bundle has no sections");
  Bundle b;
  if (doc.contains("algebra")) b.algebra = read_table(doc["algebra"], "algebra", "e", true);
  if (doc.contains("prelie")) b.prelie = read_table(doc["prelie"], "prelie", "e", false);

  if (doc.contains("representations")) {
    const std::size_t n = need_algebra(b, "representations");
    expect_object(doc["representations"], "representations");
    for (const auto& [name, entry] : doc["representations"].items()) {
      const std::string loc = "representations." + name;
      expect_keys(entry, loc, {"kind", "module_dim", "action"});
      RepSpec spec;
      spec.kind = "explicit";
      if (entry.contains("kind")) {
        if (!entry["kind"].is_string()) fail(loc + ".kind", "expected adjoint, coadjoint or explicit");
        spec.kind = entry["kind"].get<std::string>();
      }
      if (spec.kind == "adjoint" || spec.kind == "coadjoint") {
        if (entry.contains("module_dim") || entry.contains("action"))
          fail(loc, spec.kind + " takes no module_dim or action");
        spec.module_dim = n;
      } else if (spec.kind == "explicit") {
        spec.module_dim = read_count(field(entry, loc, "module_dim"), loc + ".module_dim");
        spec.action = entry.contains("action") ? read_action(entry["action"], loc + ".action", n, spec.module_dim)
                                               : std::vector<Matrix>(n, Matrix(spec.module_dim, spec.module_dim));
      } else {
        fail(loc + ".kind", "expected adjoint, coadjoint or explicit");
      }
      b.representations.emplace(name, std::move(spec));
    }
  }

  if (doc.contains("cobrackets")) {
    const std::size_t n = need_algebra(b, "cobrackets");
    expect_object(doc["cobrackets"], "cobrackets");
    for (const auto& [name, entry] : doc["cobrackets"].items()) {
      const std::string loc = "cobrackets." + name;
      expect_keys(entry, loc, {"terms"});
      std::vector<Tensor2> images(n, Tensor2::cube(n));
      read_records<3>(field(entry, loc, "terms"), loc + ".terms", {"i", "j", "k"}, {n, n, n},
                      [&](const std::array<std::size_t, 3>& idx, const Rational& c) { images[idx[0]](idx[1], idx[2]) = c; });
      b.cobrackets.emplace(name, std::move(images));
    }
  }

  if (doc.contains("r_tensors")) {
    const std::size_t n = need_algebra(b, "r_tensors");
    expect_object(doc["r_tensors"], "r_tensors");
    for (const auto& [name, entry] : doc["r_tensors"].items()) {
      const std::string loc = "r_tensors." + name;
      expect_keys(entry, loc, {"terms"});
      Tensor2 r = Tensor2::cube(n);
      read_records<2>(field(entry, loc, "terms"), loc + ".terms", {"i", "j"}, {n, n},
                      [&](const std::array<std::size_t, 2>& idx, const Rational& c) { r(idx[0], idx[1]) = c; });
      b.r_tensors.emplace(name, std::move(r));
    }
  }

  if (doc.contains("linear_maps")) {
    const std::size_t n = need_algebra(b, "linear_maps");
    expect_object(doc["linear_maps"], "linear_maps");
    for (const auto& [name, entry] : doc["linear_maps"].items()) {
      const std::string loc = "linear_maps." + name;
      expect_keys(entry, loc, {"rep", "rows", "cols", "terms"});
      LinearMapSpec spec;
      std::size_t cols = n;
      if (entry.contains("rep")) {
        if (!entry["rep"].is_string()) fail(loc + ".rep", "expected a representation name");
        spec.rep = entry["rep"].get<std::string>();
        const auto it = b.representations.find(spec.rep);
        if (it == b.representations.end()) fail(loc + ".rep", "no representation named '" + spec.rep + "'");
        cols = it->second.module_dim;
      }
      if (entry.contains("rows") && read_count(entry["rows"], loc + ".rows") != n)
        fail(loc + ".rows", "expected " + std::to_string(n) + " rows (the algebra dimension)");
      if (entry.contains("cols") && read_count(entry["cols"], loc + ".cols") != cols)
        fail(loc + ".cols", "expected " + std::to_string(cols) + " columns (the module dimension)");
      spec.map = Matrix(n, cols);
      read_records<2>(field(entry, loc, "terms"), loc + ".terms", {"row", "col"}, {n, cols},
                      [&](const std::array<std::size_t, 2>& idx, const Rational& c) { spec.map(idx[0], idx[1]) = c; });
      b.linear_maps.emplace(name, std::move(spec));
    }
  }

  if (doc.contains("bilinear_forms")) {
    const std::size_t n = need_algebra(b, "bilinear_forms");
    expect_object(doc["bilinear_forms"], "bilinear_forms");
    for (const auto& [name, entry] : doc["bilinear_forms"].items()) {
      const std::string loc = "bilinear_forms." + name;
      expect_keys(entry, loc, {"kind", "terms"});
      FormSpec spec;
      if (entry.contains("kind")) {
        spec.kind = entry["kind"].is_string() ? entry["kind"].get<std::string>() : "";
        if (spec.kind != "invariant" && spec.kind != "symplectic")
          fail(loc + ".kind", "expected invariant or symplectic");
      }
      spec.gram = read_square(field(entry, loc, "terms"), loc + ".terms", n);
      b.bilinear_forms.emplace(name, std::move(spec));
    }
  }

  if (doc.contains("matched_pair")) {
    const std::size_t n = need_algebra(b, "matched_pair");
    const Json& mp = doc["matched_pair"];
    expect_keys(mp, "matched_pair", {"h", "rho", "mu"});
    MatchedPairSpec spec;
    spec.h = read_table(field(mp, "matched_pair", "h"), "matched_pair.h", "h", true);
    const std::size_t m = spec.h.constants.dim();
    spec.rho = mp.contains("rho") ? read_action(mp["rho"], "matched_pair.rho", n, m)
                                  : std::vector<Matrix>(n, Matrix(m, m));
    spec.mu = mp.contains("mu") ? read_action(mp["mu"], "matched_pair.mu", m, n) : std::vector<Matrix>(m, Matrix(n, n));
    b.matched_pair = std::move(spec);
  }

  if (doc.contains("manin_triple")) {
    const Json& mt = doc["manin_triple"];
    expect_keys(mt, "manin_triple", {"total", "plus", "minus", "form"});
    ManinSpec spec;
    spec.total = read_table(field(mt, "manin_triple", "total"), "manin_triple.total", "e", true);
    const std::size_t n = spec.total.constants.dim();
    spec.plus = read_index_list(field(mt, "manin_triple", "plus"), "manin_triple.plus", n);
    spec.minus = read_index_list(field(mt, "manin_triple", "minus"), "manin_triple.minus", n);
    std::vector<int> hits(n, 0);
    for (auto i : spec.plus) ++hits[i];
    for (auto i : spec.minus) ++hits[i];
    for (std::size_t i = 0; i < n; ++i)
      if (hits[i] != 1)
        fail("manin_triple", "plus and minus must partition the basis; index " + std::to_string(i + 1) + " appears " +
                                 std::to_string(hits[i]) + " times");
    const Json& form = field(mt, "manin_triple", "form");
    expect_keys(form, "manin_triple.form", {"terms"});
    spec.gram = read_square(field(form, "manin_triple.form", "terms"), "manin_triple.form.terms", n);
    b.manin_triple = std::move(spec);
  }
  return b;
}

Bundle load_bundle_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_bundle(doc);
}

Bundle load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_bundle_text(buf.str());
}

Json bundle_to_json(const Bundle& b) {
  Json out = Json::object();
  if (b.algebra) out["algebra"] = table_json(*b.algebra);
  if (b.prelie) out["prelie"] = table_json(*b.prelie);
  if (!b.representations.empty()) {
    Json reps = Json::object();
    for (const auto& [name, spec] : b.representations) {
      Json e{{"kind", spec.kind}};
      if (spec.kind == "explicit") {
        e["module_dim"] = spec.module_dim;
        e["action"] = action_json(spec.action);
      }
      reps[name] = std::move(e);
    }
    out["representations"] = std::move(reps);
  }
  if (!b.cobrackets.empty()) {
    Json cobs = Json::object();
    for (const auto& [name, images] : b.cobrackets) {
      Json terms = Json::array();
      for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t off = 0; off < images[i].size(); ++off) {
          if (images[i].flat(off).is_zero()) continue;
          const auto idx = images[i].unravel(off);
          terms.push_back(Json{{"i", i + 1}, {"j", idx[0] + 1}, {"k", idx[1] + 1}, {"c", images[i].flat(off).str()}});
        }
      cobs[name] = Json{{"terms", std::move(terms)}};
    }
    out["cobrackets"] = std::move(cobs);
  }
  if (!b.r_tensors.empty()) {
    Json rs = Json::object();
    for (const auto& [name, r] : b.r_tensors) rs[name] = Json{{"terms", matrix_records(as_matrix(r), "i", "j")}};
    out["r_tensors"] = std::move(rs);
  }
  if (!b.linear_maps.empty()) {
    Json maps = Json::object();
    for (const auto& [name, spec] : b.linear_maps) {
      Json e = Json::object();
      if (!spec.rep.empty()) e["rep"] = spec.rep;
      e["rows"] = spec.map.rows();
      e["cols"] = spec.map.cols();
      e["terms"] = matrix_records(spec.map, "row", "col");
      maps[name] = std::move(e);
    }
    out["linear_maps"] = std::move(maps);
  }
  if (!b.bilinear_forms.empty()) {
    Json forms = Json::object();
    for (const auto& [name, spec] : b.bilinear_forms) {
      Json e = Json::object();
      if (!spec.kind.empty()) e["kind"] = spec.kind;
      e["terms"] = matrix_records(spec.gram, "i", "j");
      forms[name] = std::move(e);
    }
    out["bilinear_forms"] = std::move(forms);
  }
  if (b.matched_pair) {
    out["matched_pair"] = Json{{"h", table_json(b.matched_pair->h)},
                               {"rho", action_json(b.matched_pair->rho)},
                               {"mu", action_json(b.matched_pair->mu)}};
  }
  if (b.manin_triple) {
    Json plus = Json::array(), minus = Json::array();
    for (auto i : b.manin_triple->plus) plus.push_back(index_value(i));
    for (auto i : b.manin_triple->minus) minus.push_back(index_value(i));
    out["manin_triple"] = Json{{"total", table_json(b.manin_triple->total)},
                               {"plus", std::move(plus)},
                               {"minus", std::move(minus)},
                               {"form", Json{{"terms", matrix_records(b.manin_triple->gram, "i", "j")}}}};
  }
  return out;
}

AlgebraSpec algebra_spec(const MockLieAlgebra& a) { return AlgebraSpec{a.constants(), a.labels()}; }

RepSpec rep_spec(const Representation& r) { return RepSpec{"explicit", r.module_dim(), r.action()}; }

MockLieAlgebra require_algebra(const Bundle& b) {
  if (!b.algebra) throw ValidationError("missing required section: algebra");
  const AxiomReport report = validate_mock_lie(b.algebra->constants);
  if (!report.ok()) throw ValidationError("algebra: not a mock-Lie algebra, " + report.describe_failure());
  return MockLieAlgebra::create(b.algebra->constants, b.algebra->labels);
}

MockPreLieAlgebra require_prelie(const Bundle& b) {
  if (!b.prelie) throw ValidationError("missing required section: prelie");
  const AxiomReport report = validate_mock_pre_lie(b.prelie->constants);
  if (!report.ok()) throw ValidationError("prelie: not a mock-pre-Lie algebra, " + report.describe_failure());
  return MockPreLieAlgebra::create(b.prelie->constants, b.prelie->labels);
}

}  // namespace mlb::cli
