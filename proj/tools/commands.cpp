#include "commands.hpp"

#include <functional>
#include <map>

namespace mlb::cli {

namespace {

using Labels = std::vector<std::string>;

/// How to label a witness: one label set per index position (the last one
/// repeats) and one per residual axis.  `matrix` residuals print as rows.
struct Style {
  std::vector<Labels> index;
  std::vector<Labels> residual;
  bool matrix = false;
};

const std::string kTensor = "⊗";

std::string term_text(const Rational& c, const std::string& basis) {
  if (c == Rational(1)) return basis;
  if (c == Rational(-1)) return "-" + basis;
  return c.str() + "*" + basis;
}

std::string matrix_text(const std::vector<std::size_t>& shape, std::span<const Rational> coeffs) {
  std::string out = "[";
  for (std::size_t r = 0; r < shape[0]; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < shape[1]; ++c) out += (c ? ", " : "") + coeffs[r * shape[1] + c].str();
    out += "]";
  }
  return out + "]";
}

std::string witness_text(const Witness& w, const Style& s) {
  std::string out;
  if (!w.indices.empty()) {
    out = "at (";
    for (std::size_t p = 0; p < w.indices.size(); ++p) {
      const std::size_t i = w.indices[p];
      std::string name = std::to_string(i + 1);
      if (!s.index.empty()) {
        const Labels& l = s.index[std::min(p, s.index.size() - 1)];
        if (i < l.size()) name = l[i];
      }
      out += (p ? "," : "") + name;
    }
    out += "): ";
  } else {
    out = "residual ";
  }
  if (s.matrix && w.residual_shape.size() == 2) return out + matrix_text(w.residual_shape, w.residual);
  if (s.residual.size() == w.residual_shape.size() && !s.residual.empty())
    return out + dense_text(w.residual_shape, w.residual, s.residual);
  if (w.residual.size() == 1) return out + w.residual.front().str();
  std::string list = "[";
  for (std::size_t k = 0; k < w.residual.size(); ++k) list += (k ? ", " : "") + w.residual[k].str();
  return out + list + "]";
}

void add_check(Report& r, const Check& c, const Style& s, const std::string& name) {
  ReportCheck rc{name, c.holds, c.witness, ""};
  if (c.witness) rc.witness_text = witness_text(*c.witness, s);
  r.checks.push_back(std::move(rc));
}

void add_checks(Report& r, const AxiomReport& a, const std::function<Style(const std::string&)>& style_of,
                const std::string& prefix = {}) {
  for (const Check& c : a.checks()) add_check(r, c, style_of(c.name), prefix.empty() ? c.name : prefix + "." + c.name);
}

Report named(std::string command) {
  Report r;
  r.command = std::move(command);
  return r;
}

void add_flag(Report& r, const std::string& name, bool flag) { r.checks.push_back(ReportCheck{name, flag, std::nullopt, ""}); }

Style uniform(const Labels& index, const std::vector<Labels>& residual) { return Style{{index}, residual, false}; }

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <std::size_t K>
std::string tensor_text(const Tensor<K>& t, const Labels& labels) {
  return dense_text(std::vector<std::size_t>(t.dims().begin(), t.dims().end()), t.coeffs(),
                    std::vector<Labels>(K, labels));
}

// --- bundle resolution -------------------------------------------------------

Labels dual_labels(std::size_t n) { return default_labels(n, "f"); }

struct ResolvedRep {
  std::string name;
  std::string kind;
  std::vector<Matrix> action;
  Labels module_labels;
  std::string prefix;
};

ResolvedRep resolve_rep(const Bundle& b, const MockLieAlgebra& a, const std::string& name) {
  const std::size_t n = a.dim();
  RepSpec spec{"adjoint", n, {}};
  std::string chosen = name.empty() ? "adjoint" : name;
  const auto it = b.representations.find(chosen);
  if (it != b.representations.end()) {
    spec = it->second;
  } else if (!name.empty() && name != "adjoint" && name != "coadjoint") {
    throw ValidationError("representations: no entry named '" + name + "'");
  } else if (name.empty() && b.representations.size() == 1) {
    chosen = b.representations.begin()->first;
    spec = b.representations.begin()->second;
  } else if (name.empty() && b.representations.size() > 1) {
    throw ValidationError("representations: several entries, select one with --rep");
  } else if (name == "coadjoint") {
    spec.kind = "coadjoint";
  }

  if (spec.kind == "adjoint") return {chosen, spec.kind, adjoint_rep(a).action(), a.labels(), "v"};
  if (spec.kind == "coadjoint")
    return {chosen, spec.kind, dual_representation(adjoint_rep(a)).action(), dual_labels(n), "f"};
  return {chosen, spec.kind, spec.action, default_labels(spec.module_dim, "v"), "v"};
}

Representation build_rep(const MockLieAlgebra& a, const ResolvedRep& r) {
  const AxiomReport report = validate_representation(a, r.action);
  if (!report.ok())
    throw ValidationError("representations." + r.name + ": not a representation, " + report.describe_failure());
  return Representation::create(a, r.action);
}

Cobracket select_cobracket(const Bundle& b, const MockLieAlgebra& a, const Options& o, std::string* name = nullptr) {
  const auto& [key, images] = select_entry(b.cobrackets, "cobrackets", o.cobracket, "--cobracket");
  if (name) *name = key;
  return Cobracket(a.constants(), images);
}

std::pair<std::string, Tensor2> select_r(const Bundle& b, const Options& o) {
  const auto& [key, r] = select_entry(b.r_tensors, "r_tensors", o.r, "--r");
  return {key, r};
}

std::pair<std::string, FormSpec> select_form(const Bundle& b, const Options& o) {
  const auto& [key, f] = select_entry(b.bilinear_forms, "bilinear_forms", o.form, "--form");
  return {key, f};
}

struct ResolvedMap {
  std::string name;
  ResolvedRep rep;
  Matrix map;
};

ResolvedMap select_map(const Bundle& b, const MockLieAlgebra& a, const Options& o) {
  const auto& [key, spec] = select_entry(b.linear_maps, "linear_maps", o.t, "--T");
  ResolvedRep rep = resolve_rep(b, a, o.rep.empty() ? spec.rep : o.rep);
  const std::size_t m = rep.action.empty() ? 0 : rep.action.front().rows();
  if (spec.map.rows() != a.dim() || (a.dim() > 0 && spec.map.cols() != m))
    throw ValidationError("linear_maps." + key + ": expected a " + std::to_string(a.dim()) + "x" + std::to_string(m) +
                          " map for representation '" + rep.name + "'");
  return {key, std::move(rep), spec.map};
}

Bundle single_algebra(const MockLieAlgebra& a) {
  Bundle out;
  out.algebra = algebra_spec(a);
  return out;
}

// --- styles ------------------------------------------------------------------

std::function<Style(const std::string&)> algebra_styles(const Labels& l) {
  return [l](const std::string&) { return uniform(l, {l}); };
}

std::function<Style(const std::string&)> bialgebra_styles(const Labels& l, const Labels& f) {
  return [l, f](const std::string& name) {
    if (name == "dual_jacobi") return uniform(f, {f});
    return uniform(l, {l, l});
  };
}

std::function<Style(const std::string&)> matched_pair_styles(const Labels& a, const Labels& h) {
  return [a, h](const std::string& name) {
    if (name.rfind("a.", 0) == 0) return uniform(a, {a});
    if (name.rfind("h.", 0) == 0) return uniform(h, {h});
    if (name == "rho.representation") return Style{{a}, {}, true};
    if (name == "mu.representation") return Style{{h}, {}, true};
    if (name == "rho_compatibility") return Style{{a, h, h}, {h}, false};
    return Style{{h, a, a}, {a}, false};
  };
}

std::function<Style(const std::string&)> form_styles(const Labels& l) {
  return [l](const std::string& name) {
    if (name == "nondegenerate") return uniform(l, {l});
    return uniform(l, {});
  };
}

MatchedPairData matched_pair_source(const Bundle& b, const MockLieAlgebra& a, const Options& o) {
  if (b.matched_pair && o.cobracket.empty()) {
    const MatchedPairSpec& s = *b.matched_pair;
    return MatchedPairData{a.constants(), s.h.constants, s.rho, s.mu, a.labels(), s.h.labels};
  }
  MatchedPairData m = standard_matched_pair(select_cobracket(b, a, o));
  m.a_labels = a.labels();
  return m;
}

// --- verbs -------------------------------------------------------------------

Report check_algebra(const Bundle& b, const Options&) {
  if (!b.algebra) throw ValidationError("missing required section: algebra");
  Report r = named("check-algebra");
  add_checks(r, validate_mock_lie(b.algebra->constants), algebra_styles(b.algebra->labels));
  r.info["dim"] = b.algebra->constants.dim();
  return r;
}

Report check_rep(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const ResolvedRep rep = resolve_rep(b, a, o.rep);
  Report r = named("check-rep");
  add_checks(r, validate_representation(a, rep.action), [&](const std::string&) { return Style{{a.labels()}, {}, true}; });
  r.info["representation"] = rep.name;
  r.info["kind"] = rep.kind;
  r.info["module_dim"] = rep.module_labels.size();
  return r;
}

Report check_prelie(const Bundle& b, const Options&) {
  if (!b.prelie) throw ValidationError("missing required section: prelie");
  Report r = named("check-prelie");
  const Labels& l = b.prelie->labels;
  add_checks(r, validate_mock_pre_lie(b.prelie->constants), [&](const std::string&) { return uniform(l, {l}); });
  r.info["dim"] = b.prelie->constants.dim();
  return r;
}

Report check_o(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const ResolvedMap t = select_map(b, a, o);
  const Representation rep = build_rep(a, t.rep);
  const OOperatorCheck c = check_o_operator(rep, t.map);
  Report r = named("check-o-operator");
  add_checks(r, c.report, [&](const std::string&) { return uniform(t.rep.module_labels, {a.labels()}); });
  r.info["map"] = t.name;
  r.info["representation"] = t.rep.name;
  r.info["rota_baxter"] = c.rota_baxter();
  return r;
}

Report semidirect(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const ResolvedRep rr = resolve_rep(b, a, o.rep);
  Report r = named("semidirect");
  const AxiomReport rep_report = validate_representation(a, rr.action);
  add_checks(r, rep_report, [&](const std::string&) { return Style{{a.labels()}, {}, true}; });
  r.info["representation"] = rr.name;
  if (!rep_report.ok()) return r;
  const MockLieAlgebra s = semidirect_product(Representation::create(a, rr.action), rr.prefix);
  add_checks(r, validate_mock_lie(s.constants()), algebra_styles(s.labels()), "product");
  r.info["dim"] = s.dim();
  r.bundle = bundle_to_json(single_algebra(s));
  return r;
}

Report sub_adjacent_verb(const Bundle& b, const Options&) {
  if (!b.prelie) throw ValidationError("missing required section: prelie");
  Report r = named("sub-adjacent");
  const Labels& l = b.prelie->labels;
  const AxiomReport pre = validate_mock_pre_lie(b.prelie->constants);
  add_checks(r, pre, [&](const std::string&) { return uniform(l, {l}); });
  if (!pre.ok()) return r;
  const MockPreLieAlgebra p = MockPreLieAlgebra::create(b.prelie->constants, l);
  const SubAdjacent s = sub_adjacent(p);
  add_checks(r, validate_mock_lie(s.algebra.constants()), algebra_styles(l), "sub_adjacent");
  add_check(r, validate_representation(s.algebra, s.theta.action()).checks().front(), Style{{l}, {}, true},
            "theta.representation");
  Bundle out;
  out.algebra = AlgebraSpec{s.algebra.constants(), l};
  out.prelie = b.prelie;
  out.representations.emplace("theta", rep_spec(s.theta));
  r.bundle = bundle_to_json(out);
  return r;
}

Report cobracket_verb(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const auto [name, rt] = select_r(b, o);
  const Cobracket d = coboundary_cobracket(a, rt);
  Report r = named("cobracket");
  add_checks(r, validate_bialgebra(d), bialgebra_styles(a.labels(), dual_labels(a.dim())));
  Json images = Json::object();
  for (std::size_t i = 0; i < a.dim(); ++i) images[a.labels()[i]] = tensor_text(d.image(i), a.labels());
  r.info["r"] = name;
  r.info["images"] = std::move(images);
  Bundle out = single_algebra(a);
  out.r_tensors.emplace(name, rt);
  out.cobrackets.emplace("delta_" + name, d.images());
  r.bundle = bundle_to_json(out);
  return r;
}

Report check_bialgebra(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  std::string name;
  const Cobracket d = select_cobracket(b, a, o, &name);
  Report r = named("check-bialgebra");
  add_checks(r, validate_bialgebra(d), bialgebra_styles(a.labels(), dual_labels(a.dim())));
  r.info["cobracket"] = name;
  return r;
}

Report check_matched_pair_verb(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const MatchedPairData m = matched_pair_source(b, a, o);
  Report r = named("check-matched-pair");
  add_checks(r, check_matched_pair(m), matched_pair_styles(m.a_labels, m.h_labels));
  r.info["source"] = b.matched_pair && o.cobracket.empty() ? "matched_pair" : "cobracket";
  return r;
}

Report bicrossed(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const MatchedPairData m = matched_pair_source(b, a, o);
  Report r = named("bicrossed");
  const AxiomReport check = check_matched_pair(m);
  add_checks(r, check, matched_pair_styles(m.a_labels, m.h_labels));
  if (!check.ok()) return r;
  const MockLieAlgebra total = bicrossed_product(m);
  r.info["dim"] = total.dim();
  r.bundle = bundle_to_json(single_algebra(total));
  return r;
}

Report check_manin(const Bundle& b, const Options& o) {
  ManinTripleData m;
  Labels labels;
  if (b.manin_triple && o.cobracket.empty()) {
    const ManinSpec& s = *b.manin_triple;
    m = ManinTripleData{s.total.constants, s.plus, s.minus, BilinearForm(s.gram)};
    labels = s.total.labels;
  } else {
    const MockLieAlgebra a = require_algebra(b);
    m = standard_manin_triple(select_cobracket(b, a, o));
    labels = a.labels();
    const Labels f = dual_labels(a.dim());
    labels.insert(labels.end(), f.begin(), f.end());
  }
  const ManinReport mr = check_manin_triple(m);
  Report r = named("check-manin");
  add_checks(r, mr.report, [&](const std::string& name) {
    if (name == "plus_isotropic" || name == "minus_isotropic" || name == "invariant" || name == "symmetric")
      return uniform(labels, {});
    return uniform(labels, {labels});
  });
  r.info["standard"] = mr.standard;
  return r;
}

Report double_verb(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const Cobracket d = select_cobracket(b, a, o);
  Report r = named("double");
  const AxiomReport bi = validate_bialgebra(d);
  add_checks(r, bi, bialgebra_styles(a.labels(), dual_labels(a.dim())), "bialgebra");
  if (!bi.ok()) return r;
  const DoubleConstruction dc = double_construction(a, d);
  const CoboundaryReport cr = check_coboundary_conditions(dc.algebra, dc.canonical_r);
  const Labels& dl = dc.algebra.labels();
  for (const char* name : {"cond_i", "cond_ii", "ybe"})
    add_check(r, *cr.report.find(name), uniform(dl, std::vector<Labels>(name == std::string("cond_i") ? 2 : 3, dl)),
              std::string("double.") + name);
  add_checks(r, dc.homomorphisms, [&](const std::string&) { return uniform(a.labels(), {dl, dl}); });
  r.info["dim"] = dc.algebra.dim();
  r.info["classification"] = to_string(cr.classification);
  Bundle out = single_algebra(dc.algebra);
  out.r_tensors.emplace("r", dc.canonical_r);
  out.cobrackets.emplace("delta", dc.cobracket.images());
  out.bilinear_forms.emplace("pairing", FormSpec{"invariant", pairing_form(a.dim())});
  r.bundle = bundle_to_json(out);
  return r;
}

Report ybe_verb(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const auto [name, rt] = select_r(b, o);
  const CoboundaryReport cr = check_coboundary_conditions(a, rt);
  Report r = named("ybe");
  add_check(r, *cr.report.find("ybe"), uniform(a.labels(), std::vector<Labels>(3, a.labels())), "ybe");
  r.info["r"] = name;
  r.info["bracket"] = tensor_text(cr.bracket, a.labels());
  r.info["cond_i"] = cr.cond_i;
  r.info["cond_ii"] = cr.cond_ii;
  r.info["skew"] = cr.skew;
  r.info["classification"] = to_string(cr.classification);
  return r;
}

Report ybe_operator_form(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const auto [name, rt] = select_r(b, o);
  Report r = named("ybe-operator-form");
  r.info["r"] = name;
  const Tensor2 sym = rt + switch_factors(rt);
  add_check(r, Check{"skew", sym.is_zero(), sym.is_zero() ? std::nullopt : std::optional(Witness::of_tensor({}, sym))},
            uniform(a.labels(), {a.labels(), a.labels()}), "skew");
  if (!sym.is_zero()) return r;
  add_checks(r, check_ybe_operator_form(a, rt), [&](const std::string&) { return uniform(dual_labels(a.dim()), {a.labels()}); });
  return r;
}

Report lift_verb(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const ResolvedMap t = select_map(b, a, o);
  const Representation rep = build_rep(a, t.rep);
  const OOperatorCheck oc = check_o_operator(rep, t.map);
  const Lift lift = lift_o_operator(rep, t.map);
  Report r = named("lift");
  add_checks(r, oc.report, [&](const std::string&) { return uniform(t.rep.module_labels, {a.labels()}); });
  const Labels& ll = lift.algebra.labels();
  add_check(r,
            Check{"ybe", lift.bracket.is_zero(),
                  lift.bracket.is_zero() ? std::nullopt : std::optional(Witness::of_tensor({}, lift.bracket))},
            uniform(ll, std::vector<Labels>(3, ll)), "ybe");
  r.info["map"] = t.name;
  r.info["representation"] = t.rep.name;
  r.info["agreement"] = oc.ok() == lift.bracket.is_zero();
  Bundle out = single_algebra(lift.algebra);
  out.r_tensors.emplace("r", lift.r);
  r.bundle = bundle_to_json(out);
  return r;
}

Report canonical_solution(const Bundle& b, const Options&) {
  if (!b.prelie) throw ValidationError("missing required section: prelie");
  Report r = named("canonical-solution");
  const Labels& l = b.prelie->labels;
  const AxiomReport pre = validate_mock_pre_lie(b.prelie->constants);
  add_checks(r, pre, [&](const std::string&) { return uniform(l, {l}); });
  if (!pre.ok()) return r;
  const Lift lift = canonical_solution_from_prelie(MockPreLieAlgebra::create(b.prelie->constants, l));
  const Labels& ll = lift.algebra.labels();
  add_check(r,
            Check{"ybe", lift.bracket.is_zero(),
                  lift.bracket.is_zero() ? std::nullopt : std::optional(Witness::of_tensor({}, lift.bracket))},
            uniform(ll, std::vector<Labels>(3, ll)), "ybe");
  r.info["dim"] = lift.algebra.dim();
  r.info["r"] = tensor_text(lift.r, ll);
  Bundle out = single_algebra(lift.algebra);
  out.r_tensors.emplace("r", lift.r);
  r.bundle = bundle_to_json(out);
  return r;
}

Report rota_baxter_corr(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const auto [rname, rt] = select_r(b, o);
  const auto [fname, form] = select_form(b, o);
  Report r = named("rota-baxter-corr");
  r.info["r"] = rname;
  r.info["form"] = fname;
  const Tensor2 sym = rt + switch_factors(rt);
  add_check(r, Check{"skew", sym.is_zero(), sym.is_zero() ? std::nullopt : std::optional(Witness::of_tensor({}, sym))},
            uniform(a.labels(), {a.labels(), a.labels()}), "skew");
  if (!sym.is_zero()) return r;
  const BilinearForm w(form.gram);
  const AxiomReport admissible = check_invariant_form(a, w);
  add_flag(r, "form_admissible", admissible.ok());
  if (!admissible.ok()) {
    r.info["form_failure"] = admissible.describe_failure();
    return r;
  }
  const RotaBaxterCorrespondence rb = rota_baxter_correspondence(a, rt, w);
  add_check(r, *rb.report.find("agreement"), Style{}, "agreement");
  r.info["ybe"] = rb.ybe;
  r.info["rota_baxter"] = rb.rota_baxter;
  r.info["r_phi"] = matrix_json(rb.r_phi);
  return r;
}

Report check_form(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const auto [name, form] = select_form(b, o);
  const BilinearForm w(form.gram);
  std::string kind = form.kind;
  if (kind.empty()) kind = w.is_skew() && !w.is_symmetric() ? "symplectic" : "invariant";
  Report r = named("check-form");
  const AxiomReport report = kind == "symplectic" ? check_symplectic_form(a, w) : check_invariant_form(a, w);
  add_checks(r, report, form_styles(a.labels()));
  r.info["form"] = name;
  r.info["kind"] = kind;
  return r;
}

Report prelie_from_symplectic_verb(const Bundle& b, const Options& o) {
  const MockLieAlgebra a = require_algebra(b);
  const auto [name, form] = select_form(b, o);
  const BilinearForm w(form.gram);
  Report r = named("prelie-from-symplectic");
  const AxiomReport report = check_symplectic_form(a, w);
  add_checks(r, report, form_styles(a.labels()));
  r.info["form"] = name;
  if (!report.ok()) return r;
  const MockPreLieAlgebra p = prelie_from_symplectic(a, w);
  add_checks(r, validate_mock_pre_lie(p.constants()), [&](const std::string&) { return uniform(a.labels(), {a.labels()}); });
  Bundle out = single_algebra(a);
  out.prelie = AlgebraSpec{p.constants(), a.labels()};
  out.bilinear_forms.emplace(name, FormSpec{"symplectic", form.gram});
  r.bundle = bundle_to_json(out);
  return r;
}

using Handler = Report (*)(const Bundle&, const Options&);

const std::vector<std::pair<std::string, Handler>>& table() {
  static const std::vector<std::pair<std::string, Handler>> t{
      {"check-algebra", check_algebra},
      {"check-rep", check_rep},
      {"check-prelie", check_prelie},
      {"check-o-operator", check_o},
      {"semidirect", semidirect},
      {"sub-adjacent", sub_adjacent_verb},
      {"cobracket", cobracket_verb},
      {"check-bialgebra", check_bialgebra},
      {"check-matched-pair", check_matched_pair_verb},
      {"bicrossed", bicrossed},
      {"check-manin", check_manin},
      {"double", double_verb},
      {"ybe", ybe_verb},
      {"ybe-operator-form", ybe_operator_form},
      {"lift", lift_verb},
      {"canonical-solution", canonical_solution},
      {"rota-baxter-corr", rota_baxter_corr},
      {"check-form", check_form},
      {"prelie-from-symplectic", prelie_from_symplectic_verb},
  };
  return t;
}

}  // namespace

std::string dense_text(const std::vector<std::size_t>& shape, std::span<const Rational> coeffs,
                       const std::vector<std::vector<std::string>>& axis_labels) {
  std::string out;
  for (std::size_t off = 0; off < coeffs.size(); ++off) {
    if (coeffs[off].is_zero()) continue;
    std::vector<std::size_t> idx(shape.size());
    std::size_t rest = off;
    for (std::size_t a = shape.size(); a-- > 0;) {
      idx[a] = rest % shape[a];
      rest /= shape[a];
    }
    std::string basis;
    for (std::size_t a = 0; a < idx.size(); ++a) basis += (a ? kTensor : "") + axis_labels[a][idx[a]];
    const std::string term = term_text(coeffs[off], basis);
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : table()) out.push_back(name);
    return out;
  }();
  return v;
}

bool is_verb(const std::string& verb) {
  for (const auto& v : verbs())
    if (v == verb) return true;
  return false;
}

Report run_command(const std::string& verb, const Bundle& b, const Options& o) {
  for (const auto& [name, handler] : table())
    if (name == verb) return handler(b, o);
  throw UnknownVerb("unknown verb '" + verb + "'");
}

}  // namespace mlb::cli
