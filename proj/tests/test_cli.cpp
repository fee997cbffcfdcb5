#include <sys/wait.h>

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

using namespace mlb;
using namespace mlb::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = MLB_FIXTURE_DIR;
const std::string kBinary = MLB_BINARY;

Bundle fixture(const std::string& name) { return load_bundle(kFixtures / name); }

std::vector<std::string> valid_fixtures() {
  return {"a2.json",
          "a2_bad_cobracket.json",
          "a2_bad_matched_pair.json",
          "a2_bad_rep.json",
          "a2_matched_pair.json",
          "a2_skew_cobracket.json",
          "a2_trivial_bialgebra.json",
          "a4.json",
          "a4_bad_cobracket.json",
          "a4_bialgebra.json",
          "abelian_3.json",
          "abelian_4_manin.json",
          "abelian_4_mixed_manin.json",
          "idempotent_1.json",
          "p2_prelie.json"};
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / ("mlb_cli_" + std::to_string(::getpid()) + ".out");
  const std::string cmd = "'" + kBinary + "' " + args + " > '" + out.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  fs::remove(out);
  return r;
}

std::string at(const std::string& name) { return "'" + (kFixtures / name).string() + "'"; }

Report report(const std::string& verb, const std::string& name, Options o = {}) {
  return run_command(verb, fixture(name), o);
}

const ReportCheck& check_named(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

}  // namespace

TEST(Bundle, RoundTripsEveryValidFixture) {
  for (const auto& name : valid_fixtures()) {
    SCOPED_TRACE(name);
    const Bundle b = fixture(name);
    const Json canon = bundle_to_json(b);
    EXPECT_EQ(parse_bundle(canon), b);
    EXPECT_EQ(bundle_to_json(parse_bundle(canon)).dump(), canon.dump());
  }
}

TEST(Bundle, RationalsAcceptIntegersAndFractions) {
  const Bundle b = load_bundle_text(
      R"({"algebra": {"dim": 2, "products": [{"i": 1, "j": 1, "k": 2, "c": "6/4"}]},
          "r_tensors": {"r": {"terms": [{"i": 1, "j": 2, "c": -2}]}}})");
  EXPECT_EQ(b.algebra->constants(0, 0, 1), Rational(3, 2));
  EXPECT_EQ(b.r_tensors.at("r")(0, 1), Rational(-2));
  const Json out = bundle_to_json(b);
  EXPECT_EQ(out["algebra"]["products"][0]["c"], "3/2");
  EXPECT_EQ(out["r_tensors"]["r"]["terms"][0]["c"], "-2");
}

TEST(Bundle, InputErrors) {
  EXPECT_THROW(load_bundle(kFixtures / "malformed.json"), ParseError);
  EXPECT_THROW(load_bundle(kFixtures / "missing.json"), ParseError);
  try {
    load_bundle(kFixtures / "empty.json");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("missing required section"), std::string::npos);
  }
  try {
    load_bundle(kFixtures / "a4_asymmetric.json");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(e1,e3)"), std::string::npos) << e.what();
  }
  try {
    load_bundle(kFixtures / "a4_bad_index.json");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("out of range 1..4"), std::string::npos) << e.what();
  }
  // duplicate record
  EXPECT_THROW(load_bundle_text(R"({"algebra": {"dim": 1, "products": [
      {"i": 1, "j": 1, "k": 1, "c": 1}, {"i": 1, "j": 1, "k": 1, "c": 2}]}})"),
               ValidationError);
  // unknown key
  EXPECT_THROW(load_bundle_text(R"({"algebra": {"dim": 1, "products": []}, "extra": 1})"), ValidationError);
  // bad rational
  EXPECT_THROW(load_bundle_text(R"({"algebra": {"dim": 1, "products": [{"i": 1, "j": 1, "k": 1, "c": "1/0"}]}})"),
               ValidationError);
}

TEST(Bundle, EntrySelection) {
  const Bundle b = fixture("a4.json");
  EXPECT_THROW(run_command("ybe", b, {}), ValidationError);
  Options o;
  o.r = "absent";
  EXPECT_THROW(run_command("ybe", b, o), ValidationError);
  o.r = "r_e2e4";
  EXPECT_TRUE(run_command("ybe", b, o).pass());
  EXPECT_THROW(run_command("frobnicate", b, {}), UnknownVerb);
  EXPECT_THROW(run_command("check-prelie", b, {}), ValidationError);
}

TEST(Commands, WorkedValues) {
  Options o;
  o.r = "r_e1e2";
  const Report ybe = report("ybe", "a4.json", o);
  EXPECT_FALSE(ybe.pass());
  EXPECT_EQ(check_named(ybe, "ybe").witness_text, "residual 3*e2⊗e2⊗e2");
  EXPECT_EQ(ybe.info["classification"], "coboundary-only");

  const Report cob = report("cobracket", "a4.json", o);
  EXPECT_TRUE(cob.pass());
  ASSERT_TRUE(cob.bundle);
  const Bundle emitted = parse_bundle(*cob.bundle);
  const auto& images = emitted.cobrackets.at("delta_r_e1e2");
  EXPECT_EQ(images[0](1, 1), Rational(2));
  EXPECT_EQ(images[2](1, 3), Rational(1));
  EXPECT_EQ(images[2](3, 1), Rational(1));

  const Report idem = report("check-algebra", "idempotent_1.json");
  EXPECT_FALSE(idem.pass());
  EXPECT_EQ(check_named(idem, "jacobi").witness_text, "at (e1,e1,e1): 3*e1");
}

TEST(Commands, FractionRendering) {
  const Bundle b = load_bundle_text(R"({"algebra": {"dim": 1, "products": [{"i": 1, "j": 1, "k": 1, "c": "1/2"}]}})");
  const Report r = run_command("check-algebra", b, {});
  EXPECT_EQ(check_named(r, "jacobi").witness_text, "at (e1,e1,e1): 3/4*e1");
  EXPECT_NE(emit(r, Format::text, false).find("3/4*e1"), std::string::npos);
  EXPECT_NE(emit(r, Format::json, false).find("\"3/4\""), std::string::npos);
}

TEST(Commands, DoubleEmitsABialgebraBundle) {
  for (const std::string name : {"a2_trivial_bialgebra.json", "a4_bialgebra.json"}) {
    SCOPED_TRACE(name);
    const Report d = report("double", name);
    ASSERT_TRUE(d.pass());
    ASSERT_TRUE(d.bundle);
    const Bundle b = parse_bundle(*d.bundle);
    EXPECT_EQ(parse_bundle(bundle_to_json(b)), b);
    Options o;
    o.r = "r";
    EXPECT_TRUE(run_command("ybe", b, o).pass());
    o = {};
    o.cobracket = "delta";
    EXPECT_TRUE(run_command("check-bialgebra", b, o).pass());
    o.form = "pairing";
    EXPECT_TRUE(run_command("check-manin", b, o).pass());
  }
}

TEST(Report, JsonRoundTrip) {
  Options o;
  o.r = "r_e1e2";
  for (const Report& r : {report("ybe", "a4.json", o), report("check-algebra", "idempotent_1.json"),
                          report("double", "a4_bialgebra.json"), report("check-bialgebra", "a4_bad_cobracket.json")}) {
    SCOPED_TRACE(r.command);
    const Json j = report_to_json(r);
    const Report back = parse_report(j);
    EXPECT_EQ(report_to_json(back).dump(), j.dump());
    EXPECT_EQ(back.pass(), r.pass());
    ASSERT_EQ(back.checks.size(), r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) EXPECT_EQ(back.checks[i].witness, r.checks[i].witness);
  }
  Json tampered = report_to_json(report("check-algebra", "idempotent_1.json"));
  tampered["verdict"] = "pass";
  EXPECT_THROW(parse_report(tampered), ParseError);
}

TEST(Binary, ExitCodes) {
  struct Case {
    std::string args;
    int code;
  };
  const std::vector<Case> table{
      {"check-algebra " + at("a4.json"), 0},
      {"check-algebra " + at("abelian_3.json"), 0},
      {"check-algebra " + at("idempotent_1.json"), 1},
      {"check-algebra " + at("a4_asymmetric.json"), 2},
      {"check-algebra " + at("a4_bad_index.json"), 2},
      {"check-algebra " + at("empty.json"), 2},
      {"check-algebra " + at("malformed.json"), 2},
      {"check-algebra " + at("missing.json"), 2},
      {"frobnicate " + at("a4.json"), 2},
      {"check-algebra " + at("a4.json") + " --format xml", 2},
      {"check-algebra " + at("a4.json") + " --emit /dev/null", 2},
      {"check-rep " + at("a4.json") + " --rep coadj", 0},
      {"check-rep " + at("a2_bad_rep.json"), 1},
      {"check-prelie " + at("p2_prelie.json"), 0},
      {"check-prelie " + at("idempotent_1.json"), 1},
      {"check-o-operator " + at("a4.json") + " --T T_annihilator", 0},
      {"check-o-operator " + at("a4.json") + " --T T_bad", 1},
      {"check-o-operator " + at("a4.json"), 2},
      {"semidirect " + at("a4.json") + " --rep coadj", 0},
      {"sub-adjacent " + at("p2_prelie.json"), 0},
      {"cobracket " + at("a4.json") + " --r r_e1e2", 0},
      {"check-bialgebra " + at("a4_bialgebra.json"), 0},
      {"check-bialgebra " + at("a4_bad_cobracket.json"), 1},
      {"check-bialgebra " + at("a2_skew_cobracket.json"), 1},
      {"check-bialgebra " + at("a2_bad_cobracket.json"), 1},
      {"check-matched-pair " + at("a2_matched_pair.json"), 0},
      {"check-matched-pair " + at("a2_bad_matched_pair.json"), 1},
      {"check-matched-pair " + at("a4_bialgebra.json"), 0},
      {"check-matched-pair " + at("a4_bad_cobracket.json"), 1},
      {"bicrossed " + at("a2_matched_pair.json"), 0},
      {"bicrossed " + at("a2_bad_matched_pair.json"), 1},
      {"check-manin " + at("abelian_4_manin.json"), 0},
      {"check-manin " + at("abelian_4_mixed_manin.json"), 1},
      {"check-manin " + at("a4_bialgebra.json"), 0},
      {"check-manin " + at("a4_bad_cobracket.json"), 1},
      {"double " + at("a4_bialgebra.json"), 0},
      {"double " + at("a2_trivial_bialgebra.json"), 0},
      {"double " + at("a4_bad_cobracket.json"), 1},
      {"ybe " + at("a4.json") + " --r r_e1e2", 1},
      {"ybe " + at("a4.json") + " --r r_e2e4", 0},
      {"ybe " + at("a4.json"), 2},
      {"ybe " + at("a4.json") + " --r nope", 2},
      {"ybe-operator-form " + at("a4.json") + " --r r_e2e4", 0},
      {"ybe-operator-form " + at("a4.json") + " --r r_e1e2", 1},
      {"ybe-operator-form " + at("a2.json") + " --r r_e2e2", 1},
      {"lift " + at("a4.json") + " --T T_annihilator", 0},
      {"lift " + at("a4.json") + " --T T_bad", 1},
      {"canonical-solution " + at("p2_prelie.json"), 0},
      {"rota-baxter-corr " + at("a4.json") + " --r r_e2e4 --form omega_inv", 0},
      {"rota-baxter-corr " + at("a4.json") + " --r r_e2e4 --form omega_symp", 1},
      {"check-form " + at("a4.json") + " --form omega_symp", 0},
      {"check-form " + at("a4.json") + " --form omega_inv", 0},
      {"check-form " + at("a4.json") + " --form omega_not_cyclic", 1},
      {"prelie-from-symplectic " + at("a4.json") + " --form omega_symp", 0},
      {"prelie-from-symplectic " + at("a4.json") + " --form omega_not_cyclic", 1},
  };
  for (const auto& c : table) EXPECT_EQ(run_cli(c.args).code, c.code) << c.args;
}

TEST(Binary, EveryVerbIsReachable) {
  for (const auto& v : verbs()) {
    const CliRun r = run_cli(v + " " + at("empty.json") + " --format json");
    EXPECT_EQ(r.code, 2) << v;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["command"], v);
    EXPECT_EQ(j["verdict"], "error");
    EXPECT_EQ(j["error"]["kind"], "ValidationError");
  }
}

TEST(Binary, DeterministicOutput) {
  const std::vector<std::string> runs{
      "double " + at("a4_bialgebra.json") + " --format json",
      "ybe " + at("a4.json") + " --r r_e1e2 --format json",
      "ybe " + at("a4.json") + " --r r_e1e2",
      "lift " + at("a4.json") + " --T T_bad --verbose",
      "check-manin " + at("a4_bad_cobracket.json") + " --format json",
  };
  for (const auto& args : runs) {
    const CliRun a = run_cli(args);
    const CliRun b = run_cli(args);
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Binary, JsonReportParses) {
  const CliRun r = run_cli("ybe " + at("a4.json") + " --r r_e1e2 --format json");
  ASSERT_EQ(r.code, 1);
  const Report back = parse_report(Json::parse(r.out));
  EXPECT_EQ(back.command, "ybe");
  EXPECT_FALSE(back.pass());
  EXPECT_EQ(back.checks.at(0).witness_text, "residual 3*e2⊗e2⊗e2");
}

TEST(Binary, EmittedBundleReloads) {
  const fs::path out = fs::temp_directory_path() / ("mlb_emit_" + std::to_string(::getpid()) + ".json");
  const CliRun r = run_cli("double " + at("a4_bialgebra.json") + " --emit '" + out.string() + "'");
  ASSERT_EQ(r.code, 0);
  const Bundle b = load_bundle(out);
  EXPECT_EQ(b.algebra->constants.dim(), 8u);
  const CliRun again = run_cli("check-bialgebra '" + out.string() + "' --cobracket delta");
  EXPECT_EQ(again.code, 0);
  fs::remove(out);
}
