#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

constexpr int kInputError = 2;

std::string verb_list() {
  std::string out;
  for (const auto& v : mlb::cli::verbs()) out += (out.empty() ? "" : ", ") + v;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mlb::cli;

  CLI::App app{"Exact checks for mock-Lie algebras, bialgebras and Yang-Baxter solutions"};
  std::string verb;
  std::string path;
  std::string format_name = "text";
  std::string emit_path;
  bool verbose = false;
  Options opts;
  app.add_option("verb", verb, "one of: " + verb_list())->required();
  app.add_option("bundle", path, "bundle JSON file")->required();
  app.add_option("--r", opts.r, "r tensor name");
  app.add_option("--rep", opts.rep, "representation name (adjoint and coadjoint are built in)");
  app.add_option("--T", opts.t, "linear map name");
  app.add_option("--form", opts.form, "bilinear form name");
  app.add_option("--cobracket", opts.cobracket, "cobracket name");
  app.add_option("--format", format_name, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--emit", emit_path, "write the constructed bundle to FILE");
  app.add_flag("--verbose", verbose, "include the constructed bundle in text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  const Format format = format_name == "json" ? Format::json : Format::text;

  auto error = [&](const std::string& kind, const std::string& message) {
    const std::string text = emit_error(verb, kind, message, format);
    (format == Format::json ? std::cout : std::cerr) << text;
    return kInputError;
  };

  if (!is_verb(verb)) return error("UnknownVerb", "unknown verb '" + verb + "'; expected one of: " + verb_list());

  Report report;
  try {
    report = run_command(verb, load_bundle(path), opts);
  } catch (const ParseError& e) {
    return error("ParseError", e.what());
  } catch (const ValidationError& e) {
    return error("ValidationError", e.what());
  } catch (const mlb::Error& e) {
    return error("InputError", e.what());
  }

  if (!emit_path.empty()) {
    if (!report.bundle) return error("UsageError", "verb '" + verb + "' constructs no bundle to emit");
    std::ofstream out(emit_path, std::ios::binary);
    if (!out) return error("UsageError", "cannot write " + emit_path);
    out << report.bundle->dump(2) << "\n";
  }
  std::cout << emit(report, format, verbose);
  return exit_code(report);
}
