#include "commands.hpp"
#include "fixture_io.hpp"
#include "log.hpp"

#include "CLI11.hpp"
#include "torusdual/errors.hpp"

#include <iostream>

using namespace torusdual::cli;

int main(int argc, char** argv) {
  CLI::App app{"Tate cohomology and duality checks for algebraic tori over finite groups", "torusdual"};
  app.set_version_flag("--version", std::string(TORUSDUAL_VERSION));
  app.require_subcommand(1);
  std::string log_flag;
  app.add_option("--log-level", log_flag, "quiet, info or debug (overrides TORUSDUAL_LOG)");

  std::optional<std::string> json_path;
  bool no_timing = false;
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
  };

  std::string fixture, module = "Lhat", range_text = "-3..3";
  auto* tate = app.add_subcommand("tate", "tabulate Tate cohomology of a fixture module");
  tate->add_option("fixture", fixture, "built-in name or fixture file")->required();
  tate->add_option("--module,-m", module, "L, Lhat, C or CxLhat")->capture_default_str();
  tate->add_option("--range,-r", range_text, "degrees a..b")->capture_default_str();
  add_json(tate);

  std::vector<std::string> fixtures;
  std::string suite = "all";
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("fixtures", fixtures, "built-in names or fixture files")->required();
  verify->add_option("--suite,-s", suite, "tn, fox-vs-bar, five-term, diagram-a, theorem1, kernel or all")->capture_default_str();
  verify->add_option("--jobs,-j", jobs, "fixtures processed concurrently")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "omit elapsed times from the JSON report");
  add_json(verify);

  std::string cocycle;
  auto* duality = app.add_subcommand("duality", "evaluate Psi on a cocycle of W");
  duality->add_option("fixture", fixture, "built-in name or fixture file")->required();
  duality->add_option("--cocycle", cocycle, "JSON file with generator values")->required();
  add_json(duality);

  std::string matrix;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("file", matrix, "JSON file holding a row-major matrix")->required();
  add_json(snf);

  std::optional<std::string> out_path;
  auto* exp = app.add_subcommand("export", "write a fixture in the JSON schema");
  exp->add_option("fixture", fixture, "built-in name or fixture file")->required();
  exp->add_option("--output,-o", out_path, "destination (default stdout)");

  auto* list = app.add_subcommand("fixtures", "list built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    set_log_level(resolve_log_level(log_flag));
    const Output o{std::cout, json_path, !no_timing};
    if (*tate) return cmd_tate(fixture, module, parse_range(range_text), o);
    if (*verify) return cmd_verify(fixtures, suite, jobs, o);
    if (*duality) return cmd_duality(fixture, cocycle, o);
    if (*snf) return cmd_snf(matrix, o);
    if (*exp) return cmd_export(fixture, out_path, std::cout);
    if (*list) return cmd_fixtures(std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const torusdual::ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}
