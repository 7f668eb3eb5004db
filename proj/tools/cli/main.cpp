#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "genform/harness/commands.hpp"
#include "genform/harness/suites.hpp"

namespace {

using genform::Rational;
using genform::harness::json;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(flag, "not a rational: " + text);
  }
}

int emit(const json& report, const std::string& report_path) {
  const std::string text = report.dump(2);
  std::cout << text << '\n';
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << text << '\n';
  }
  return report.at("pass").get<bool>() ? kExitPass : kExitFailure;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GENFORM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("GENFORM_SEED", std::string("not an unsigned integer: ") + env);
    }
  }
  throw CLI::RequiredError("--seed (or GENFORM_SEED)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus of generalized differential forms"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "Also write the JSON report to this file");

  genform::harness::SuiteOptions suite;
  std::string suite_name = "all";
  std::optional<std::string> suite_eps;
  std::optional<std::uint64_t> seed;
  auto* identities = app.add_subcommand("identities", "Run the randomized identity suites");
  identities->add_option("--dim", suite.dim, "Dimension of the chart")->required()->check(CLI::Range(1, 8));
  identities->add_option("--epsilon", suite_eps, "dm as a rational; cycles through 0, 1, -1, 2, -2, 1/2 if omitted");
  identities->add_option("--trials", suite.trials, "Trials per identity")->required()->check(CLI::PositiveNumber);
  identities->add_option("--seed", seed, "Seed (falls back to GENFORM_SEED)");
  identities->add_option("--suite", suite_name, "Suite to run")
      ->check(CLI::IsMember({"all", "cartan", "gform", "gvector", "super", "connection"}));
  identities->add_option("--threads", suite.threads, "Worker threads (0 = hardware concurrency)");

  std::string osc_eps, osc_v0;
  genform::harness::OscillatorOptions osc;
  std::string osc_out;
  auto* oscillator = app.add_subcommand("oscillator", "Integrate the damped oscillator and compare with the closed form");
  oscillator->add_option("--epsilon", osc_eps, "dm as a rational")->required();
  oscillator->add_option("--v0", osc_v0, "v0 as a rational")->required();
  oscillator->add_option("--l", osc.l, "Degrees of freedom")->capture_default_str()->check(CLI::Range(1, 4));
  oscillator->add_option("--t-end", osc.t_end, "End time")->capture_default_str()->check(CLI::PositiveNumber);
  oscillator->add_option("--dt", osc.dt, "Step size")->capture_default_str()->check(CLI::PositiveNumber);
  oscillator->add_option("--out", osc_out, "CSV trajectory file");

  std::string fixture_path;
  auto* hamiltonian = app.add_subcommand("hamiltonian", "Build Hamiltonian fields from a fixture and check them");
  hamiltonian->add_option("--fixture", fixture_path, "Fixture JSON")->required();

  std::string thm_case;
  auto* connection = app.add_subcommand("connection-thm", "Metric connection construction from a fixture");
  connection->add_option("--fixture", fixture_path, "Fixture JSON")->required();
  connection->add_option("--case", thm_case, "i (epsilon = 0) or ii (epsilon != 0)")
      ->required()
      ->check(CLI::IsMember({"i", "ii"}));

  std::optional<std::string> cover_eps;
  auto* cover = app.add_subcommand("cover", "Validate and canonicalize a cover fixture");
  cover->add_option("--fixture", fixture_path, "Fixture JSON")->required();
  cover->add_option("--epsilon", cover_eps, "Target dm for a nonzero-theta cover");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (identities->parsed()) {
      suite.seed = resolve_seed(seed);
      if (suite_eps) suite.epsilon = parse_rational(*suite_eps, "--epsilon");
      const auto report = suite_name == "all" ? genform::harness::run_all_suites(suite)
                                              : genform::harness::run_suite(suite_name, suite);
      return emit(report.to_json(), report_path);
    }
    if (oscillator->parsed()) {
      osc.epsilon = parse_rational(osc_eps, "--epsilon");
      osc.v0 = parse_rational(osc_v0, "--v0");
      osc.out = osc_out;
      return emit(genform::harness::run_oscillator(osc), report_path);
    }
    const json fixture = genform::harness::load_json_file(fixture_path);
    if (hamiltonian->parsed()) return emit(genform::harness::run_hamiltonian(fixture), report_path);
    if (connection->parsed()) return emit(genform::harness::run_connection_theorem(fixture, thm_case), report_path);
    if (cover->parsed()) {
      std::optional<Rational> eps;
      if (cover_eps) eps = parse_rational(*cover_eps, "--epsilon");
      return emit(genform::harness::run_cover(fixture, eps), report_path);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const genform::harness::FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
