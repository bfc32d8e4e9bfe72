// Command-line front end: runs batches of seeded protocol trials per
// scenario, writes structured and CSV reports, and exposes the numeric
// identity checks behind --verify-equations.
//
// Exit codes: 0 success, 1 configuration/usage error, 2 internal invariant
// violation.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qss/batch.hpp"
#include "qss/checks.hpp"
#include "qss/errors.hpp"
#include "qss/version.hpp"

namespace {

int run_verify_equations() {
  bool all_pass = true;
  for (const qss::CheckResult& check : qss::run_identity_checks()) {
    std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.name << ": " << check.detail
              << "\n";
    all_pass &= check.pass;
  }
  return all_pass ? 0 : 2;
}

int run_spec(const qss::ScenarioSpec& spec) {
  const qss::AggregateReport report = qss::run_batch(spec);
  qss::write_reports(report);

  std::cout << "scenario=" << qss::to_string(spec.scenario) << " trials=" << spec.trials
            << " seed=" << spec.config.seed << "\n";
  std::cout << "detection_rate=" << qss::format_fixed(report.detection_rate)
            << " mean_mismatch=" << qss::format_fixed(report.mean_mismatch)
            << " recovery=" << qss::format_fixed(report.mean_recovery_accuracy);
  if (report.mean_adversary_accuracy.has_value()) {
    std::cout << " adversary=" << qss::format_fixed(*report.mean_adversary_accuracy);
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Five-party quantum secret sharing simulator and attack harness"};
  app.set_version_flag("--version", std::string(qss::kToolVersion));

  std::string scenario_name;
  qss::ScenarioSpec spec;
  bool verify_equations = false;

  app.add_option("--scenario", scenario_name,
                 "one of: honest, collusion, collusion-improved, intercept-resend");
  app.add_option("--k", spec.config.k, "Bell pair count")->capture_default_str();
  app.add_option("--k1", spec.config.k1, "final check positions")->capture_default_str();
  app.add_option("--m", spec.config.m, "pre-check photon count (improved variant)")
      ->capture_default_str();
  app.add_option("--trials", spec.trials, "number of seeded trials")->capture_default_str();
  app.add_option("--seed", spec.config.seed, "master seed")->capture_default_str();
  app.add_option("--out", spec.out_path, "structured report path");
  app.add_option("--csv", spec.csv_path, "CSV summary path");
  app.add_flag("--verify-equations", verify_equations,
               "run the entanglement-swapping and correction identity checks");
  app.add_flag("--zach-returns-genuine", spec.zach_returns_genuine,
               "collusion variant: Zach surrenders the captured genuine photons at pre-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (verify_equations) {
      return run_verify_equations();
    }
    if (scenario_name.empty()) {
      std::cerr << "error: --scenario is required (or use --verify-equations)\n";
      return 1;
    }
    const auto scenario = qss::parse_scenario(scenario_name);
    if (!scenario.has_value()) {
      std::cerr << "error: unknown scenario '" << scenario_name << "'\n";
      return 1;
    }
    spec.scenario = *scenario;
    spec.validate();
    return run_spec(spec);
  } catch (const qss::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
