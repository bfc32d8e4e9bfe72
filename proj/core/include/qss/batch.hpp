#ifndef QSS_BATCH_HPP_
#define QSS_BATCH_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qss/adversary.hpp"
#include "qss/kvdoc.hpp"
#include "qss/protocol.hpp"

namespace qss {

enum class Scenario : std::uint8_t {
  Honest = 0,
  Collusion = 1,
  CollusionImproved = 2,
  InterceptResend = 3,
};

std::string to_string(Scenario scenario);
std::optional<Scenario> parse_scenario(const std::string& text);

// A batch request: scenario, protocol parameters, trial count, outputs.
struct ScenarioSpec {
  Scenario scenario = Scenario::Honest;
  ProtocolConfig config;  // config.seed is the master seed
  int trials = 1;
  bool zach_returns_genuine = false;
  std::string out_path;  // structured report; empty = do not write
  std::string csv_path;  // summary row; empty = do not write

  // Throws std::invalid_argument with a one-line reason.
  void validate() const;
};

struct TrialRecord {
  bool detected = false;
  int mismatch_count = 0;
  double recovery_accuracy = 0.0;
  std::optional<double> adversary_accuracy;
};

// Batch outcome: per-trial records plus exact aggregates.
struct AggregateReport {
  ScenarioSpec spec;
  std::string tool_version;
  std::vector<TrialRecord> trials;

  double detection_rate = 0.0;
  double mean_mismatch = 0.0;
  double mean_recovery_accuracy = 0.0;
  // Mean over the trials that produced an adversary reconstruction.
  std::optional<double> mean_adversary_accuracy;

  // Photon-level counters across all trials.
  long check_positions_total = 0;
  long check_mismatch_total = 0;
  long precheck_photons_total = 0;
  long precheck_match_total = 0;
};

// Fresh strategy instance for one trial of the given scenario.
std::unique_ptr<AdversaryStrategy> make_strategy(const ScenarioSpec& spec);

// Sub-seed for one trial, a pure function of (master seed, trial index).
std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index);

// Runs spec.trials seeded executions and aggregates. Trial order is by
// index; results do not depend on scheduling.
AggregateReport run_batch(const ScenarioSpec& spec);

// Structured-report document for the batch outcome (stable key order,
// 6-fixed-decimal floats).
KvNode report_to_kvdoc(const AggregateReport& report);

// One-row summary:
// scenario,k,k1,m,trials,seed,detection_rate,mean_mismatch,adversary_accuracy
std::string csv_summary(const AggregateReport& report);

// Writes the structured report and/or CSV summary to the spec's paths.
// Throws std::runtime_error when a path cannot be written.
void write_reports(const AggregateReport& report);

// Fixed 6-decimal rendering used everywhere a float is serialized.
std::string format_fixed(double value);

}  // namespace qss

#endif  // QSS_BATCH_HPP_
