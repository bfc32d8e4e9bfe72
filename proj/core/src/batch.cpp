#include "qss/batch.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qss/rng.hpp"
#include "qss/version.hpp"

namespace qss {

namespace {

constexpr std::uint64_t kTrialSplitLabel = 0x747269616c73ULL;  // "trials"

Variant scenario_variant(const ScenarioSpec& spec) {
  if (spec.scenario == Scenario::CollusionImproved || spec.config.m > 0) {
    return Variant::Improved;
  }
  return Variant::Original;
}

}  // namespace

std::string to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::Honest:
      return "honest";
    case Scenario::Collusion:
      return "collusion";
    case Scenario::CollusionImproved:
      return "collusion-improved";
    case Scenario::InterceptResend:
      return "intercept-resend";
  }
  return "?";
}

std::optional<Scenario> parse_scenario(const std::string& text) {
  for (int s = 0; s < 4; ++s) {
    const auto scenario = static_cast<Scenario>(s);
    if (to_string(scenario) == text) {
      return scenario;
    }
  }
  return std::nullopt;
}

void ScenarioSpec::validate() const {
  if (trials < 1) {
    throw std::invalid_argument("trials must be >= 1");
  }
  if (scenario == Scenario::CollusionImproved && config.m < 1) {
    throw std::invalid_argument("collusion-improved requires m >= 1");
  }
  ProtocolConfig effective = config;
  effective.variant = scenario_variant(*this);
  effective.validate();
}

std::unique_ptr<AdversaryStrategy> make_strategy(const ScenarioSpec& spec) {
  switch (spec.scenario) {
    case Scenario::Honest:
      return std::make_unique<HonestStrategy>();
    case Scenario::Collusion:
    case Scenario::CollusionImproved: {
      CollusionOptions options;
      options.zach_returns_genuine = spec.zach_returns_genuine;
      return std::make_unique<CollusionStrategy>(options);
    }
    case Scenario::InterceptResend:
      return std::make_unique<InterceptResendStrategy>();
  }
  throw std::invalid_argument("unknown scenario");
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index) {
  return RandomStream(master_seed)
      .fork(kTrialSplitLabel, static_cast<std::uint64_t>(trial_index))
      .origin_seed();
}

AggregateReport run_batch(const ScenarioSpec& spec) {
  spec.validate();

  AggregateReport out;
  out.spec = spec;
  out.tool_version = kToolVersion;
  out.trials.reserve(static_cast<std::size_t>(spec.trials));

  double mismatch_sum = 0.0;
  double recovery_sum = 0.0;
  double adversary_sum = 0.0;
  int detected_count = 0;
  int adversary_count = 0;

  for (int t = 0; t < spec.trials; ++t) {
    ProtocolConfig config = spec.config;
    config.variant = scenario_variant(spec);
    config.seed = trial_seed(spec.config.seed, t);

    std::unique_ptr<AdversaryStrategy> strategy = make_strategy(spec);
    const RunReport run = run_scenario(config, *strategy);

    TrialRecord record;
    record.detected = run.detected;
    record.mismatch_count = run.mismatch_count();
    record.recovery_accuracy = run.recovery_accuracy;
    record.adversary_accuracy = run.adversary_accuracy;
    out.trials.push_back(record);

    detected_count += run.detected ? 1 : 0;
    mismatch_sum += record.mismatch_count;
    recovery_sum += record.recovery_accuracy;
    if (record.adversary_accuracy.has_value()) {
      adversary_sum += *record.adversary_accuracy;
      ++adversary_count;
    }

    out.check_positions_total += static_cast<long>(run.check_verdicts.size());
    for (const auto& v : run.check_verdicts) {
      out.check_mismatch_total += v.match ? 0 : 1;
    }
    out.precheck_photons_total += static_cast<long>(run.precheck_verdicts.size());
    for (const auto& v : run.precheck_verdicts) {
      out.precheck_match_total += v.match ? 1 : 0;
    }
  }

  const auto n = static_cast<double>(spec.trials);
  out.detection_rate = static_cast<double>(detected_count) / n;
  out.mean_mismatch = mismatch_sum / n;
  out.mean_recovery_accuracy = recovery_sum / n;
  if (adversary_count > 0) {
    out.mean_adversary_accuracy = adversary_sum / adversary_count;
  }
  return out;
}

std::string format_fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

KvNode report_to_kvdoc(const AggregateReport& report) {
  KvNode root;
  KvNode& doc = root.add_branch("report");
  doc.add("tool_version", report.tool_version);
  doc.add("scenario", to_string(report.spec.scenario));

  KvNode& config = doc.add_branch("config");
  config.add("k", std::to_string(report.spec.config.k));
  config.add("k1", std::to_string(report.spec.config.k1));
  config.add("m", std::to_string(report.spec.config.m));
  config.add("variant", to_string(report.spec.scenario == Scenario::CollusionImproved ||
                                          report.spec.config.m > 0
                                      ? Variant::Improved
                                      : Variant::Original));
  config.add("seed", std::to_string(report.spec.config.seed));
  config.add("trials", std::to_string(report.spec.trials));
  if (report.spec.zach_returns_genuine) {
    config.add("zach_returns_genuine", "true");
  }

  KvNode& agg = doc.add_branch("aggregates");
  agg.add("detection_rate", format_fixed(report.detection_rate));
  agg.add("mean_mismatch", format_fixed(report.mean_mismatch));
  agg.add("mean_recovery_accuracy", format_fixed(report.mean_recovery_accuracy));
  if (report.mean_adversary_accuracy.has_value()) {
    agg.add("mean_adversary_accuracy", format_fixed(*report.mean_adversary_accuracy));
  }
  agg.add("check_positions", std::to_string(report.check_positions_total));
  agg.add("check_mismatches", std::to_string(report.check_mismatch_total));
  agg.add("precheck_photons", std::to_string(report.precheck_photons_total));
  agg.add("precheck_matches", std::to_string(report.precheck_match_total));

  KvNode& trials = doc.add_branch("trials");
  for (std::size_t i = 0; i < report.trials.size(); ++i) {
    const TrialRecord& record = report.trials[i];
    KvNode& trial = trials.add_branch("trial");
    trial.add("index", std::to_string(i));
    trial.add("detected", record.detected ? "true" : "false");
    trial.add("mismatch_count", std::to_string(record.mismatch_count));
    trial.add("recovery_accuracy", format_fixed(record.recovery_accuracy));
    if (record.adversary_accuracy.has_value()) {
      trial.add("adversary_accuracy", format_fixed(*record.adversary_accuracy));
    }
  }
  return root;
}

std::string csv_summary(const AggregateReport& report) {
  std::string out = "scenario,k,k1,m,trials,seed,detection_rate,mean_mismatch,adversary_accuracy\n";
  out += to_string(report.spec.scenario);
  out += ',' + std::to_string(report.spec.config.k);
  out += ',' + std::to_string(report.spec.config.k1);
  out += ',' + std::to_string(report.spec.config.m);
  out += ',' + std::to_string(report.spec.trials);
  out += ',' + std::to_string(report.spec.config.seed);
  out += ',' + format_fixed(report.detection_rate);
  out += ',' + format_fixed(report.mean_mismatch);
  out += ',';
  if (report.mean_adversary_accuracy.has_value()) {
    out += format_fixed(*report.mean_adversary_accuracy);
  }
  out += '\n';
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary | std::ios::trunc);
  if (!stream) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  stream << content;
  stream.flush();
  if (!stream) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

}  // namespace

void write_reports(const AggregateReport& report) {
  if (!report.spec.out_path.empty()) {
    write_file(report.spec.out_path, write_kvdoc(report_to_kvdoc(report)));
  }
  if (!report.spec.csv_path.empty()) {
    write_file(report.spec.csv_path, csv_summary(report));
  }
}

}  // namespace qss
