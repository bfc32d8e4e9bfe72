#include "qss/protocol.hpp"

#include <algorithm>
#include <stdexcept>

#include "qss/errors.hpp"

namespace qss {

namespace {

QubitId t_qubit(int pos) { return {QubitRole::T, pos}; }
QubitId h_qubit(int pos) { return {QubitRole::H, pos}; }

std::string ticks_detail(int position, int ticks) {
  return "position=" + std::to_string(position) + " alpha=" + std::to_string(ticks) + "*2pi/3";
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::Original ? "original" : "improved"; }

void ProtocolConfig::validate() const {
  if (k < 1) {
    throw std::invalid_argument("k must be positive");
  }
  if (k1 < 1) {
    throw std::invalid_argument("k1 must be positive");
  }
  if (k1 >= k) {
    throw std::invalid_argument("k1 must be < k");
  }
  if (m < 0) {
    throw std::invalid_argument("m must be nonnegative");
  }
  if (variant == Variant::Original && m != 0) {
    throw std::invalid_argument("m must be 0 for the original variant");
  }
  if (variant == Variant::Improved && m >= k - k1) {
    throw std::invalid_argument("m must be < k - k1");
  }
}

int PhotonSequence::live_count() const {
  int n = 0;
  for (const auto& e : entries) {
    n += e.has_value() ? 1 : 0;
  }
  return n;
}

int RunReport::mismatch_count() const {
  int n = 0;
  for (const auto& v : precheck_verdicts) {
    n += v.match ? 0 : 1;
  }
  for (const auto& v : check_verdicts) {
    n += v.match ? 0 : 1;
  }
  return n;
}

// --- step-level operations --------------------------------------------------

Preparation alice_prepare(int k, const RandomStream& base) {
  Preparation prep;
  prep.labels.reserve(static_cast<std::size_t>(k));
  prep.states.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    RandomStream s = base.fork(static_cast<std::uint64_t>(Draw::InitialLabel),
                               static_cast<std::uint64_t>(PartyId::Alice),
                               static_cast<std::uint64_t>(i));
    const auto label = static_cast<BellLabel>(s.uniform_below(4));
    prep.labels.push_back(label);
    prep.states.push_back(make_bell(label, t_qubit(i), h_qubit(i)));
  }
  return prep;
}

void agent_apply(std::vector<Position>& positions, const PhotonSequence& seq,
                 std::span<const PhaseAngle> angles) {
  if (static_cast<int>(angles.size()) != seq.live_count()) {
    throw std::invalid_argument("agent_apply: angle count does not match live sequence length");
  }
  std::size_t j = 0;
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    if (!seq.entries[i].has_value()) {
      continue;
    }
    Position& p = positions[i];
    p.state = apply_single(p.state, phase_unitary(angles[j]), *seq.entries[i]);
    ++j;
  }
}

void alice_encode(std::vector<Position>& positions, const PhotonSequence& h_seq,
                  const Secret& secret) {
  if (secret.size() != positions.size()) {
    throw std::invalid_argument("alice_encode: secret length must equal position count");
  }
  for (std::size_t i = 0; i < h_seq.entries.size(); ++i) {
    if (!h_seq.entries[i].has_value()) {
      continue;
    }
    Position& p = positions[i];
    p.state = apply_single(p.state, pauli_unitary(secret[i]), *h_seq.entries[i]);
  }
}

std::vector<int> select_check_positions(std::span<const int> live_positions, int count,
                                        RandomStream& rng) {
  if (count > static_cast<int>(live_positions.size())) {
    throw std::invalid_argument("select_check_positions: fewer live positions than requested");
  }
  std::vector<int> picked_idx =
      rng.sample_without_replacement(static_cast<int>(live_positions.size()), count);
  std::vector<int> out;
  out.reserve(picked_idx.size());
  for (int idx : picked_idx) {
    out.push_back(live_positions[static_cast<std::size_t>(idx)]);
  }
  return out;
}

VerifyResult green_verify(const StateVector& state, const QubitId& t, const QubitId& h,
                          std::span<const PhaseAngle> published, BellLabel initial,
                          PauliLabel alice_pauli, RandomStream& rng) {
  const PhaseAngle reverse = inverse_phase(compose_phase(published));
  const StateVector reversed = apply_single(state, phase_unitary(reverse), t);
  auto [outcome, residual] = bell_measure(reversed, t, h, rng);
  VerifyResult result;
  result.outcome = outcome;
  result.match = outcome == bell_under_pauli(initial, QubitSlot::Second, alice_pauli);
  result.residual = std::move(residual);
  return result;
}

RecoveryResult recover_position(const StateVector& state, const QubitId& t, const QubitId& h,
                                std::span<const PhaseAngle> pooled, BellLabel initial,
                                RandomStream& rng) {
  const PhaseAngle reverse = inverse_phase(compose_phase(pooled));
  const StateVector reversed = apply_single(state, phase_unitary(reverse), t);
  auto [outcome, residual] = bell_measure(reversed, t, h, rng);
  RecoveryResult result;
  result.outcome = outcome;
  result.pauli = infer_pauli(initial, outcome);
  result.residual = std::move(residual);
  return result;
}

// --- engine -------------------------------------------------------------------

ProtocolRun::ProtocolRun(const ProtocolConfig& config, AdversaryStrategy& strategy)
    : config_(config), strategy_(strategy) {
  config_.validate();
  report_.config = config_;
  report_.scenario = std::string(strategy_.name());
}

RandomStream ProtocolRun::stream(Draw purpose, PartyId party, int position) const {
  return RandomStream(config_.seed)
      .fork(static_cast<std::uint64_t>(purpose), static_cast<std::uint64_t>(party),
            static_cast<std::uint64_t>(position));
}

Position& ProtocolRun::position(int index) { return positions_.at(static_cast<std::size_t>(index)); }

const Position& ProtocolRun::position(int index) const {
  return positions_.at(static_cast<std::size_t>(index));
}

void ProtocolRun::log(TranscriptMessage message) { report_.messages.push_back(std::move(message)); }

RunReport ProtocolRun::execute() {
  if (executed_) {
    throw ProtocolStateError("execute called twice on one ProtocolRun");
  }
  executed_ = true;

  prepare_pairs();
  transit_t_sequence();
  if (config_.variant == Variant::Improved) {
    run_precheck();
  }
  if (!report_.detected) {
    encode_and_send_h();
    run_final_check();
  }
  if (!report_.detected) {
    announce_and_recover();
  }
  finalize_report();
  return report_;
}

Secret ProtocolRun::recover_secret() const {
  if (!executed_) {
    throw ProtocolStateError("recover_secret before execute");
  }
  if (report_.detected) {
    throw ProtocolStateError("secret recovery requested after failed detection");
  }
  return report_.recovered_secret.value();
}

void ProtocolRun::prepare_pairs() {
  Preparation prep = alice_prepare(config_.k, RandomStream(config_.seed));
  report_.initial_labels = prep.labels;

  positions_.clear();
  positions_.reserve(static_cast<std::size_t>(config_.k));
  t_seq_.label = "T";
  h_seq_.label = "H";
  t_seq_.entries.assign(static_cast<std::size_t>(config_.k), std::nullopt);
  h_seq_.entries.assign(static_cast<std::size_t>(config_.k), std::nullopt);

  report_.alice_secret.resize(static_cast<std::size_t>(config_.k));
  for (auto& per_agent : report_.agent_angle_ticks) {
    per_agent.assign(static_cast<std::size_t>(config_.k), std::nullopt);
  }

  for (int i = 0; i < config_.k; ++i) {
    RandomStream s = stream(Draw::SecretPauli, PartyId::Alice, i);
    Position p;
    p.initial = prep.labels[static_cast<std::size_t>(i)];
    p.secret = static_cast<PauliLabel>(s.uniform_below(4));
    p.state = std::move(prep.states[static_cast<std::size_t>(i)]);
    report_.alice_secret[static_cast<std::size_t>(i)] = p.secret;
    positions_.push_back(std::move(p));
    t_seq_.entries[static_cast<std::size_t>(i)] = t_qubit(i);
    h_seq_.entries[static_cast<std::size_t>(i)] = h_qubit(i);
  }
}

void ProtocolRun::transit_t_sequence() {
  PartyId sender = PartyId::Alice;
  for (int a = 0; a < kNumAgents; ++a) {
    const PartyId agent = kAgents[a];
    log({sender, agent, false, "quantum-send",
         "T-sequence (" + std::to_string(t_seq_.live_count()) + " photons)"});
    strategy_.on_sequence_transit(*this, sender, agent, t_seq_);
    strategy_.on_receive_sequence(*this, agent, t_seq_);
    // Single-photon composition check on an ideal channel: a logged no-op.
    log({agent, agent, false, "single-photon-check", "pass (ideal lossless channel)"});

    std::vector<PhaseAngle> angles;
    for (std::size_t i = 0; i < t_seq_.entries.size(); ++i) {
      if (!t_seq_.entries[i].has_value()) {
        continue;
      }
      RandomStream s = stream(Draw::AgentAngle, agent, static_cast<int>(i));
      const int ticks = static_cast<int>(s.uniform_below(3));
      report_.agent_angle_ticks[static_cast<std::size_t>(a)][i] = ticks;
      angles.emplace_back(ticks);
    }
    agent_apply(positions_, t_seq_, angles);
    sender = agent;
  }
}

void ProtocolRun::run_precheck() {
  std::vector<int> live;
  for (int i = 0; i < config_.k; ++i) {
    if (positions_[static_cast<std::size_t>(i)].live) {
      live.push_back(i);
    }
  }
  RandomStream pos_stream = stream(Draw::PrecheckPositions, PartyId::Alice, 0);
  report_.precheck_positions = select_check_positions(live, config_.m, pos_stream);

  // Alice measures her selected H-sequence photons first, in random bases.
  std::vector<MeasBasis> bases;
  std::vector<int> h_bits;
  for (int pos : report_.precheck_positions) {
    RandomStream basis_stream = stream(Draw::PrecheckBasis, PartyId::Alice, pos);
    const auto basis = static_cast<MeasBasis>(basis_stream.uniform_below(2));
    RandomStream meas = stream(Draw::PrecheckAliceMeasure, PartyId::Alice, pos);
    Position& p = positions_[static_cast<std::size_t>(pos)];
    auto [bit, residual] = basis_measure(p.state, *h_seq_.entries[static_cast<std::size_t>(pos)],
                                         basis, meas);
    p.state = std::move(residual);
    h_seq_.entries[static_cast<std::size_t>(pos)] = std::nullopt;
    bases.push_back(basis);
    h_bits.push_back(bit);
  }

  std::string positions_detail = "positions:";
  for (int pos : report_.precheck_positions) {
    positions_detail += " " + std::to_string(pos);
  }
  log({PartyId::Alice, std::nullopt, false, "announce-precheck-positions", positions_detail});
  log({PartyId::Alice, PartyId::Zach, false, "request-partner-photons", positions_detail});

  strategy_.on_precheck_request(*this, report_.precheck_positions);

  for (std::size_t j = 0; j < report_.precheck_positions.size(); ++j) {
    const int pos = report_.precheck_positions[j];
    const auto& entry = t_seq_.entries[static_cast<std::size_t>(pos)];
    if (!entry.has_value()) {
      throw ProtocolAbort("zach failed to surrender the partner photon at position " +
                          std::to_string(pos));
    }
    const QubitId partner = *entry;
    log({PartyId::Zach, PartyId::Alice, false, "quantum-send",
         "partner photon, position " + std::to_string(pos)});

    // Agents publish their operations for this position in a random order.
    std::vector<std::pair<int, int>> published;  // (agent index, ticks)
    for (int a = 0; a < kNumAgents; ++a) {
      const auto& tick = report_.agent_angle_ticks[static_cast<std::size_t>(a)]
                                                  [static_cast<std::size_t>(pos)];
      if (tick.has_value()) {
        published.emplace_back(a, *tick);
      }
    }
    RandomStream shuffle = stream(Draw::PrecheckPublishShuffle, PartyId::Alice, pos);
    for (std::size_t i = published.size(); i > 1; --i) {
      const std::size_t pick = shuffle.uniform_below(i);
      std::swap(published[i - 1], published[pick]);
    }
    std::vector<PhaseAngle> multiset;
    for (const auto& [agent_idx, ticks] : published) {
      log({kAgents[agent_idx], std::nullopt, false, "angle-publish", ticks_detail(pos, ticks)});
      multiset.emplace_back(ticks);
    }

    Position& p = positions_[static_cast<std::size_t>(pos)];
    const PhaseAngle reverse = inverse_phase(compose_phase(multiset));
    p.state = apply_single(p.state, phase_unitary(reverse), partner);
    RandomStream meas = stream(Draw::PrecheckPartnerMeasure, PartyId::Alice, pos);
    auto [partner_bit, residual] = basis_measure(p.state, partner, bases[j], meas);
    p.state = std::move(residual);

    PrecheckVerdict verdict;
    verdict.position = pos;
    verdict.basis = bases[j];
    verdict.h_bit = h_bits[j];
    verdict.partner_bit = partner_bit;
    verdict.expected = expected_correlation(p.initial, bases[j]);
    const bool same = verdict.h_bit == verdict.partner_bit;
    verdict.match = (verdict.expected == Correlation::Same) ? same : !same;
    report_.precheck_verdicts.push_back(verdict);

    t_seq_.entries[static_cast<std::size_t>(pos)] = std::nullopt;
    p.live = false;
  }

  for (const auto& v : report_.precheck_verdicts) {
    if (!v.match) {
      report_.detected = true;
    }
  }
  if (report_.detected) {
    log({PartyId::Alice, std::nullopt, false, "abort", "eavesdropping detected at pre-check"});
  }
}

void ProtocolRun::encode_and_send_h() {
  alice_encode(positions_, h_seq_, report_.alice_secret);
  log({PartyId::Alice, PartyId::Zach, false, "quantum-send",
       "H-sequence (" + std::to_string(h_seq_.live_count()) + " photons)"});
  strategy_.on_sequence_transit(*this, PartyId::Alice, PartyId::Zach, h_seq_);
  strategy_.on_receive_sequence(*this, PartyId::Zach, h_seq_);
}

void ProtocolRun::run_final_check() {
  std::vector<int> live;
  for (int i = 0; i < config_.k; ++i) {
    if (positions_[static_cast<std::size_t>(i)].live) {
      live.push_back(i);
    }
  }
  RandomStream pos_stream = stream(Draw::CheckPositions, PartyId::Alice, 0);
  report_.check_positions = select_check_positions(live, config_.k1, pos_stream);

  std::string detail = "positions:";
  for (int pos : report_.check_positions) {
    detail += " " + std::to_string(pos);
  }
  log({PartyId::Alice, std::nullopt, false, "announce-check-positions", detail});

  strategy_.on_check_positions_announced(*this, report_.check_positions);

  log({PartyId::Zach, PartyId::Green, false, "quantum-send",
       "T-sequence (" + std::to_string(t_seq_.live_count()) + " photons)"});
  log({PartyId::Zach, PartyId::Green, false, "quantum-send",
       "H-sequence (" + std::to_string(h_seq_.live_count()) + " photons)"});

  for (int pos : report_.check_positions) {
    Position& p = positions_[static_cast<std::size_t>(pos)];
    const auto& t_entry = t_seq_.entries[static_cast<std::size_t>(pos)];
    const auto& h_entry = h_seq_.entries[static_cast<std::size_t>(pos)];
    if (!t_entry.has_value() || !h_entry.has_value()) {
      throw ProtocolAbort("missing photon at check position " + std::to_string(pos));
    }

    std::vector<PhaseAngle> multiset;
    for (int a = 0; a < kNumAgents; ++a) {
      const auto& tick = report_.agent_angle_ticks[static_cast<std::size_t>(a)]
                                                  [static_cast<std::size_t>(pos)];
      if (tick.has_value()) {
        log({kAgents[a], PartyId::Green, false, "angle-publish", ticks_detail(pos, *tick)});
        multiset.emplace_back(*tick);
      }
    }

    RandomStream meas = stream(Draw::FinalVerifyMeasure, PartyId::Green, pos);
    VerifyResult vr =
        green_verify(p.state, *t_entry, *h_entry, multiset, p.initial, p.secret, meas);
    p.state = std::move(vr.residual);
    log({PartyId::Green, PartyId::Alice, false, "outcome-report",
         "position=" + std::to_string(pos) + " outcome=" + to_string(vr.outcome)});

    CheckVerdict verdict;
    verdict.position = pos;
    verdict.expected = bell_under_pauli(p.initial, QubitSlot::Second, p.secret);
    verdict.outcome = vr.outcome;
    verdict.match = vr.match;
    report_.check_verdicts.push_back(verdict);

    t_seq_.entries[static_cast<std::size_t>(pos)] = std::nullopt;
    h_seq_.entries[static_cast<std::size_t>(pos)] = std::nullopt;
    p.live = false;
  }

  for (const auto& v : report_.check_verdicts) {
    if (!v.match) {
      report_.detected = true;
    }
  }
  if (report_.detected) {
    log({PartyId::Alice, std::nullopt, false, "abort", "eavesdropping detected at final check"});
  }
}

void ProtocolRun::announce_and_recover() {
  std::string detail = "labels:";
  for (BellLabel label : report_.initial_labels) {
    detail += " " + to_string(label);
  }
  log({PartyId::Alice, std::nullopt, false, "announce-initials", detail});
  strategy_.on_initials_announced(*this, report_.initial_labels);

  for (int i = 0; i < config_.k; ++i) {
    if (positions_[static_cast<std::size_t>(i)].live) {
      report_.message_positions.push_back(i);
    }
  }

  Secret recovered;
  int correct = 0;
  for (int pos : report_.message_positions) {
    Position& p = positions_[static_cast<std::size_t>(pos)];
    const auto& t_entry = t_seq_.entries[static_cast<std::size_t>(pos)];
    const auto& h_entry = h_seq_.entries[static_cast<std::size_t>(pos)];
    if (!t_entry.has_value() || !h_entry.has_value()) {
      throw ProtocolAbort("missing photon at message position " + std::to_string(pos));
    }

    std::vector<PhaseAngle> pooled;
    for (int a = 0; a < kNumAgents; ++a) {
      const auto& tick = report_.agent_angle_ticks[static_cast<std::size_t>(a)]
                                                  [static_cast<std::size_t>(pos)];
      if (tick.has_value()) {
        log({kAgents[a], PartyId::Green, false, "angle-publish", ticks_detail(pos, *tick)});
        pooled.emplace_back(*tick);
      }
    }

    RandomStream meas = stream(Draw::RecoveryMeasure, PartyId::Green, pos);
    RecoveryResult rr = recover_position(p.state, *t_entry, *h_entry, pooled, p.initial, meas);
    p.state = std::move(rr.residual);
    recovered.push_back(rr.pauli);
    if (rr.pauli == p.secret) {
      ++correct;
    }
    t_seq_.entries[static_cast<std::size_t>(pos)] = std::nullopt;
    h_seq_.entries[static_cast<std::size_t>(pos)] = std::nullopt;
  }
  report_.recovered_secret = std::move(recovered);
  report_.recovery_accuracy = report_.message_positions.empty()
                                  ? 1.0
                                  : static_cast<double>(correct) /
                                        static_cast<double>(report_.message_positions.size());
}

void ProtocolRun::finalize_report() {
  std::optional<Secret> adv = strategy_.adversary_secret(report_.message_positions);
  if (adv.has_value()) {
    log({PartyId::Zach, PartyId::Bob, true, "decode",
         "adversary reconstructed " + std::to_string(adv->size()) + " positions"});
    int correct = 0;
    for (std::size_t j = 0; j < report_.message_positions.size(); ++j) {
      const int pos = report_.message_positions[j];
      if ((*adv)[j] == positions_[static_cast<std::size_t>(pos)].secret) {
        ++correct;
      }
    }
    report_.adversary_accuracy =
        report_.message_positions.empty()
            ? 1.0
            : static_cast<double>(correct) / static_cast<double>(report_.message_positions.size());
    report_.adversary_secret = std::move(adv);
  }
}

RunReport run_scenario(const ProtocolConfig& config, AdversaryStrategy& strategy) {
  ProtocolRun run(config, strategy);
  return run.execute();
}

}  // namespace qss
