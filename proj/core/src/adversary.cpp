#include "qss/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "qss/errors.hpp"

namespace qss {

namespace {

QubitId fake_t(int pos) { return {QubitRole::Tp, pos}; }
QubitId fake_h(int pos) { return {QubitRole::Hp, pos}; }

}  // namespace

CollusionStrategy::CollusionStrategy(CollusionOptions options) : options_(options) {}

void CollusionStrategy::on_receive_sequence(ProtocolRun& run, PartyId receiver,
                                            PhotonSequence& seq) {
  if (receiver == PartyId::Bob && !substituted_) {
    bob_substitute(run, seq);
    substituted_ = true;
  }
}

void CollusionStrategy::bob_substitute(ProtocolRun& run, PhotonSequence& seq) {
  const int k = run.config().k;
  state_.captured_t.assign(static_cast<std::size_t>(k), std::nullopt);
  state_.swap_outcomes.assign(static_cast<std::size_t>(k), std::nullopt);
  state_.corrections.assign(static_cast<std::size_t>(k), std::nullopt);
  state_.read_outcomes.assign(static_cast<std::size_t>(k), std::nullopt);

  for (int pos = 0; pos < k; ++pos) {
    auto& entry = seq.entries[static_cast<std::size_t>(pos)];
    if (!entry.has_value()) {
      continue;
    }
    // Pocket the genuine photon, splice the |psi+> fake pair into the
    // position system, and put the fake t' where the sequence expects t.
    state_.captured_t[static_cast<std::size_t>(pos)] = *entry;
    Position& p = run.position(pos);
    p.state = tensor(p.state, make_bell(BellLabel::PsiPlus, fake_t(pos), fake_h(pos)));
    entry = fake_t(pos);
  }
  run.log({PartyId::Bob, PartyId::Zach, true, "covert-forward",
           "captured T-sequence (" + std::to_string(k) + " photons)"});
}

void CollusionStrategy::on_check_positions_announced(ProtocolRun& run,
                                                     std::span<const int> positions) {
  for (int pos : positions) {
    zach_swap_and_correct(run, pos);
  }
  for (int pos = 0; pos < run.config().k; ++pos) {
    if (!run.position(pos).live) {
      continue;
    }
    if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
      continue;
    }
    zach_read_message(run, pos);
  }
}

void CollusionStrategy::zach_swap_and_correct(ProtocolRun& run, int position) {
  const auto& captured = state_.captured_t[static_cast<std::size_t>(position)];
  const auto& h_entry = run.h_sequence().entries[static_cast<std::size_t>(position)];
  if (!captured.has_value() || !h_entry.has_value()) {
    throw InternalError("collusion: photon missing at check position " +
                        std::to_string(position));
  }
  Position& p = run.position(position);
  RandomStream rng = run.stream(Draw::AdversarySwap, PartyId::Zach, position);
  auto [outcome, residual] = bell_measure(p.state, *captured, fake_h(position), rng);
  state_.swap_outcomes[static_cast<std::size_t>(position)] = outcome;

  const PauliLabel correction = bell_compare(outcome, BellLabel::PsiPlus);
  state_.corrections[static_cast<std::size_t>(position)] = correction;
  if (options_.apply_corrections) {
    p.state = apply_single(residual, pauli_unitary(correction), *h_entry);
  } else {
    p.state = std::move(residual);
  }
  run.log({PartyId::Zach, PartyId::Bob, true, "swap-and-correct",
           "position=" + std::to_string(position) + " outcome=" + to_string(outcome) +
               " correction=" + to_string(correction)});
}

void CollusionStrategy::zach_read_message(ProtocolRun& run, int position) {
  const auto& captured = state_.captured_t[static_cast<std::size_t>(position)];
  const auto& h_entry = run.h_sequence().entries[static_cast<std::size_t>(position)];
  if (!captured.has_value() || !h_entry.has_value()) {
    throw InternalError("collusion: photon missing at message position " +
                        std::to_string(position));
  }
  Position& p = run.position(position);
  // (t, h1) is untouched except for Alice's encoding, so it sits in a Bell
  // eigenstate: the projective read is deterministic and non-demolishing.
  const BellDecomposition decomp = bell_decompose(p.state, *captured, *h_entry);
  std::optional<BellLabel> outcome;
  for (int l = 0; l < 4; ++l) {
    if (std::abs(decomp.terms[static_cast<std::size_t>(l)].coefficient) >= 1.0 - 1e-9) {
      outcome = static_cast<BellLabel>(l);
      break;
    }
  }
  if (!outcome.has_value()) {
    throw InternalError("collusion: message pair is not a Bell eigenstate at position " +
                        std::to_string(position));
  }
  state_.read_outcomes[static_cast<std::size_t>(position)] = *outcome;
  run.log({PartyId::Zach, PartyId::Bob, true, "message-read",
           "position=" + std::to_string(position) + " outcome=" + to_string(*outcome)});
}

void CollusionStrategy::on_precheck_request(ProtocolRun& run, std::span<const int> positions) {
  if (!options_.zach_returns_genuine) {
    return;  // surrender the travelled fakes, which the engine will take
  }
  for (int pos : positions) {
    auto& captured = state_.captured_t[static_cast<std::size_t>(pos)];
    if (captured.has_value()) {
      run.t_sequence().entries[static_cast<std::size_t>(pos)] = *captured;
      captured = std::nullopt;
      run.log({PartyId::Zach, PartyId::Bob, true, "covert-note",
               "returned genuine t at pre-check position " + std::to_string(pos)});
    }
  }
}

void CollusionStrategy::on_initials_announced(ProtocolRun&, std::span<const BellLabel> labels) {
  state_.announced_initials.assign(labels.begin(), labels.end());
}

std::optional<Secret> CollusionStrategy::adversary_secret(
    std::span<const int> message_positions) const {
  if (state_.announced_initials.empty()) {
    return std::nullopt;
  }
  Secret secret;
  secret.reserve(message_positions.size());
  for (int pos : message_positions) {
    const auto& outcome = state_.read_outcomes[static_cast<std::size_t>(pos)];
    if (!outcome.has_value()) {
      return std::nullopt;
    }
    secret.push_back(infer_pauli(state_.announced_initials[static_cast<std::size_t>(pos)],
                                 *outcome));
  }
  return secret;
}

void InterceptResendStrategy::on_sequence_transit(ProtocolRun& run, PartyId from, PartyId to,
                                                  PhotonSequence& seq) {
  if (from != PartyId::Alice || to != PartyId::Bob) {
    return;
  }
  observed_bits_.assign(seq.entries.size(), -1);
  for (int pos = 0; pos < static_cast<int>(seq.entries.size()); ++pos) {
    const auto& entry = seq.entries[static_cast<std::size_t>(pos)];
    if (!entry.has_value()) {
      continue;
    }
    Position& p = run.position(pos);
    RandomStream rng = run.stream(Draw::EveTap, PartyId::Bob, pos);
    auto [bit, residual] = basis_measure(p.state, *entry, MeasBasis::Computational, rng);
    // Forward a fresh photon prepared in the observed state.
    p.state = tensor(residual, make_basis_state(*entry, MeasBasis::Computational, bit));
    observed_bits_[static_cast<std::size_t>(pos)] = bit;
  }
}

}  // namespace qss
