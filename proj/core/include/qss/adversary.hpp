#ifndef QSS_ADVERSARY_HPP_
#define QSS_ADVERSARY_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qss/protocol.hpp"

namespace qss {

// Fully honest behavior at every hook.
class HonestStrategy : public AdversaryStrategy {
 public:
  std::string_view name() const override { return "honest"; }
};

// Everything Bob and Zach accumulate during the collusion attack.
struct CollusionState {
  // Genuine T-sequence qubits Bob captured and covertly forwarded to Zach.
  std::vector<std::optional<QubitId>> captured_t;
  // Zach's Bell outcomes from swapping (t, h') at announced check positions.
  std::vector<std::optional<BellLabel>> swap_outcomes;
  // The first-slot Pauli each swap outcome dictates against the |psi+> fakes.
  std::vector<std::optional<PauliLabel>> corrections;
  // Zach's deterministic Bell reads of (t, h1) at message positions.
  std::vector<std::optional<BellLabel>> read_outcomes;
  std::vector<BellLabel> announced_initials;
};

struct CollusionOptions {
  // Improved-variant response to partner-photon requests: surrender the
  // travelled fake t' (default) or hand back the captured genuine t.
  bool zach_returns_genuine = false;
  // Disable to show what the final check sees without Zach's corrections.
  bool apply_corrections = true;
};

// The Bob-Zach joint attack: Bob substitutes |psi+> fake pairs for the
// T-sequence and covertly forwards the genuine photons to Zach; Zach swaps
// entanglement at the announced check positions, corrects Alice's h photons
// so Green's measurements match, reads the message pairs, and decodes once
// the initial states are announced.
class CollusionStrategy : public AdversaryStrategy {
 public:
  explicit CollusionStrategy(CollusionOptions options = {});

  std::string_view name() const override { return "collusion"; }
  void on_receive_sequence(ProtocolRun& run, PartyId receiver, PhotonSequence& seq) override;
  void on_check_positions_announced(ProtocolRun& run, std::span<const int> positions) override;
  void on_precheck_request(ProtocolRun& run, std::span<const int> positions) override;
  void on_initials_announced(ProtocolRun& run, std::span<const BellLabel> labels) override;
  std::optional<Secret> adversary_secret(std::span<const int> message_positions) const override;

  const CollusionState& state() const { return state_; }

 private:
  void bob_substitute(ProtocolRun& run, PhotonSequence& seq);
  void zach_swap_and_correct(ProtocolRun& run, int position);
  void zach_read_message(ProtocolRun& run, int position);

  CollusionOptions options_;
  CollusionState state_;
  bool substituted_ = false;
};

// Baseline channel attack: measures every T-sequence photon in the
// computational basis on the Alice->Bob link and forwards the collapsed
// photon. Validates that the final check catches naive tampering.
class InterceptResendStrategy : public AdversaryStrategy {
 public:
  std::string_view name() const override { return "intercept-resend"; }
  void on_sequence_transit(ProtocolRun& run, PartyId from, PartyId to,
                           PhotonSequence& seq) override;

  const std::vector<int>& observed_bits() const { return observed_bits_; }

 private:
  std::vector<int> observed_bits_;
};

}  // namespace qss

#endif  // QSS_ADVERSARY_HPP_
