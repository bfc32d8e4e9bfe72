#ifndef QSS_PROTOCOL_HPP_
#define QSS_PROTOCOL_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qss/gates.hpp"
#include "qss/rng.hpp"
#include "qss/state_vector.hpp"
#include "qss/types.hpp"

namespace qss {

enum class Variant : std::uint8_t { Original = 0, Improved = 1 };

std::string to_string(Variant v);

// Parameters of one protocol run. k Bell pairs, k1 final check positions,
// m pre-check photons (improved variant only; 0 reduces to the original
// step order). Message capacity is 2*(k - k1 - m) bits.
struct ProtocolConfig {
  int k = 32;
  int k1 = 8;
  int m = 0;
  Variant variant = Variant::Original;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument with a one-line reason on bad parameters.
  void validate() const;
};

// Alice's secret: one dense-coding operation per position.
using Secret = std::vector<PauliLabel>;

// A photon sequence as a party sees it: per position, the qubit standing in
// for that sequence member, or nothing once consumed/surrendered. Dishonest
// parties may swap entries; honest parties just operate on what is there.
struct PhotonSequence {
  std::string label;
  std::vector<std::optional<QubitId>> entries;

  int live_count() const;
};

struct TranscriptMessage {
  PartyId from = PartyId::Alice;
  std::optional<PartyId> to;  // nullopt = public broadcast
  bool covert = false;        // Bob<->Zach side channel, invisible to honest logic
  std::string kind;
  std::string detail;
};

// Verdict of one final-check position: Green's Bell outcome against the
// label Alice expects from her initial state and her encoding.
struct CheckVerdict {
  int position = 0;
  BellLabel expected = BellLabel::PhiPlus;
  BellLabel outcome = BellLabel::PhiPlus;
  bool match = false;
};

// Verdict of one improved-protocol pre-check photon.
struct PrecheckVerdict {
  int position = 0;
  MeasBasis basis = MeasBasis::Computational;
  int h_bit = 0;
  int partner_bit = 0;
  Correlation expected = Correlation::Same;
  bool match = false;
};

// Complete record of one protocol execution.
struct RunReport {
  ProtocolConfig config;
  std::string scenario;

  std::vector<BellLabel> initial_labels;  // per position
  Secret alice_secret;                    // per position
  // Phase ticks applied per agent (kAgents order) per position; empty when
  // the position was consumed before that agent's round.
  std::array<std::vector<std::optional<int>>, kNumAgents> agent_angle_ticks;

  std::vector<int> precheck_positions;
  std::vector<PrecheckVerdict> precheck_verdicts;
  std::vector<int> check_positions;
  std::vector<CheckVerdict> check_verdicts;
  bool detected = false;

  std::vector<int> message_positions;
  std::optional<Secret> recovered_secret;   // aligned with message_positions
  std::optional<Secret> adversary_secret;   // aligned with message_positions
  double recovery_accuracy = 0.0;
  std::optional<double> adversary_accuracy;

  std::vector<TranscriptMessage> messages;

  int mismatch_count() const;
};

class ProtocolRun;

// Party-behavior overrides. The default implementation is fully honest; a
// strategy overrides only the hooks where a party deviates. Hooks receive
// classical data exclusively through announcements already in the message
// log plus the strategy's own holdings.
class AdversaryStrategy {
 public:
  virtual ~AdversaryStrategy() = default;

  virtual std::string_view name() const { return "honest"; }

  // A photon sequence arrived at `receiver`.
  virtual void on_receive_sequence(ProtocolRun&, PartyId receiver, PhotonSequence&) {}

  // A photon sequence is in transit on the from->to quantum channel.
  virtual void on_sequence_transit(ProtocolRun&, PartyId from, PartyId to, PhotonSequence&) {}

  // Alice broadcast the final-check positions.
  virtual void on_check_positions_announced(ProtocolRun&, std::span<const int>) {}

  // Alice asked Zach for the pre-check partner photons (improved variant);
  // called before the engine surrenders the T-sequence entries.
  virtual void on_precheck_request(ProtocolRun&, std::span<const int>) {}

  // Alice broadcast the initial Bell labels (only after a passed check).
  virtual void on_initials_announced(ProtocolRun&, std::span<const BellLabel>) {}

  // The adversary's reconstruction of the secret at the message positions,
  // if the strategy has one.
  virtual std::optional<Secret> adversary_secret(std::span<const int>) const {
    return std::nullopt;
  }
};

// Labels for deterministic sub-stream derivation; one label triple per draw
// site so replays are bit-identical regardless of evaluation order.
enum class Draw : std::uint64_t {
  InitialLabel = 1,
  SecretPauli,
  AgentAngle,
  CheckPositions,
  PrecheckPositions,
  PrecheckBasis,
  PrecheckAliceMeasure,
  PrecheckPartnerMeasure,
  PrecheckPublishShuffle,
  FinalVerifyMeasure,
  RecoveryMeasure,
  AdversarySwap,
  EveTap,
};

// State of one protocol position: the initial label, Alice's encoding and
// the joint quantum state of every photon still unmeasured there.
struct Position {
  BellLabel initial = BellLabel::PhiPlus;
  PauliLabel secret = PauliLabel::S00;
  StateVector state;
  bool live = true;  // false once spent on a check
};

// Executes the five-party protocol (original or improved step order) over
// honest behaviors except where the strategy overrides a hook.
class ProtocolRun {
 public:
  ProtocolRun(const ProtocolConfig& config, AdversaryStrategy& strategy);

  // Runs the full choreography once and returns the complete report.
  RunReport execute();

  // The honest collaboration's recovered secret; only valid after execute()
  // on a run whose detection verdict passed.
  Secret recover_secret() const;

  const ProtocolConfig& config() const { return config_; }
  Position& position(int index);
  const Position& position(int index) const;
  PhotonSequence& t_sequence() { return t_seq_; }
  PhotonSequence& h_sequence() { return h_seq_; }
  RunReport& report() { return report_; }

  // Independent per-site random stream, a pure function of the run seed.
  RandomStream stream(Draw purpose, PartyId party, int position) const;

  void log(TranscriptMessage message);

 private:
  void prepare_pairs();
  void transit_t_sequence();
  void run_precheck();
  void encode_and_send_h();
  void run_final_check();
  void announce_and_recover();
  void finalize_report();

  ProtocolConfig config_;
  AdversaryStrategy& strategy_;
  std::vector<Position> positions_;
  PhotonSequence t_seq_;
  PhotonSequence h_seq_;
  RunReport report_;
  bool executed_ = false;
};

// Convenience wrapper: one full execution.
RunReport run_scenario(const ProtocolConfig& config, AdversaryStrategy& strategy);

// --- Step-level operations (used by the engine, exposed for tests) ---------

// Draws k uniformly random Bell labels and the matching (t_i, h_i) states.
struct Preparation {
  std::vector<BellLabel> labels;
  std::vector<StateVector> states;
};
Preparation alice_prepare(int k, const RandomStream& base);

// Applies phase_unitary(angles[j]) to the j-th live entry of seq. The angle
// list length must equal the live entry count.
void agent_apply(std::vector<Position>& positions, const PhotonSequence& seq,
                 std::span<const PhaseAngle> angles);

// Applies pauli_unitary(secret[i]) to every live H-sequence entry.
void alice_encode(std::vector<Position>& positions, const PhotonSequence& h_seq,
                  const Secret& secret);

// Uniform sample of `count` positions from the live set, ascending.
std::vector<int> select_check_positions(std::span<const int> live_positions, int count,
                                        RandomStream& rng);

// One final-check position: reverse compound operation on t, Bell-measure
// (t, h), compare against the label Alice expects.
struct VerifyResult {
  BellLabel outcome = BellLabel::PhiPlus;
  bool match = false;
  StateVector residual;
};
VerifyResult green_verify(const StateVector& state, const QubitId& t, const QubitId& h,
                          std::span<const PhaseAngle> published, BellLabel initial,
                          PauliLabel alice_pauli, RandomStream& rng);

// One message position of the recovery step: reverse compound operation on
// t, Bell-measure (t, h), infer Alice's operation from the label pair.
struct RecoveryResult {
  BellLabel outcome = BellLabel::PhiPlus;
  PauliLabel pauli = PauliLabel::S00;
  StateVector residual;
};
RecoveryResult recover_position(const StateVector& state, const QubitId& t, const QubitId& h,
                                std::span<const PhaseAngle> pooled, BellLabel initial,
                                RandomStream& rng);

}  // namespace qss

#endif  // QSS_PROTOCOL_HPP_
