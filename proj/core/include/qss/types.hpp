#ifndef QSS_TYPES_HPP_
#define QSS_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <string>

namespace qss {

// Role a photon plays in the protocol: t/h are the halves of Alice's genuine
// Bell pairs, t'/h' the halves of the colluders' fake pairs.
enum class QubitRole : std::uint8_t { T = 0, H = 1, Tp = 2, Hp = 3 };

// A photon identity: role plus the protocol position it belongs to.
// Canonical ordering is (role, position); comparisons rely on it.
struct QubitId {
  QubitRole role = QubitRole::T;
  int position = 0;

  friend auto operator<=>(const QubitId&, const QubitId&) = default;
};

enum class BellLabel : std::uint8_t { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

// Alice's dense-coding operations sigma00..sigma11 (each carries 2 bits).
enum class PauliLabel : std::uint8_t { S00 = 0, S01 = 1, S10 = 2, S11 = 3 };

enum class MeasBasis : std::uint8_t { Computational = 0, Hadamard = 1 };

// Which member of a two-qubit pair an operator acts on.
enum class QubitSlot : std::uint8_t { First = 0, Second = 1 };

// Whether the two halves of a Bell pair give equal or opposite bits when
// both are measured in the same basis.
enum class Correlation : std::uint8_t { Same = 0, Opposite = 1 };

enum class PartyId : std::uint8_t { Alice = 0, Bob = 1, Charlie = 2, Green = 3, Zach = 4 };

inline constexpr int kNumAgents = 4;  // Bob, Charlie, Green, Zach

// Agents in T-sequence travel order; index is used for angle bookkeeping.
inline constexpr PartyId kAgents[kNumAgents] = {PartyId::Bob, PartyId::Charlie, PartyId::Green,
                                                PartyId::Zach};

std::string to_string(QubitRole role);
std::string to_string(const QubitId& id);
std::string to_string(BellLabel label);
std::string to_string(PauliLabel label);
std::string to_string(MeasBasis basis);
std::string to_string(Correlation c);
std::string to_string(PartyId party);

}  // namespace qss

#endif  // QSS_TYPES_HPP_
