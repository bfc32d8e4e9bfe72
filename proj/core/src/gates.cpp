#include "qss/gates.hpp"

#include <array>
#include <cmath>

#include "qss/errors.hpp"
#include "qss/state_vector.hpp"

namespace qss {

namespace {

constexpr double kTwoPiOverThree = 2.0 * 3.14159265358979323846 / 3.0;

// Transport tables are built once by brute force at the state level and
// then served as lookups.
struct Tables {
  // [start][slot][pauli] -> label
  BellLabel under_pauli[4][2][4];
  // [reference][measured] -> pauli
  PauliLabel compare[4][4];
  // [initial][final] -> pauli
  PauliLabel infer[4][4];
};

BellLabel classify_bell(const StateVector& state) {
  const QubitId q1 = state.qubits()[0];
  const QubitId q2 = state.qubits()[1];
  for (int l = 0; l < 4; ++l) {
    const auto label = static_cast<BellLabel>(l);
    if (equal_up_to_global_phase(state, make_bell(label, q1, q2), 1e-9)) {
      return label;
    }
  }
  throw InternalError("classify_bell: state is not a Bell state");
}

Tables build_tables() {
  Tables t{};
  const QubitId a{QubitRole::T, 0};
  const QubitId b{QubitRole::H, 0};
  for (int start = 0; start < 4; ++start) {
    for (int slot = 0; slot < 2; ++slot) {
      for (int p = 0; p < 4; ++p) {
        const StateVector in = make_bell(static_cast<BellLabel>(start), a, b);
        const QubitId target = slot == 0 ? a : b;
        const StateVector out =
            apply_single(in, pauli_unitary(static_cast<PauliLabel>(p)), target);
        t.under_pauli[start][slot][p] = classify_bell(out);
      }
    }
  }
  for (int ref = 0; ref < 4; ++ref) {
    for (int p = 0; p < 4; ++p) {
      const BellLabel measured = t.under_pauli[ref][0][p];
      t.compare[ref][static_cast<int>(measured)] = static_cast<PauliLabel>(p);
    }
  }
  for (int initial = 0; initial < 4; ++initial) {
    for (int p = 0; p < 4; ++p) {
      const BellLabel final_label = t.under_pauli[initial][1][p];
      t.infer[initial][static_cast<int>(final_label)] = static_cast<PauliLabel>(p);
    }
  }
  return t;
}

const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

}  // namespace

double PhaseAngle::radians() const { return ticks_ * kTwoPiOverThree; }

Mat2 phase_unitary(PhaseAngle a) {
  const double c = std::cos(a.radians());
  const double s = std::sin(a.radians());
  Mat2 u;
  u.m[0][0] = {c, 0};
  u.m[0][1] = {s, 0};
  u.m[1][0] = {-s, 0};
  u.m[1][1] = {c, 0};
  return u;
}

PhaseAngle compose_phase(std::span<const PhaseAngle> angles) {
  int ticks = 0;
  for (const PhaseAngle& a : angles) {
    ticks += a.ticks();
  }
  return PhaseAngle(ticks);
}

PhaseAngle inverse_phase(PhaseAngle a) { return PhaseAngle(3 - a.ticks()); }

Mat2 pauli_unitary(PauliLabel p) {
  Mat2 u;
  switch (p) {
    case PauliLabel::S00:
      u.m[0][0] = {1, 0};
      u.m[1][1] = {1, 0};
      break;
    case PauliLabel::S01:
      u.m[0][1] = {1, 0};
      u.m[1][0] = {1, 0};
      break;
    case PauliLabel::S10:
      u.m[0][0] = {1, 0};
      u.m[1][1] = {-1, 0};
      break;
    case PauliLabel::S11:
      u.m[0][1] = {1, 0};
      u.m[1][0] = {-1, 0};
      break;
  }
  return u;
}

BellLabel bell_under_pauli(BellLabel start, QubitSlot slot, PauliLabel p) {
  return tables().under_pauli[static_cast<int>(start)][static_cast<int>(slot)][static_cast<int>(p)];
}

PauliLabel bell_compare(BellLabel measured, BellLabel reference) {
  return tables().compare[static_cast<int>(reference)][static_cast<int>(measured)];
}

PauliLabel infer_pauli(BellLabel initial, BellLabel final_label) {
  return tables().infer[static_cast<int>(initial)][static_cast<int>(final_label)];
}

Correlation expected_correlation(BellLabel label, MeasBasis basis) {
  // phi+: same/same, phi-: same/opposite, psi+: opposite/same,
  // psi-: opposite/opposite.
  const bool psi = label == BellLabel::PsiPlus || label == BellLabel::PsiMinus;
  const bool minus = label == BellLabel::PhiMinus || label == BellLabel::PsiMinus;
  if (basis == MeasBasis::Computational) {
    return psi ? Correlation::Opposite : Correlation::Same;
  }
  return minus ? Correlation::Opposite : Correlation::Same;
}

}  // namespace qss
