#ifndef QSS_GATES_HPP_
#define QSS_GATES_HPP_

#include <span>

#include "qss/matrix.hpp"
#include "qss/types.hpp"

namespace qss {

// Element of the order-3 phase-shift group {U(0), U(2pi/3), U(4pi/3)},
// stored as ticks mod 3 (angle = ticks * 2pi/3). Composition of the
// unitaries is addition of ticks.
class PhaseAngle {
 public:
  PhaseAngle() = default;
  explicit PhaseAngle(int ticks) : ticks_(((ticks % 3) + 3) % 3) {}

  int ticks() const { return ticks_; }
  double radians() const;

  friend bool operator==(PhaseAngle, PhaseAngle) = default;

 private:
  int ticks_ = 0;
};

// The rotation [[cos a, sin a], [-sin a, cos a]].
Mat2 phase_unitary(PhaseAngle a);

// Sum of ticks mod 3; phase_unitary of the result equals the matrix product.
PhaseAngle compose_phase(std::span<const PhaseAngle> angles);

// The angle undoing a: compose_phase({a, inverse_phase(a)}) has 0 ticks.
PhaseAngle inverse_phase(PhaseAngle a);

// sigma00 = I, sigma01 = |0><1|+|1><0|, sigma10 = |0><0|-|1><1|,
// sigma11 = |0><1|-|1><0|.
Mat2 pauli_unitary(PauliLabel p);

// Label reached from the canonical `start` Bell state when pauli_unitary(p)
// acts on the given slot (global phase dropped; the Pauli set permutes the
// Bell basis).
BellLabel bell_under_pauli(BellLabel start, QubitSlot slot, PauliLabel p);

// The unique Pauli connecting a reference Bell state to a measured one on
// the first slot: bell_under_pauli(reference, First, result) == measured.
PauliLabel bell_compare(BellLabel measured, BellLabel reference);

// Inverts a second-slot encoding: bell_under_pauli(initial, Second, result)
// == final. Recovers Alice's operation from before/after Bell labels.
PauliLabel infer_pauli(BellLabel initial, BellLabel final_label);

// Whether both halves of the canonical Bell state give equal or opposite
// bits when measured in the given basis.
Correlation expected_correlation(BellLabel label, MeasBasis basis);

}  // namespace qss

#endif  // QSS_GATES_HPP_
