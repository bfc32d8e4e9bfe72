#ifndef QSS_STATE_VECTOR_HPP_
#define QSS_STATE_VECTOR_HPP_

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "qss/matrix.hpp"
#include "qss/rng.hpp"
#include "qss/types.hpp"

namespace qss {

class StateVector;

// One term of a Bell-basis expansion: state = sum_L coefficient_L * |L> (x) residual_L.
// Residuals are normalized with their first nonzero amplitude positive real;
// the coefficient carries the leftover phase, so reconstruction is exact.
struct BellTerm {
  complex_t coefficient{0, 0};
  // Normalized residual over the remaining qubits; zero-filled when the
  // coefficient vanishes.
  std::vector<complex_t> residual_amplitudes;
};

struct BellDecomposition {
  // Qubits the residuals live on, in their order within the source state.
  std::vector<QubitId> remaining_qubits;
  std::array<BellTerm, 4> terms;  // indexed by BellLabel

  const BellTerm& term(BellLabel label) const {
    return terms[static_cast<std::size_t>(label)];
  }

  // Residual of one outcome as a normalized state; throws invalid_argument
  // when that outcome has no probability mass.
  StateVector residual_state(BellLabel label) const;
};

// Exact pure state over 1..4 labeled qubits. Amplitude index bits follow the
// qubit list order, first qubit most significant. All operations are pure:
// they return a new state and never mutate their input.
class StateVector {
 public:
  StateVector() = default;
  StateVector(std::vector<QubitId> qubits, std::vector<complex_t> amplitudes);

  const std::vector<QubitId>& qubits() const { return qubits_; }
  const std::vector<complex_t>& amplitudes() const { return amps_; }
  int num_qubits() const { return static_cast<int>(qubits_.size()); }

  bool contains(const QubitId& q) const;
  double norm() const;

  // Index of q within the qubit list; throws invalid_argument if absent.
  int index_of(const QubitId& q) const;

  // Same amplitudes re-expressed over the given qubit order (a permutation
  // of the current qubit list).
  StateVector reordered(const std::vector<QubitId>& order) const;

  // Qubits sorted by (role, position); the order cross-state comparisons use.
  StateVector canonicalized() const;

 private:
  std::vector<QubitId> qubits_;
  std::vector<complex_t> amps_;
};

// Canonical Bell state of (q1, q2): first nonzero amplitude positive real.
StateVector make_bell(BellLabel label, const QubitId& q1, const QubitId& q2);

// Single-qubit basis state |0>/|1> (Computational) or |+>/|-> (Hadamard).
StateVector make_basis_state(const QubitId& q, MeasBasis basis, int bit);

// Kronecker product; qubit lists are concatenated and must be disjoint.
StateVector tensor(const StateVector& a, const StateVector& b);

// Applies a 2x2 unitary to one qubit: (I (x) ... (x) op (x) ... (x) I)|state>.
StateVector apply_single(const StateVector& state, const Mat2& op, const QubitId& target);

// Born-rule Bell measurement of (q1, q2). Returns the sampled label and the
// renormalized post-measurement state of the remaining qubits (an empty
// zero-qubit state when none remain).
std::pair<BellLabel, StateVector> bell_measure(const StateVector& state, const QubitId& q1,
                                               const QubitId& q2, RandomStream& rng);

// Born-rule single-qubit measurement; bit 0 means |0>/|+>, bit 1 means |1>/|->.
std::pair<int, StateVector> basis_measure(const StateVector& state, const QubitId& q,
                                          MeasBasis basis, RandomStream& rng);

// Deterministic expansion over the Bell basis of (q1, q2). Reconstruction
// of the input from the four terms is exact.
BellDecomposition bell_decompose(const StateVector& state, const QubitId& q1, const QubitId& q2);

// Reassembles sum_L coefficient_L * |L>_{q1,q2} (x) residual_L over the
// qubit order (q1, q2, remaining...).
StateVector reconstruct_from_bell(const BellDecomposition& decomposition, const QubitId& q1,
                                  const QubitId& q2);

// True iff |<a|b>| >= 1 - tol after reordering both to canonical qubit order.
// The qubit sets must agree.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol);

}  // namespace qss

#endif  // QSS_STATE_VECTOR_HPP_
