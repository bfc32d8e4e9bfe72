#include "qss/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qss/errors.hpp"

namespace qss {

namespace {

constexpr int kMaxQubits = 4;
constexpr double kNormTol = 1e-8;
constexpr double kUnitaryTol = 1e-10;
constexpr double kZeroMass = 1e-12;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Canonical Bell amplitudes over (first, second), index = first*2 + second.
constexpr int kBellSupport[4][2] = {{0, 3}, {0, 3}, {1, 2}, {1, 2}};
constexpr double kBellSign[4] = {+1.0, -1.0, +1.0, -1.0};

double bell_amp(BellLabel label, int basis_index) {
  const int l = static_cast<int>(label);
  if (basis_index == kBellSupport[l][0]) {
    return kInvSqrt2;
  }
  if (basis_index == kBellSupport[l][1]) {
    return kBellSign[l] * kInvSqrt2;
  }
  return 0.0;
}

void check_distinct(const std::vector<QubitId>& qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument("duplicate qubit id " + to_string(qubits[i]));
      }
    }
  }
}

// Basis vectors of the measurement bases; [bit][component].
complex_t basis_component(MeasBasis basis, int bit, int component) {
  if (basis == MeasBasis::Computational) {
    return bit == component ? complex_t{1, 0} : complex_t{0, 0};
  }
  // |+> = (|0>+|1>)/sqrt2, |-> = (|0>-|1>)/sqrt2
  if (bit == 1 && component == 1) {
    return {-kInvSqrt2, 0};
  }
  return {kInvSqrt2, 0};
}

}  // namespace

StateVector::StateVector(std::vector<QubitId> qubits, std::vector<complex_t> amplitudes)
    : qubits_(std::move(qubits)), amps_(std::move(amplitudes)) {
  if (qubits_.size() > kMaxQubits) {
    throw std::invalid_argument("register larger than 4 qubits");
  }
  check_distinct(qubits_);
  if (amps_.size() != (std::size_t{1} << qubits_.size())) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
  const double n = norm();
  if (std::abs(n - 1.0) > kNormTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

bool StateVector::contains(const QubitId& q) const {
  return std::find(qubits_.begin(), qubits_.end(), q) != qubits_.end();
}

double StateVector::norm() const {
  double s = 0.0;
  for (const complex_t& a : amps_) {
    s += std::norm(a);
  }
  return std::sqrt(s);
}

int StateVector::index_of(const QubitId& q) const {
  const auto it = std::find(qubits_.begin(), qubits_.end(), q);
  if (it == qubits_.end()) {
    throw std::invalid_argument("qubit " + to_string(q) + " not in state");
  }
  return static_cast<int>(it - qubits_.begin());
}

StateVector StateVector::reordered(const std::vector<QubitId>& order) const {
  if (order.size() != qubits_.size()) {
    throw std::invalid_argument("reorder: qubit count mismatch");
  }
  const int n = num_qubits();
  std::vector<int> src_pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    src_pos[i] = index_of(order[i]);  // throws if order is not a permutation
  }
  std::vector<complex_t> out(amps_.size());
  for (std::size_t f = 0; f < amps_.size(); ++f) {
    std::size_t g = 0;
    for (int i = 0; i < n; ++i) {
      const int bit = static_cast<int>((f >> (n - 1 - src_pos[static_cast<std::size_t>(i)])) & 1u);
      g |= static_cast<std::size_t>(bit) << (n - 1 - i);
    }
    out[g] = amps_[f];
  }
  return StateVector(order, std::move(out));
}

StateVector StateVector::canonicalized() const {
  std::vector<QubitId> order = qubits_;
  std::sort(order.begin(), order.end());
  return reordered(order);
}

StateVector make_bell(BellLabel label, const QubitId& q1, const QubitId& q2) {
  if (q1 == q2) {
    throw std::invalid_argument("make_bell: duplicate qubit id " + to_string(q1));
  }
  std::vector<complex_t> amps(4);
  for (int i = 0; i < 4; ++i) {
    amps[static_cast<std::size_t>(i)] = {bell_amp(label, i), 0};
  }
  return StateVector({q1, q2}, std::move(amps));
}

StateVector make_basis_state(const QubitId& q, MeasBasis basis, int bit) {
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("make_basis_state: bit must be 0 or 1");
  }
  std::vector<complex_t> amps(2);
  amps[0] = basis_component(basis, bit, 0);
  amps[1] = basis_component(basis, bit, 1);
  return StateVector({q}, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  for (const QubitId& q : b.qubits()) {
    if (a.contains(q)) {
      throw std::invalid_argument("tensor: qubit " + to_string(q) + " present in both factors");
    }
  }
  std::vector<QubitId> qubits = a.qubits();
  qubits.insert(qubits.end(), b.qubits().begin(), b.qubits().end());

  const std::size_t nb = b.amplitudes().size();
  std::vector<complex_t> amps(a.amplitudes().size() * nb);
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      amps[i * nb + j] = a.amplitudes()[i] * b.amplitudes()[j];
    }
  }
  return StateVector(std::move(qubits), std::move(amps));
}

StateVector apply_single(const StateVector& state, const Mat2& op, const QubitId& target) {
  if (op.unitarity_defect() > kUnitaryTol) {
    throw std::invalid_argument("apply_single: operator is not unitary");
  }
  const int n = state.num_qubits();
  const int pos = state.index_of(target);
  const std::size_t mask = std::size_t{1} << (n - 1 - pos);

  std::vector<complex_t> amps = state.amplitudes();
  for (std::size_t f = 0; f < amps.size(); ++f) {
    if (f & mask) {
      continue;
    }
    const complex_t a0 = amps[f];
    const complex_t a1 = amps[f | mask];
    amps[f] = op.m[0][0] * a0 + op.m[0][1] * a1;
    amps[f | mask] = op.m[1][0] * a0 + op.m[1][1] * a1;
  }
  return StateVector(state.qubits(), std::move(amps));
}

namespace {

// Remaining-qubit list and the contraction of <L|_{q1,q2} with the state,
// shared by measurement and decomposition.
struct BellContraction {
  std::vector<QubitId> remaining;
  // [label][remaining-index] -> unnormalized amplitude
  std::array<std::vector<complex_t>, 4> terms;
};

BellContraction contract_bell(const StateVector& state, const QubitId& q1, const QubitId& q2) {
  if (q1 == q2) {
    throw std::invalid_argument("bell pair qubits must be distinct");
  }
  const int n = state.num_qubits();
  const int p1 = state.index_of(q1);
  const int p2 = state.index_of(q2);

  BellContraction out;
  for (const QubitId& q : state.qubits()) {
    if (!(q == q1) && !(q == q2)) {
      out.remaining.push_back(q);
    }
  }
  const std::size_t rest_size = std::size_t{1} << out.remaining.size();
  for (auto& term : out.terms) {
    term.assign(rest_size, complex_t{0, 0});
  }

  // Bit positions of the remaining qubits, in their preserved order.
  std::vector<int> rest_pos;
  for (const QubitId& q : out.remaining) {
    rest_pos.push_back(state.index_of(q));
  }

  for (std::size_t f = 0; f < state.amplitudes().size(); ++f) {
    const int b1 = static_cast<int>((f >> (n - 1 - p1)) & 1u);
    const int b2 = static_cast<int>((f >> (n - 1 - p2)) & 1u);
    std::size_t j = 0;
    for (std::size_t i = 0; i < rest_pos.size(); ++i) {
      const std::size_t bit = (f >> (n - 1 - rest_pos[i])) & 1u;
      j |= bit << (rest_pos.size() - 1 - i);
    }
    const int pair_index = b1 * 2 + b2;
    for (int l = 0; l < 4; ++l) {
      const double w = bell_amp(static_cast<BellLabel>(l), pair_index);
      if (w != 0.0) {
        out.terms[static_cast<std::size_t>(l)][j] += w * state.amplitudes()[f];
      }
    }
  }
  return out;
}

double term_mass(const std::vector<complex_t>& term) {
  double s = 0.0;
  for (const complex_t& a : term) {
    s += std::norm(a);
  }
  return s;
}

StateVector normalized_residual(std::vector<QubitId> qubits, std::vector<complex_t> amps,
                                double mass) {
  if (qubits.empty()) {
    return StateVector({}, {complex_t{1, 0}});
  }
  const double scale = 1.0 / std::sqrt(mass);
  for (complex_t& a : amps) {
    a *= scale;
  }
  return StateVector(std::move(qubits), std::move(amps));
}

}  // namespace

std::pair<BellLabel, StateVector> bell_measure(const StateVector& state, const QubitId& q1,
                                               const QubitId& q2, RandomStream& rng) {
  BellContraction c = contract_bell(state, q1, q2);

  std::array<double, 4> prob{};
  double total = 0.0;
  for (int l = 0; l < 4; ++l) {
    prob[static_cast<std::size_t>(l)] = term_mass(c.terms[static_cast<std::size_t>(l)]);
    total += prob[static_cast<std::size_t>(l)];
  }
  if (total < kZeroMass) {
    throw InternalError("bell_measure: no probability mass (corrupted state)");
  }

  const double u = rng.next_double() * total;
  double acc = 0.0;
  int picked = 3;
  for (int l = 0; l < 4; ++l) {
    acc += prob[static_cast<std::size_t>(l)];
    if (u < acc) {
      picked = l;
      break;
    }
  }
  const auto pi = static_cast<std::size_t>(picked);
  return {static_cast<BellLabel>(picked),
          normalized_residual(std::move(c.remaining), std::move(c.terms[pi]), prob[pi])};
}

std::pair<int, StateVector> basis_measure(const StateVector& state, const QubitId& q,
                                          MeasBasis basis, RandomStream& rng) {
  const int n = state.num_qubits();
  const int p = state.index_of(q);

  std::vector<QubitId> remaining;
  std::vector<int> rest_pos;
  for (const QubitId& other : state.qubits()) {
    if (!(other == q)) {
      remaining.push_back(other);
      rest_pos.push_back(state.index_of(other));
    }
  }
  const std::size_t rest_size = std::size_t{1} << remaining.size();
  std::array<std::vector<complex_t>, 2> terms;
  terms[0].assign(rest_size, complex_t{0, 0});
  terms[1].assign(rest_size, complex_t{0, 0});

  for (std::size_t f = 0; f < state.amplitudes().size(); ++f) {
    const int b = static_cast<int>((f >> (n - 1 - p)) & 1u);
    std::size_t j = 0;
    for (std::size_t i = 0; i < rest_pos.size(); ++i) {
      const std::size_t bit = (f >> (n - 1 - rest_pos[i])) & 1u;
      j |= bit << (rest_pos.size() - 1 - i);
    }
    for (int bit = 0; bit < 2; ++bit) {
      const complex_t w = std::conj(basis_component(basis, bit, b));
      if (w != complex_t{0, 0}) {
        terms[static_cast<std::size_t>(bit)][j] += w * state.amplitudes()[f];
      }
    }
  }

  const double p0 = term_mass(terms[0]);
  const double p1 = term_mass(terms[1]);
  const double total = p0 + p1;
  if (total < kZeroMass) {
    throw InternalError("basis_measure: no probability mass (corrupted state)");
  }
  const int bit = (rng.next_double() * total < p0) ? 0 : 1;
  const double mass = bit == 0 ? p0 : p1;
  return {bit, normalized_residual(std::move(remaining),
                                   std::move(terms[static_cast<std::size_t>(bit)]), mass)};
}

StateVector BellDecomposition::residual_state(BellLabel label) const {
  const BellTerm& t = term(label);
  if (std::abs(t.coefficient) < kZeroMass) {
    throw std::invalid_argument("residual_state: outcome " + to_string(label) +
                                " has no probability mass");
  }
  return StateVector(remaining_qubits, t.residual_amplitudes);
}

BellDecomposition bell_decompose(const StateVector& state, const QubitId& q1, const QubitId& q2) {
  BellContraction c = contract_bell(state, q1, q2);
  BellDecomposition out;
  out.remaining_qubits = c.remaining;
  for (int l = 0; l < 4; ++l) {
    auto& term = c.terms[static_cast<std::size_t>(l)];
    const double mass = term_mass(term);
    BellTerm& bt = out.terms[static_cast<std::size_t>(l)];
    bt.residual_amplitudes.assign(term.size(), complex_t{0, 0});
    if (mass < kZeroMass * kZeroMass) {
      bt.coefficient = {0, 0};
      continue;
    }
    // Phase convention: residual's first nonzero amplitude is positive real.
    complex_t phase{1, 0};
    for (const complex_t& a : term) {
      if (std::abs(a) > 1e-12) {
        phase = a / std::abs(a);
        break;
      }
    }
    const double magnitude = std::sqrt(mass);
    bt.coefficient = magnitude * phase;
    for (std::size_t j = 0; j < term.size(); ++j) {
      bt.residual_amplitudes[j] = term[j] / bt.coefficient;
    }
  }
  return out;
}

StateVector reconstruct_from_bell(const BellDecomposition& decomposition, const QubitId& q1,
                                  const QubitId& q2) {
  const std::size_t rest_bits = decomposition.remaining_qubits.size();
  const std::size_t rest_size = std::size_t{1} << rest_bits;
  std::vector<complex_t> amps(4 * rest_size, complex_t{0, 0});
  for (int l = 0; l < 4; ++l) {
    const BellTerm& bt = decomposition.terms[static_cast<std::size_t>(l)];
    if (bt.coefficient == complex_t{0, 0}) {
      continue;
    }
    for (int pair = 0; pair < 4; ++pair) {
      const double w = bell_amp(static_cast<BellLabel>(l), pair);
      if (w == 0.0) {
        continue;
      }
      for (std::size_t j = 0; j < rest_size; ++j) {
        amps[(static_cast<std::size_t>(pair) << rest_bits) | j] +=
            bt.coefficient * w * bt.residual_amplitudes[j];
      }
    }
  }
  std::vector<QubitId> qubits{q1, q2};
  qubits.insert(qubits.end(), decomposition.remaining_qubits.begin(),
                decomposition.remaining_qubits.end());
  return StateVector(std::move(qubits), std::move(amps));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
  std::vector<QubitId> sa = a.qubits();
  std::vector<QubitId> sb = b.qubits();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    throw std::invalid_argument("equal_up_to_global_phase: qubit sets differ");
  }
  const StateVector ca = a.canonicalized();
  const StateVector cb = b.canonicalized();
  complex_t inner{0, 0};
  for (std::size_t i = 0; i < ca.amplitudes().size(); ++i) {
    inner += std::conj(ca.amplitudes()[i]) * cb.amplitudes()[i];
  }
  return std::abs(inner) >= 1.0 - tol;
}

}  // namespace qss
