#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "qss/errors.hpp"
#include "qss/gates.hpp"
#include "qss/state_vector.hpp"
#include "test_util.hpp"

using namespace qss;
using qss::testing::random_state;
using qss::testing::random_unitary;
using qss::testing::within_3_sigma;

namespace {

const QubitId kT{QubitRole::T, 0};
const QubitId kH{QubitRole::H, 0};
const QubitId kTp{QubitRole::Tp, 0};
const QubitId kHp{QubitRole::Hp, 0};

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool amps_close(const StateVector& s, const std::vector<complex_t>& want, double tol = 1e-12) {
  if (s.amplitudes().size() != want.size()) {
    return false;
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (std::abs(s.amplitudes()[i] - want[i]) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("make_bell canonical amplitudes") {
  CHECK(amps_close(make_bell(BellLabel::PhiPlus, kT, kH), {kInvSqrt2, 0, 0, kInvSqrt2}));
  CHECK(amps_close(make_bell(BellLabel::PhiMinus, kT, kH), {kInvSqrt2, 0, 0, -kInvSqrt2}));
  CHECK(amps_close(make_bell(BellLabel::PsiMinus, kT, kH), {0, kInvSqrt2, -kInvSqrt2, 0}));
  // The colluders' fake pairs are |psi+> on (t', h').
  CHECK(amps_close(make_bell(BellLabel::PsiPlus, kTp, kHp), {0, kInvSqrt2, kInvSqrt2, 0}));
  CHECK_THROWS_AS(make_bell(BellLabel::PhiPlus, kT, kT), std::invalid_argument);
}

TEST_CASE("tensor concatenates qubits and multiplies amplitudes") {
  const StateVector zero = make_basis_state(kT, MeasBasis::Computational, 0);
  const StateVector one = make_basis_state(kH, MeasBasis::Computational, 1);
  const StateVector joint = tensor(zero, one);
  CHECK(joint.qubits() == std::vector<QubitId>{kT, kH});
  CHECK(amps_close(joint, {0, 1, 0, 0}));

  const StateVector pairs =
      tensor(make_bell(BellLabel::PhiPlus, kT, kH), make_bell(BellLabel::PsiPlus, kTp, kHp));
  CHECK(pairs.num_qubits() == 4);
  CHECK(pairs.norm() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(tensor(zero, make_basis_state(kT, MeasBasis::Computational, 1)),
                  std::invalid_argument);
}

TEST_CASE("apply_single basics and the sign identity behind the attack") {
  const StateVector zero = make_basis_state(kT, MeasBasis::Computational, 0);
  CHECK(amps_close(apply_single(zero, Mat2::identity(), kT), {1, 0}));

  // Z on t maps |psi+> to |psi->.
  const StateVector z_flipped =
      apply_single(make_bell(BellLabel::PsiPlus, kT, kH), pauli_unitary(PauliLabel::S10), kT);
  CHECK(equal_up_to_global_phase(z_flipped, make_bell(BellLabel::PsiMinus, kT, kH), 1e-12));

  // s10 after U(2pi/3)-on-t of |phi+> equals U(2pi/3)-on-t of |phi->,
  // exactly: the operators act on different qubits and commute.
  StateVector attack = make_bell(BellLabel::PhiPlus, kT, kH);
  attack = apply_single(attack, phase_unitary(PhaseAngle(1)), kT);
  attack = apply_single(attack, pauli_unitary(PauliLabel::S10), kH);
  const StateVector reference =
      apply_single(make_bell(BellLabel::PhiMinus, kT, kH), phase_unitary(PhaseAngle(1)), kT);
  CHECK(equal_up_to_global_phase(attack, reference, 1e-12));

  CHECK_THROWS_AS(apply_single(zero, Mat2::identity(), kH), std::invalid_argument);
  Mat2 not_unitary;
  not_unitary.m[0][0] = {2, 0};
  CHECK_THROWS_AS(apply_single(zero, not_unitary, kT), std::invalid_argument);
}

TEST_CASE("bell_measure on an eigenstate is deterministic") {
  RandomStream rng(3);
  for (int i = 0; i < 16; ++i) {
    auto [label, rest] = bell_measure(make_bell(BellLabel::PhiMinus, kT, kH), kT, kH, rng);
    CHECK(label == BellLabel::PhiMinus);
    CHECK(rest.num_qubits() == 0);
  }
}

TEST_CASE("bell_measure of |0101> over (t, h') gives psi+/psi- evenly") {
  // The (t, h') pair of |0101>_{t,h,t',h'} is |01> = (|psi+> + |psi->)/sqrt2.
  StateVector state = tensor(tensor(make_basis_state(kT, MeasBasis::Computational, 0),
                                    make_basis_state(kH, MeasBasis::Computational, 1)),
                             tensor(make_basis_state(kTp, MeasBasis::Computational, 0),
                                    make_basis_state(kHp, MeasBasis::Computational, 1)));
  const BellDecomposition decomp = bell_decompose(state, kT, kHp);
  CHECK(std::abs(decomp.term(BellLabel::PsiPlus).coefficient) ==
        doctest::Approx(kInvSqrt2).epsilon(1e-12));
  CHECK(std::abs(decomp.term(BellLabel::PsiMinus).coefficient) ==
        doctest::Approx(kInvSqrt2).epsilon(1e-12));
  CHECK(std::abs(decomp.term(BellLabel::PhiPlus).coefficient) < 1e-12);
  CHECK(std::abs(decomp.term(BellLabel::PhiMinus).coefficient) < 1e-12);

  RandomStream rng(11);
  std::map<BellLabel, int> counts;
  for (int i = 0; i < 4000; ++i) {
    auto [label, rest] = bell_measure(state, kT, kHp, rng);
    ++counts[label];
    CHECK(rest.num_qubits() == 2);
  }
  CHECK(counts.count(BellLabel::PhiPlus) == 0);
  CHECK(counts.count(BellLabel::PhiMinus) == 0);
  CHECK(within_3_sigma(counts[BellLabel::PsiPlus], 4000, 0.5));
}

TEST_CASE("basis_measure eigenstates and superpositions") {
  RandomStream rng(5);
  auto [bit0, rest0] = basis_measure(make_basis_state(kT, MeasBasis::Computational, 0), kT,
                                     MeasBasis::Computational, rng);
  CHECK(bit0 == 0);
  CHECK(rest0.num_qubits() == 0);

  auto [bitp, restp] =
      basis_measure(make_basis_state(kT, MeasBasis::Hadamard, 0), kT, MeasBasis::Hadamard, rng);
  CHECK(bitp == 0);

  // h of |phi+> is maximally mixed: bits split evenly.
  long ones = 0;
  for (int i = 0; i < 10000; ++i) {
    auto [bit, rest] =
        basis_measure(make_bell(BellLabel::PhiPlus, kT, kH), kH, MeasBasis::Computational, rng);
    ones += bit;
    // The partner collapses to the matching computational state.
    CHECK(rest.num_qubits() == 1);
    CHECK(std::abs(rest.amplitudes()[static_cast<std::size_t>(bit)]) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(within_3_sigma(ones, 10000, 0.5));
}

TEST_CASE("bell_decompose of canonical states") {
  const BellDecomposition pure = bell_decompose(make_bell(BellLabel::PhiPlus, kT, kH), kT, kH);
  CHECK(std::abs(pure.term(BellLabel::PhiPlus).coefficient - complex_t{1, 0}) < 1e-12);
  for (BellLabel other : {BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus}) {
    CHECK(std::abs(pure.term(other).coefficient) < 1e-12);
  }

  // |00> = (|phi+> + |phi->)/sqrt2.
  const StateVector zz = tensor(make_basis_state(kT, MeasBasis::Computational, 0),
                                make_basis_state(kH, MeasBasis::Computational, 0));
  const BellDecomposition split = bell_decompose(zz, kT, kH);
  CHECK(std::abs(split.term(BellLabel::PhiPlus).coefficient) ==
        doctest::Approx(kInvSqrt2).epsilon(1e-12));
  CHECK(std::abs(split.term(BellLabel::PhiMinus).coefficient) ==
        doctest::Approx(kInvSqrt2).epsilon(1e-12));
}

TEST_CASE("decompose then reconstruct is the identity on random states") {
  RandomStream rng(17);
  const std::vector<QubitId> qubits{kT, kH, kTp, kHp};
  for (int round = 0; round < 200; ++round) {
    const StateVector state = random_state(rng, qubits);
    const BellDecomposition decomp = bell_decompose(state, kH, kTp);
    const StateVector rebuilt = reconstruct_from_bell(decomp, kH, kTp);
    CHECK(equal_up_to_global_phase(rebuilt, state, 1e-10));
    // Not just up to phase: the reconstruction reproduces amplitudes.
    const StateVector aligned = rebuilt.reordered(state.qubits());
    for (std::size_t i = 0; i < aligned.amplitudes().size(); ++i) {
      CHECK(std::abs(aligned.amplitudes()[i] - state.amplitudes()[i]) < 1e-10);
    }
  }
}

TEST_CASE("norm is preserved by random unitaries and tensor products") {
  RandomStream rng(23);
  for (int round = 0; round < 200; ++round) {
    StateVector state = random_state(rng, {kT, kH, kTp});
    const Mat2 u = random_unitary(rng);
    state = apply_single(state, u, kH);
    CHECK(std::abs(state.norm() - 1.0) < 1e-12);
    const StateVector with_extra = tensor(state, random_state(rng, {kHp}));
    CHECK(std::abs(with_extra.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("measurement probabilities sum to one on random 4-qubit states") {
  RandomStream rng(29);
  const std::vector<QubitId> qubits{kT, kH, kTp, kHp};
  for (int round = 0; round < 1000; ++round) {
    const StateVector state = random_state(rng, qubits);
    const BellDecomposition decomp = bell_decompose(state, kT, kHp);
    double total = 0.0;
    for (int l = 0; l < 4; ++l) {
      total += std::norm(decomp.terms[static_cast<std::size_t>(l)].coefficient);
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
  }
}

TEST_CASE("bell_measure frequencies track bell_decompose probabilities") {
  RandomStream rng(31);
  const std::vector<QubitId> qubits{kT, kH, kTp};
  for (int round = 0; round < 3; ++round) {
    const StateVector state = random_state(rng, qubits);
    const BellDecomposition decomp = bell_decompose(state, kT, kTp);
    std::array<long, 4> counts{};
    const long samples = 10000;
    for (long i = 0; i < samples; ++i) {
      auto [label, rest] = bell_measure(state, kT, kTp, rng);
      ++counts[static_cast<std::size_t>(label)];
    }
    for (int l = 0; l < 4; ++l) {
      const double p = std::norm(decomp.terms[static_cast<std::size_t>(l)].coefficient);
      CHECK(within_3_sigma(counts[static_cast<std::size_t>(l)], samples, p));
    }
  }
}

TEST_CASE("equal_up_to_global_phase semantics") {
  const StateVector psi_minus = make_bell(BellLabel::PsiMinus, kT, kH);
  std::vector<complex_t> negated;
  for (const complex_t& a : psi_minus.amplitudes()) {
    negated.push_back(-a);
  }
  CHECK(equal_up_to_global_phase(psi_minus, StateVector({kT, kH}, negated), 1e-12));
  CHECK_FALSE(
      equal_up_to_global_phase(psi_minus, make_bell(BellLabel::PsiPlus, kT, kH), 1e-9));
  CHECK_THROWS_AS(
      equal_up_to_global_phase(psi_minus, make_bell(BellLabel::PsiMinus, kT, kTp), 1e-9),
      std::invalid_argument);

  // Comparison is insensitive to qubit storage order.
  const StateVector swapped = psi_minus.reordered({kH, kT});
  CHECK(equal_up_to_global_phase(psi_minus, swapped, 1e-12));
}

TEST_CASE("reordered permutes amplitude indices") {
  const StateVector zero_one = tensor(make_basis_state(kT, MeasBasis::Computational, 0),
                                      make_basis_state(kH, MeasBasis::Computational, 1));
  const StateVector one_zero = zero_one.reordered({kH, kT});
  CHECK(amps_close(one_zero, {0, 0, 1, 0}));
}

TEST_CASE("states larger than four qubits are rejected") {
  const StateVector four = tensor(make_bell(BellLabel::PhiPlus, kT, kH),
                                  make_bell(BellLabel::PsiPlus, kTp, kHp));
  const StateVector extra = make_basis_state({QubitRole::T, 1}, MeasBasis::Computational, 0);
  CHECK_THROWS_AS(tensor(four, extra), std::invalid_argument);
}

TEST_CASE("identical streams give identical measurement records") {
  const std::vector<QubitId> qubits{kT, kH, kTp, kHp};
  RandomStream gen(101);
  const StateVector state = random_state(gen, qubits);
  for (int round = 0; round < 5; ++round) {
    RandomStream a(777);
    RandomStream b(777);
    std::vector<BellLabel> seq_a;
    std::vector<BellLabel> seq_b;
    for (int i = 0; i < 50; ++i) {
      seq_a.push_back(bell_measure(state, kH, kTp, a).first);
      seq_b.push_back(bell_measure(state, kH, kTp, b).first);
    }
    CHECK(seq_a == seq_b);
  }
}
