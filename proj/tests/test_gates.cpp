#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "qss/gates.hpp"
#include "qss/state_vector.hpp"
#include "test_util.hpp"

using namespace qss;
using qss::testing::within_3_sigma;

namespace {

const QubitId kQ1{QubitRole::T, 0};
const QubitId kQ2{QubitRole::H, 0};

constexpr BellLabel kLabels[4] = {BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
                                  BellLabel::PsiMinus};
constexpr PauliLabel kPaulis[4] = {PauliLabel::S00, PauliLabel::S01, PauliLabel::S10,
                                   PauliLabel::S11};

bool mat_close(const Mat2& a, const Mat2& b, double tol = 1e-12) {
  return a.max_abs_diff(b) <= tol;
}

}  // namespace

TEST_CASE("phase_unitary matrices") {
  CHECK(mat_close(phase_unitary(PhaseAngle(0)), Mat2::identity()));

  const Mat2 u1 = phase_unitary(PhaseAngle(1));
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  CHECK(u1.m[0][0].real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(u1.m[0][1].real() == doctest::Approx(half_sqrt3).epsilon(1e-12));
  CHECK(u1.m[1][0].real() == doctest::Approx(-half_sqrt3).epsilon(1e-12));
  CHECK(u1.m[1][1].real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(u1.unitarity_defect() < 1e-12);

  // Three ticks make a full turn.
  CHECK(mat_close(u1 * u1 * u1, Mat2::identity()));
}

TEST_CASE("compose_phase and inverse_phase") {
  CHECK(compose_phase({}).ticks() == 0);

  // 4pi/3 + 2pi/3 + 0 + 2pi/3 collapses to 2pi/3.
  const std::vector<PhaseAngle> composite{PhaseAngle(2), PhaseAngle(1), PhaseAngle(0),
                                          PhaseAngle(1)};
  CHECK(compose_phase(composite).ticks() == 1);

  const std::vector<PhaseAngle> inverse_pair{PhaseAngle(1), PhaseAngle(2)};
  CHECK(compose_phase(inverse_pair).ticks() == 0);

  CHECK(inverse_phase(PhaseAngle(0)).ticks() == 0);
  CHECK(inverse_phase(PhaseAngle(1)).ticks() == 2);
  CHECK(inverse_phase(PhaseAngle(2)).ticks() == 1);
}

TEST_CASE("phase group law and homomorphism over all triples") {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      // Commutativity and homomorphism into the matrix group.
      const std::vector<PhaseAngle> ab{PhaseAngle(a), PhaseAngle(b)};
      const std::vector<PhaseAngle> ba{PhaseAngle(b), PhaseAngle(a)};
      CHECK(compose_phase(ab) == compose_phase(ba));
      CHECK(mat_close(phase_unitary(PhaseAngle(a)) * phase_unitary(PhaseAngle(b)),
                      phase_unitary(compose_phase(ab))));
      for (int c = 0; c < 3; ++c) {
        const std::vector<PhaseAngle> abc{PhaseAngle(a), PhaseAngle(b), PhaseAngle(c)};
        const std::vector<PhaseAngle> bc{PhaseAngle(b), PhaseAngle(c)};
        const std::vector<PhaseAngle> a_bc{PhaseAngle(a), compose_phase(bc)};
        CHECK(compose_phase(abc) == compose_phase(a_bc));
      }
    }
  }
  // Identity and order-3 elements.
  CHECK(compose_phase(std::vector<PhaseAngle>{PhaseAngle(0)}).ticks() == 0);
  for (int a = 1; a < 3; ++a) {
    const std::vector<PhaseAngle> thrice{PhaseAngle(a), PhaseAngle(a), PhaseAngle(a)};
    CHECK(compose_phase(thrice).ticks() == 0);
  }
}

TEST_CASE("pauli_unitary matrices match the protocol definitions") {
  CHECK(mat_close(pauli_unitary(PauliLabel::S00), Mat2::identity()));

  const Mat2 s01 = pauli_unitary(PauliLabel::S01);
  CHECK(s01.m[0][1] == complex_t{1, 0});
  CHECK(s01.m[1][0] == complex_t{1, 0});
  CHECK(s01.m[0][0] == complex_t{0, 0});

  const Mat2 s10 = pauli_unitary(PauliLabel::S10);
  CHECK(s10.m[0][0] == complex_t{1, 0});
  CHECK(s10.m[1][1] == complex_t{-1, 0});

  const Mat2 s11 = pauli_unitary(PauliLabel::S11);
  CHECK(s11.m[0][1] == complex_t{1, 0});
  CHECK(s11.m[1][0] == complex_t{-1, 0});

  for (PauliLabel p : kPaulis) {
    CHECK(pauli_unitary(p).unitarity_defect() < 1e-12);
  }
}

TEST_CASE("bell_under_pauli worked entries") {
  CHECK(bell_under_pauli(BellLabel::PsiMinus, QubitSlot::Second, PauliLabel::S01) ==
        BellLabel::PhiMinus);
  CHECK(bell_under_pauli(BellLabel::PhiPlus, QubitSlot::First, PauliLabel::S10) ==
        BellLabel::PhiMinus);
  for (BellLabel label : kLabels) {
    CHECK(bell_under_pauli(label, QubitSlot::First, PauliLabel::S00) == label);
    CHECK(bell_under_pauli(label, QubitSlot::Second, PauliLabel::S00) == label);
  }
}

TEST_CASE("bell_under_pauli agrees with state-level application everywhere") {
  for (BellLabel start : kLabels) {
    for (QubitSlot slot : {QubitSlot::First, QubitSlot::Second}) {
      for (PauliLabel p : kPaulis) {
        const QubitId target = slot == QubitSlot::First ? kQ1 : kQ2;
        const StateVector mapped =
            apply_single(make_bell(start, kQ1, kQ2), pauli_unitary(p), target);
        const BellLabel expected = bell_under_pauli(start, slot, p);
        CHECK(equal_up_to_global_phase(mapped, make_bell(expected, kQ1, kQ2), 1e-9));
      }
    }
  }
}

TEST_CASE("bell_under_pauli is a permutation for each slot and pauli") {
  for (QubitSlot slot : {QubitSlot::First, QubitSlot::Second}) {
    for (PauliLabel p : kPaulis) {
      std::array<bool, 4> hit{};
      for (BellLabel start : kLabels) {
        hit[static_cast<std::size_t>(bell_under_pauli(start, slot, p))] = true;
      }
      for (bool h : hit) {
        CHECK(h);
      }
    }
  }
}

TEST_CASE("bell_compare worked entries and full state-level correctness") {
  // The comparison the paper's attack narrative performs.
  CHECK(bell_compare(BellLabel::PsiMinus, BellLabel::PsiPlus) == PauliLabel::S10);
  CHECK(bell_compare(BellLabel::PhiPlus, BellLabel::PsiPlus) == PauliLabel::S01);
  for (BellLabel label : kLabels) {
    CHECK(bell_compare(label, label) == PauliLabel::S00);
  }

  for (BellLabel measured : kLabels) {
    for (BellLabel reference : kLabels) {
      const PauliLabel p = bell_compare(measured, reference);
      const StateVector mapped =
          apply_single(make_bell(reference, kQ1, kQ2), pauli_unitary(p), kQ1);
      CHECK(equal_up_to_global_phase(mapped, make_bell(measured, kQ1, kQ2), 1e-9));
    }
  }
}

TEST_CASE("infer_pauli inverts second-slot encoding") {
  CHECK(infer_pauli(BellLabel::PsiMinus, BellLabel::PhiMinus) == PauliLabel::S01);
  for (BellLabel label : kLabels) {
    CHECK(infer_pauli(label, label) == PauliLabel::S00);
  }
  for (BellLabel initial : kLabels) {
    for (PauliLabel p : kPaulis) {
      CHECK(infer_pauli(initial, bell_under_pauli(initial, QubitSlot::Second, p)) == p);
    }
  }
}

TEST_CASE("phase ops on one slot commute with paulis on the other") {
  for (BellLabel start : kLabels) {
    for (int ticks = 0; ticks < 3; ++ticks) {
      for (PauliLabel p : kPaulis) {
        const StateVector base = make_bell(start, kQ1, kQ2);
        const StateVector phase_first = apply_single(
            apply_single(base, phase_unitary(PhaseAngle(ticks)), kQ1), pauli_unitary(p), kQ2);
        const StateVector pauli_first = apply_single(
            apply_single(base, pauli_unitary(p), kQ2), phase_unitary(PhaseAngle(ticks)), kQ1);
        for (std::size_t i = 0; i < phase_first.amplitudes().size(); ++i) {
          CHECK(std::abs(phase_first.amplitudes()[i] - pauli_first.amplitudes()[i]) < 1e-12);
        }
      }
    }
  }
  // The table identity the undetectability argument uses.
  CHECK(bell_under_pauli(BellLabel::PhiPlus, QubitSlot::Second, PauliLabel::S10) ==
        BellLabel::PhiMinus);
}

TEST_CASE("expected_correlation table") {
  CHECK(expected_correlation(BellLabel::PhiPlus, MeasBasis::Computational) == Correlation::Same);
  CHECK(expected_correlation(BellLabel::PhiPlus, MeasBasis::Hadamard) == Correlation::Same);
  CHECK(expected_correlation(BellLabel::PhiMinus, MeasBasis::Computational) == Correlation::Same);
  CHECK(expected_correlation(BellLabel::PhiMinus, MeasBasis::Hadamard) == Correlation::Opposite);
  CHECK(expected_correlation(BellLabel::PsiPlus, MeasBasis::Computational) ==
        Correlation::Opposite);
  CHECK(expected_correlation(BellLabel::PsiPlus, MeasBasis::Hadamard) == Correlation::Same);
  CHECK(expected_correlation(BellLabel::PsiMinus, MeasBasis::Computational) ==
        Correlation::Opposite);
  CHECK(expected_correlation(BellLabel::PsiMinus, MeasBasis::Hadamard) == Correlation::Opposite);
}

TEST_CASE("expected_correlation matches sampled joint statistics") {
  RandomStream rng(61);
  for (BellLabel label : kLabels) {
    for (MeasBasis basis : {MeasBasis::Computational, MeasBasis::Hadamard}) {
      const Correlation expected = expected_correlation(label, basis);
      long ones_first = 0;
      const long samples = 10000 / 8 + 1300;  // ~2550 per combination, >1e4 total
      for (long i = 0; i < samples; ++i) {
        const StateVector pair = make_bell(label, kQ1, kQ2);
        auto [bit1, rest] = basis_measure(pair, kQ1, basis, rng);
        auto [bit2, empty] = basis_measure(rest, kQ2, basis, rng);
        const bool same = bit1 == bit2;
        // Bell correlations in the matching basis are exact.
        CHECK(same == (expected == Correlation::Same));
        ones_first += bit1;
      }
      // Each marginal stays unbiased.
      CHECK(within_3_sigma(ones_first, samples, 0.5));
    }
  }
}
