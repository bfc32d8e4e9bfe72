#include "qss/checks.hpp"

#include <cmath>

#include "qss/gates.hpp"
#include "qss/state_vector.hpp"

namespace qss {

namespace {

constexpr double kTol = 1e-10;

const QubitId kT{QubitRole::T, 0};
const QubitId kH{QubitRole::H, 0};
const QubitId kTp{QubitRole::Tp, 0};
const QubitId kHp{QubitRole::Hp, 0};

// (pauli on h of |initial>_{t,h}) (x) (U(total) on t' of |psi+>_{t',h'}).
StateVector attack_joint_state(BellLabel initial, PauliLabel pauli, PhaseAngle total) {
  StateVector genuine = apply_single(make_bell(initial, kT, kH), pauli_unitary(pauli), kH);
  StateVector fake =
      apply_single(make_bell(BellLabel::PsiPlus, kTp, kHp), phase_unitary(total), kTp);
  return tensor(genuine, fake);
}

// What the honest run leaves on the pair Green measures, relabeled onto the
// qubits carrying the attack-path residual (t', h).
StateVector honest_reference(BellLabel initial, PauliLabel pauli, PhaseAngle total) {
  StateVector state = make_bell(initial, kTp, kH);
  state = apply_single(state, phase_unitary(total), kTp);
  return apply_single(state, pauli_unitary(pauli), kH);
}

CheckResult check_swap_decomposition() {
  CheckResult result{"swap-decomposition", true, ""};

  // Worked instance: initial |psi->, encoding s01, agent angles
  // 2pi/3, 0, 2pi/3, 4pi/3 (composite 2pi/3).
  const PhaseAngle total(1 + 0 + 1 + 2);
  const StateVector joint = attack_joint_state(BellLabel::PsiMinus, PauliLabel::S01, total);
  const BellDecomposition decomp = bell_decompose(joint, kT, kHp);

  // Expected residuals on (t', h), outcome -> label, all with U(2pi/3) on t'.
  const BellLabel expected_residual[4] = {BellLabel::PsiMinus, BellLabel::PsiPlus,
                                          BellLabel::PhiMinus, BellLabel::PhiPlus};
  for (int l = 0; l < 4; ++l) {
    const auto label = static_cast<BellLabel>(l);
    const double magnitude = std::abs(decomp.term(label).coefficient);
    if (std::abs(magnitude - 0.5) > kTol) {
      result.pass = false;
      result.detail += "outcome " + to_string(label) + ": |coefficient| = " +
                       std::to_string(magnitude) + "; ";
      continue;
    }
    const StateVector residual = decomp.residual_state(label);
    const StateVector expected = apply_single(
        make_bell(expected_residual[l], kTp, kH), phase_unitary(PhaseAngle(1)), kTp);
    if (!equal_up_to_global_phase(residual, expected, kTol)) {
      result.pass = false;
      result.detail += "outcome " + to_string(label) + ": residual mismatch; ";
    }
  }
  if (result.pass) {
    result.detail = "4 outcomes at coefficient 1/2, residuals as expected";
  }
  return result;
}

// Correction rule on one case: project the joint state onto `outcome` over
// (t, h'), apply bell_compare(outcome, psi+) to h, compare with the honest
// reference. Returns an empty string on success, a reason otherwise.
std::string correction_case(BellLabel initial, PauliLabel pauli, PhaseAngle total,
                            BellLabel outcome) {
  const StateVector joint = attack_joint_state(initial, pauli, total);
  const BellDecomposition decomp = bell_decompose(joint, kT, kHp);

  const double prob = std::norm(decomp.term(outcome).coefficient);
  if (std::abs(prob - 0.25) > kTol) {
    return "outcome probability " + std::to_string(prob);
  }
  const StateVector residual = decomp.residual_state(outcome);
  const PauliLabel correction = bell_compare(outcome, BellLabel::PsiPlus);
  const StateVector corrected = apply_single(residual, pauli_unitary(correction), kH);
  const StateVector honest = honest_reference(initial, pauli, total);
  if (!equal_up_to_global_phase(corrected, honest, kTol)) {
    return "corrected state differs from honest state";
  }
  return "";
}

CheckResult check_correction_instance() {
  CheckResult result{"correction-instance", true, ""};
  // Worked instance, swap outcome |psi->: comparison with |psi+> gives s10
  // and the corrected pair must sit in U(2pi/3)|phi->.
  const PhaseAngle total(1 + 0 + 1 + 2);
  const PauliLabel correction = bell_compare(BellLabel::PsiMinus, BellLabel::PsiPlus);
  if (correction != PauliLabel::S10) {
    result.pass = false;
    result.detail = "comparison gave " + to_string(correction) + ", expected s10";
    return result;
  }
  const std::string failure =
      correction_case(BellLabel::PsiMinus, PauliLabel::S01, total, BellLabel::PsiMinus);
  if (!failure.empty()) {
    result.pass = false;
    result.detail = failure;
    return result;
  }
  // The honest pair itself must sit in U(2pi/3)|phi->.
  const StateVector honest = honest_reference(BellLabel::PsiMinus, PauliLabel::S01, total);
  const StateVector expected =
      apply_single(make_bell(BellLabel::PhiMinus, kTp, kH), phase_unitary(PhaseAngle(1)), kTp);
  if (!equal_up_to_global_phase(honest, expected, kTol)) {
    result.pass = false;
    result.detail = "honest state is not U(2pi/3)|phi->";
    return result;
  }
  result.detail = "outcome psi- -> correction s10 -> U(2pi/3)|phi->, honest path identical";
  return result;
}

CheckResult check_correction_sweep() {
  CheckResult result{"correction-sweep", true, ""};
  int cases = 0;
  int failures = 0;
  for (int initial = 0; initial < 4; ++initial) {
    for (int pauli = 0; pauli < 4; ++pauli) {
      for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
          for (int g = 0; g < 3; ++g) {
            for (int z = 0; z < 3; ++z) {
              const PhaseAngle total(b + c + g + z);
              for (int outcome = 0; outcome < 4; ++outcome) {
                ++cases;
                const std::string failure = correction_case(
                    static_cast<BellLabel>(initial), static_cast<PauliLabel>(pauli), total,
                    static_cast<BellLabel>(outcome));
                if (!failure.empty()) {
                  ++failures;
                }
              }
            }
          }
        }
      }
    }
  }
  result.pass = failures == 0;
  result.detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
  return result;
}

}  // namespace

std::vector<CheckResult> run_identity_checks() {
  return {check_swap_decomposition(), check_correction_instance(), check_correction_sweep()};
}

}  // namespace qss
