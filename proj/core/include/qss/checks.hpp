#ifndef QSS_CHECKS_HPP_
#define QSS_CHECKS_HPP_

#include <string>
#include <vector>

namespace qss {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Deterministic numeric checks of the identities the collusion attack rests
// on, at 1e-10 tolerance:
//   swap-decomposition          the worked 4-qubit instance splits over the
//                               (t, h') Bell basis into four coefficient-1/2
//                               terms with the expected residual states;
//   correction-instance         the worked instance's corrected attack-path
//                               state equals the honest-path state;
//   correction-sweep            the same equivalence over all 4 initials x
//                               4 encodings x 81 angle tuples x 4 outcomes
//                               (5184 cases), each outcome at probability 1/4.
std::vector<CheckResult> run_identity_checks();

}  // namespace qss

#endif  // QSS_CHECKS_HPP_
