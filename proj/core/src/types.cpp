#include "qss/types.hpp"

namespace qss {

std::string to_string(QubitRole role) {
  switch (role) {
    case QubitRole::T:
      return "t";
    case QubitRole::H:
      return "h";
    case QubitRole::Tp:
      return "t'";
    case QubitRole::Hp:
      return "h'";
  }
  return "?";
}

std::string to_string(const QubitId& id) {
  return to_string(id.role) + "[" + std::to_string(id.position) + "]";
}

std::string to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus:
      return "phi+";
    case BellLabel::PhiMinus:
      return "phi-";
    case BellLabel::PsiPlus:
      return "psi+";
    case BellLabel::PsiMinus:
      return "psi-";
  }
  return "?";
}

std::string to_string(PauliLabel label) {
  switch (label) {
    case PauliLabel::S00:
      return "s00";
    case PauliLabel::S01:
      return "s01";
    case PauliLabel::S10:
      return "s10";
    case PauliLabel::S11:
      return "s11";
  }
  return "?";
}

std::string to_string(MeasBasis basis) {
  return basis == MeasBasis::Computational ? "computational" : "hadamard";
}

std::string to_string(Correlation c) {
  return c == Correlation::Same ? "same" : "opposite";
}

std::string to_string(PartyId party) {
  switch (party) {
    case PartyId::Alice:
      return "alice";
    case PartyId::Bob:
      return "bob";
    case PartyId::Charlie:
      return "charlie";
    case PartyId::Green:
      return "green";
    case PartyId::Zach:
      return "zach";
  }
  return "?";
}

}  // namespace qss
