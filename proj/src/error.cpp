#include "cyclesplit/error.hpp"

namespace cyclesplit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::DegreeMismatch: return "DegreeMismatch";
  case ErrorKind::InvalidPermutation: return "InvalidPermutation";
  case ErrorKind::NotMember: return "NotMember";
  case ErrorKind::NotASubgroup: return "NotASubgroup";
  case ErrorKind::NotNormal: return "NotNormal";
  case ErrorKind::NotTransitive: return "NotTransitive";
  case ErrorKind::NotHomomorphism: return "NotHomomorphism";
  case ErrorKind::EmptyFibre: return "EmptyFibre";
  case ErrorKind::EmptyAlgebra: return "EmptyAlgebra";
  case ErrorKind::EmptyComponent: return "EmptyComponent";
  case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
  case ErrorKind::NotSquarefree: return "NotSquarefree";
  case ErrorKind::NoWitness: return "NoWitness";
  case ErrorKind::NoRecords: return "NoRecords";
  case ErrorKind::NotProper: return "NotProper";
  case ErrorKind::InternalExhaustion: return "InternalExhaustion";
  case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

} // namespace cyclesplit
