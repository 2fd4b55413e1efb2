#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclesplit {

enum class ErrorKind {
  CapExceeded,
  DegreeMismatch,
  InvalidPermutation,
  NotMember,
  NotASubgroup,
  NotNormal,
  NotTransitive,
  NotHomomorphism,
  EmptyFibre,
  EmptyAlgebra,
  EmptyComponent,
  InvalidPolynomial,
  NotSquarefree,
  NoWitness,
  NoRecords,
  NotProper,
  InternalExhaustion,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// All library failures surface as this exception; `kind()` names the
/// failed precondition.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace cyclesplit
