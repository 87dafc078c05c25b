#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lequi {

enum class ErrorCode {
  SubgraphTooLarge,
  EmptyGraph,
  TooManyVertices,
  InvalidEdge,
  DuplicateEdge,
  ParseError,
  NoConvergence,
  InvalidArgument,
  KindMismatch,
  NotLaplacian,
  TooFewVertices,
  LengthMismatch,
  MismatchedPair,
  Disconnected,
  ConditionUnsatisfiable,
  PreconditionFailed,
  NoClosedForm,
  NotEquienergeticInput,
  TooFewPairs,
  OrderMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lequi
