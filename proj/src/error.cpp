#include "lequi/error.hpp"

namespace lequi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SubgraphTooLarge: return "SubgraphTooLarge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotLaplacian: return "NotLaplacian";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MismatchedPair: return "MismatchedPair";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ConditionUnsatisfiable: return "ConditionUnsatisfiable";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoClosedForm: return "NoClosedForm";
    case ErrorCode::NotEquienergeticInput: return "NotEquienergeticInput";
    case ErrorCode::TooFewPairs: return "TooFewPairs";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
  }
  return "Unknown";
}

}  // namespace lequi
