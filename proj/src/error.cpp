#include "modcount/error.hpp"

namespace modcount {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::DisconnectedMember: return "DisconnectedMember";
    case ErrorCode::TooSmallMember: return "TooSmallMember";
    case ErrorCode::IsomorphicPair: return "IsomorphicPair";
    case ErrorCode::BoundaryAlpha: return "BoundaryAlpha";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::TruncatedInput: return "TruncatedInput";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::TruncatedInput:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::Io:
      return false;
    default:
      return true;
  }
}

}  // namespace modcount
