#ifndef MODCOUNT_ERROR_HPP
#define MODCOUNT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modcount {

enum class ErrorCode {
  // input validation
  MalformedGraph,
  VertexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  UnknownCatalogName,
  DisconnectedMember,
  TooSmallMember,
  IsomorphicPair,
  BoundaryAlpha,
  InvalidArgument,
  // runtime limits
  SizeCapExceeded,
  TruncatedInput,
  BudgetExceeded,
  Io,
};

/// Stable machine-readable name, e.g. "IsomorphicPair".
std::string_view error_code_name(ErrorCode code);

/// True for codes caused by bad user input (CLI exit code 1); false for
/// resource or runtime failures (exit code 2).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::vector<int> indices = {})
      : std::runtime_error(message), code_(code), indices_(std::move(indices)) {}

  ErrorCode code() const noexcept { return code_; }

  // Offending positions, when the error refers to members of a list
  // (IsomorphicPair carries two, BoundaryAlpha one).
  const std::vector<int>& indices() const noexcept { return indices_; }

private:
  ErrorCode code_;
  std::vector<int> indices_;
};

}  // namespace modcount

#endif
