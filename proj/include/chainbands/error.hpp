#ifndef CHAINBANDS_ERROR_HPP
#define CHAINBANDS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainbands {

enum class ErrorCode {
  // graph validation
  DuplicateEdge,
  SelfLoopIntraCell,
  DisconnectedGraph,
  NoConnectingEdge,
  BadVertexId,
  BadShift,
  // input files
  ParseError,
  FileError,
  // numerics
  EigensolverFailure,
  BadBandIndex,
  WindowIntersectsFlatBand,
  LambdaOutOfRange,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` says which.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for the codes produced by graph validation.
  bool is_validation_error() const noexcept {
    return code_ <= ErrorCode::BadShift;
  }

 private:
  ErrorCode code_;
};

}  // namespace chainbands

#endif  // CHAINBANDS_ERROR_HPP
