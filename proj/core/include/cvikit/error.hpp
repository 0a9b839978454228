#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cvikit {

enum class ErrorKind {
  MalformedFile,
  InvalidValue,
  TooSmall,
  MissingGroundTruth,
  DegeneratePartition,
  InvalidPartition,
  DivideDegenerate,
  EmptySample,
  NoComputableClass,
  NoComputableK,
  InvalidInput,
  InvalidK,
  InvalidSpec,
  NumericalFailure,
  Io,
};

/// Kebab-case name used in CLI error lines, e.g. "malformed-file".
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cvikit
