#include "cvikit/error.hpp"

namespace cvikit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedFile: return "malformed-file";
    case ErrorKind::InvalidValue: return "invalid-value";
    case ErrorKind::TooSmall: return "too-small";
    case ErrorKind::MissingGroundTruth: return "missing-ground-truth";
    case ErrorKind::DegeneratePartition: return "degenerate-partition";
    case ErrorKind::InvalidPartition: return "invalid-partition";
    case ErrorKind::DivideDegenerate: return "divide-degenerate";
    case ErrorKind::EmptySample: return "empty-sample";
    case ErrorKind::NoComputableClass: return "no-computable-class";
    case ErrorKind::NoComputableK: return "no-computable-k";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidK: return "invalid-k";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::Io: return "io-error";
  }
  return "unknown";
}

}  // namespace cvikit
