#include "maxinfo/errors.hpp"

namespace maxinfo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::param_out_of_range: return "ParamOutOfRange";
    case ErrorCode::invalid_beta: return "InvalidBeta";
    case ErrorCode::hypothesis_violated: return "HypothesisViolated";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::domain_mismatch: return "DomainMismatch";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::degenerate_code: return "DegenerateCode";
    case ErrorCode::exhausted: return "Exhausted";
    case ErrorCode::unbounded_ratio: return "UnboundedRatio";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::duplicate_entry: return "DuplicateEntry";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::config_invalid: return "ConfigInvalid";
    case ErrorCode::io_error: return "IoError";
  }
  return "Error";
}

int Error::exit_status() const {
  switch (code_) {
    case ErrorCode::cap_exceeded:
      return 3;
    case ErrorCode::parse_error:
    case ErrorCode::duplicate_entry:
    case ErrorCode::io_error:
      return 1;
    default:
      return 2;
  }
}

}  // namespace maxinfo
