#pragma once

#include <stdexcept>
#include <string>

namespace maxinfo {

enum class ErrorCode {
  param_out_of_range,
  invalid_beta,
  hypothesis_violated,
  cap_exceeded,
  domain_mismatch,
  length_mismatch,
  degenerate_code,
  exhausted,
  unbounded_ratio,
  parse_error,
  duplicate_entry,
  validation_error,
  config_invalid,
  io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  // Process exit status used by the CLI: 3 for cap violations, 1 for I/O
  // and parse failures, 2 for parameter/hypothesis violations.
  int exit_status() const;

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace maxinfo
