#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace solvrad {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  degree_mismatch,
  cap_exceeded,
  not_member,
  precondition_failed,
  internal_inconsistency,
  io_error,
};

// Single exception type for the whole library. `detail` carries the actual
// group order for cap_exceeded errors.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, uint64_t detail = 0)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  uint64_t detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  uint64_t detail_;
};

}  // namespace solvrad
