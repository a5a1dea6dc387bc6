#pragma once

#include <stdexcept>
#include <string>

namespace achord {

enum class ErrorCode {
  invalid_argument,
  parse,
  graph,
  precondition,
  decomposition,
  size_guard,
  internal,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the library; the code maps onto the C API status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace achord
