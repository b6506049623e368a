#pragma once

#include <stdexcept>
#include <string>

namespace qk {

// Error taxonomy mirrored by the C API status codes and CLI exit codes:
// invalid_input -> 1, precondition_failed -> 2.
enum class ErrorKind {
  invalid_input,
  precondition_failed,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string &message) {
  throw Error(ErrorKind::invalid_input, message);
}

[[noreturn]] inline void throw_precondition(const std::string &message) {
  throw Error(ErrorKind::precondition_failed, message);
}

}  // namespace qk
