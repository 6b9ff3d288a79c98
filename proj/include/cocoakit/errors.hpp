#ifndef COCOAKIT_ERRORS_HPP
#define COCOAKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cocoakit {

enum class ErrorCode {
  AlphabetMismatch,
  NotDeterministic,
  NotCobuchi,
  NotBijective,
  IndexOutOfRange,
  NotApplicable,
  Parse,
  Invalid,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception; `code()` identifies the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cocoakit

#endif
