#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unipotent {

/// Broad failure class; the CLI maps each kind to its exit status.
enum class ErrorKind {
  precondition,  // bad input or violated operation precondition (exit 2)
  verification,  // a computed object failed its own check (exit 3)
  io,            // file or stream problems (exit 4)
};

/// Exception carrying a machine-readable code such as "DIVISION_BY_ZERO"
/// or "COHN_RESIDUAL" alongside the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_precondition(std::string code, const std::string& message) {
  throw Error(ErrorKind::precondition, std::move(code), message);
}

[[noreturn]] inline void fail_verification(std::string code, const std::string& message) {
  throw Error(ErrorKind::verification, std::move(code), message);
}

inline void require(bool condition, std::string_view code, const std::string& message) {
  if (!condition) fail_precondition(std::string(code), message);
}

}  // namespace unipotent
