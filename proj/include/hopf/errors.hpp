#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf {

enum class ErrorKind {
  InvalidInput,  // malformed or out-of-range arguments
  Consistency,   // declared data disagrees with the surface parameters
  Domain,        // a point lies outside the set an operation is defined on
  Case,          // operation requires a different invariant case
  Evaluation,    // numeric evaluation produced a non-finite value
  Precondition,  // a geometric precondition of the operation does not hold
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors caused by the caller's input rather than by the library.
  bool is_validation() const noexcept;

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace hopf
