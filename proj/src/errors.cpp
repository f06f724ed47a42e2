#include "hopf/errors.hpp"

namespace hopf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Case: return "case";
    case ErrorKind::Evaluation: return "evaluation";
    case ErrorKind::Precondition: return "precondition";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

bool Error::is_validation() const noexcept { return kind_ != ErrorKind::Evaluation; }

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace hopf
