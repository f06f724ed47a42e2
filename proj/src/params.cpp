#include "hopf/params.hpp"

#include <cmath>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

double normalized_arg(cplx x) {
  double t = std::arg(x);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

cplx ipow(cplx x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  cplx result = 1.0;
  cplx base = x;
  unsigned k = static_cast<unsigned>(n);
  while (k) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

HopfParams::HopfParams(cplx a, cplx b) : a_(a), b_(b) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
      !std::isfinite(b.imag())) {
    fail(ErrorKind::InvalidInput, "a and b must be finite");
  }
  abs_a_ = std::abs(a);
  abs_b_ = std::abs(b);
  if (!(abs_a_ > 1.0)) {
    std::ostringstream os;
    os << "|a| must exceed 1 (got " << abs_a_ << ")";
    fail(ErrorKind::InvalidInput, os.str());
  }
  if (!(abs_b_ >= abs_a_)) {
    std::ostringstream os;
    os << "|b| must be at least |a| (got |a|=" << abs_a_ << ", |b|=" << abs_b_ << ")";
    fail(ErrorKind::InvalidInput, os.str());
  }
  log_abs_a_ = std::log(abs_a_);
  log_abs_b_ = std::log(abs_b_);
  arg_a_ = normalized_arg(a);
  arg_b_ = normalized_arg(b);
}

}  // namespace hopf
