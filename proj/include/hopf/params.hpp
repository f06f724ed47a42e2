#pragma once

#include <complex>
#include <numbers>

namespace hopf {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point (z, w) of C^2.
struct CPair {
  cplx z;
  cplx w;

  bool is_zero() const { return z == 0.0 && w == 0.0; }
  friend bool operator==(const CPair&, const CPair&) = default;
};

/// Argument normalized to [0, 2pi).
double normalized_arg(cplx x);

/// x^n by repeated squaring; exact powers stay exact for dyadic inputs.
cplx ipow(cplx x, int n);

/// The pair (a, b) defining the Hopf surface (C^2 \ 0) / <(z,w) -> (az, bw)>.
///
/// Enforces |a| > 1 and |b| >= |a|. Arguments are stored normalized to
/// [0, 2pi) so every derived quantity uses one branch convention.
class HopfParams {
 public:
  HopfParams(cplx a, cplx b);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  double abs_a() const { return abs_a_; }
  double abs_b() const { return abs_b_; }
  double log_abs_a() const { return log_abs_a_; }
  double log_abs_b() const { return log_abs_b_; }
  double arg_a() const { return arg_a_; }
  double arg_b() const { return arg_b_; }

  /// Principal logarithms with imaginary part in [0, 2pi); exp(log_a()) == a.
  cplx log_a() const { return {log_abs_a_, arg_a_}; }
  cplx log_b() const { return {log_abs_b_, arg_b_}; }

  /// rho = log|b| / log|a| >= 1.
  double rho() const { return log_abs_b_ / log_abs_a_; }

  /// True when b is a real number greater than one (Nemirovskii-type families).
  bool b_real_gt_one() const { return b_.imag() == 0.0 && b_.real() > 1.0; }

 private:
  cplx a_, b_;
  double abs_a_, abs_b_, log_abs_a_, log_abs_b_, arg_a_, arg_b_;
};

}  // namespace hopf
