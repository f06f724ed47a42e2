#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "hopf/params.hpp"

namespace hopf {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Outcome of a continued-fraction rationality test.
///
/// ExactRational carries the first convergent p/q (lowest terms, q >= 1) with
/// q |x - p/q| <= tolerance, i.e. q x within tolerance of an integer.
/// HeuristicIrrational carries the closest convergent found with denominator
/// <= max_denominator; none of them passed. `residual` is |x - p/q|.
struct RationalityResult {
  enum class Kind { ExactRational, HeuristicIrrational };

  Kind kind = Kind::HeuristicIrrational;
  Fraction value;  // the rational, or the best convergent
  double residual = 0.0;
  double tolerance = 0.0;
  std::int64_t max_denominator = 1;
  bool declared = false;  // asserted by the caller instead of detected

  bool is_rational() const { return kind == Kind::ExactRational; }
};

RationalityResult detect_rational(double x, double tol, std::int64_t max_den);

enum class CaseTag { CaseA, CaseB1, CaseB2 };
std::string_view to_string(CaseTag tag);

/// Detect rationality of rho and tau with a continued-fraction heuristic.
struct NumericMode {
  double tol = 1e-12;
  std::int64_t max_den = 1'000'000;
};

/// Caller-asserted invariants. `rho` is q/p (num = q, den = p); `tau` is m/l.
/// An absent value asserts irrationality.
struct DeclaredMode {
  std::optional<Fraction> rho;
  std::optional<Fraction> tau;
  /// Maximum allowed |rho - q/p| and |tau - m/l|.
  double gate = 1e-9;
};

using DerivationMode = std::variant<NumericMode, DeclaredMode>;

struct InvariantSet {
  HopfParams params;
  double rho = 0.0;
  RationalityResult rho_rationality;
  std::optional<double> tau;  // defined when rho is rational
  std::optional<RationalityResult> tau_rationality;
  std::int64_t p = 0, q = 0;  // rho = q/p when rational
  std::int64_t l = 0, m = 0;  // tau = m/l when rational
  std::int64_t g = 0;         // gcd(p, l)
  std::int64_t nu = 0;        // p*l/g
  std::vector<cplx> K;        // nu-th roots of unity, CaseB2 only
  CaseTag case_tag = CaseTag::CaseA;
};

InvariantSet derive_invariants(const HopfParams& params, const DerivationMode& mode = NumericMode{});

inline constexpr std::int64_t kMaxNu = 1 << 22;

/// {exp(2 pi i k / nu) : k = 0..nu-1}; element 0 is exactly 1. Fails past kMaxNu.
std::vector<cplx> roots_of_unity_group(std::int64_t nu);

/// tau = (q/p * arg a - arg b) / 2pi for a given rho = q/p.
double tau_for(const HopfParams& params, double q_over_p);

}  // namespace hopf
