#include "hopf/invariants.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

RationalityResult detect_rational(double x, double tol, std::int64_t max_den) {
  if (!std::isfinite(x)) fail(ErrorKind::InvalidInput, "detect_rational: x must be finite");
  if (!(tol >= 0.0)) fail(ErrorKind::InvalidInput, "detect_rational: tolerance must be nonnegative");
  if (max_den < 1) fail(ErrorKind::InvalidInput, "detect_rational: max_den must be >= 1");

  RationalityResult out;
  out.tolerance = tol;
  out.max_denominator = max_den;

  // Convergent recurrences h_n = a_n h_{n-1} + h_{n-2}, k_n likewise.
  // Integer parts are taken in long double to keep the expansion of the
  // double x faithful for a few more terms.
  long double rem = x;
  std::int64_t h_prev = 1, h_prev2 = 0;
  std::int64_t k_prev = 0, k_prev2 = 1;
  bool have_best = false;

  for (int iter = 0; iter < 64; ++iter) {
    long double fl = std::floor(rem);
    if (std::fabs(fl) > 9.0e15L) break;
    const auto an = static_cast<std::int64_t>(fl);
    // Overflow guard for the recurrences.
    if (iter > 0 && an != 0 &&
        (std::abs(h_prev) > INT64_MAX / std::abs(an) || k_prev > INT64_MAX / std::abs(an))) {
      break;
    }
    const std::int64_t h = an * h_prev + h_prev2;
    const std::int64_t k = an * k_prev + k_prev2;
    if (k > max_den) break;

    const double residual = std::fabs(x - static_cast<double>(h) / static_cast<double>(k));
    if (!have_best || residual < out.residual) {
      out.value = {h, k};
      out.residual = residual;
      have_best = true;
    }
    // Lattice test: k x lies within tol of an integer.
    if (residual * static_cast<double>(k) <= tol) {
      out.kind = RationalityResult::Kind::ExactRational;
      out.value = {h, k};
      out.residual = residual;
      return out;
    }

    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;

    const long double frac = rem - fl;
    if (frac <= 0.0L) break;
    rem = 1.0L / frac;
  }
  out.kind = RationalityResult::Kind::HeuristicIrrational;
  return out;
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::CaseA: return "A";
    case CaseTag::CaseB1: return "B1";
    case CaseTag::CaseB2: return "B2";
  }
  return "?";
}

std::vector<cplx> roots_of_unity_group(std::int64_t nu) {
  if (nu < 1) fail(ErrorKind::InvalidInput, "roots_of_unity_group: nu must be >= 1");
  if (nu > kMaxNu) fail(ErrorKind::Evaluation, "roots_of_unity_group: nu = " + std::to_string(nu) + " is too large to list");
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(nu));
  for (std::int64_t k = 0; k < nu; ++k) {
    // Exact values on the axes so that {1, i, -1, -i} come out clean.
    if (4 * k % nu == 0) {
      switch ((4 * k / nu) % 4) {
        case 0: out.emplace_back(1.0, 0.0); continue;
        case 1: out.emplace_back(0.0, 1.0); continue;
        case 2: out.emplace_back(-1.0, 0.0); continue;
        case 3: out.emplace_back(0.0, -1.0); continue;
      }
    }
    out.push_back(std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(nu)));
  }
  return out;
}

double tau_for(const HopfParams& params, double q_over_p) {
  return (q_over_p * params.arg_a() - params.arg_b()) / kTwoPi;
}

namespace {

Fraction reduced(Fraction f) {
  if (f.den == 0) fail(ErrorKind::InvalidInput, "fraction with zero denominator");
  if (f.den < 0) {
    f.num = -f.num;
    f.den = -f.den;
  }
  const std::int64_t g = std::gcd(f.num < 0 ? -f.num : f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

RationalityResult declared_result(Fraction f, double x, double gate, const char* name) {
  f = reduced(f);
  RationalityResult r;
  r.kind = RationalityResult::Kind::ExactRational;
  r.value = f;
  r.residual = std::fabs(x - f.value());
  r.tolerance = gate;
  r.max_denominator = f.den;
  r.declared = true;
  if (!(r.residual <= gate)) {
    std::ostringstream os;
    os.precision(17);
    os << "declared " << name << " = " << f.num << "/" << f.den << " differs from computed " << x
       << " by " << r.residual << " > " << gate;
    fail(ErrorKind::Consistency, os.str());
  }
  return r;
}

RationalityResult declared_irrational(double x) {
  RationalityResult r;
  r.kind = RationalityResult::Kind::HeuristicIrrational;
  r.declared = true;
  r.value = {static_cast<std::int64_t>(std::llround(x)), 1};
  r.residual = std::fabs(x - r.value.value());
  return r;
}

}  // namespace

InvariantSet derive_invariants(const HopfParams& params, const DerivationMode& mode) {
  InvariantSet inv{params, 0.0, {}, std::nullopt, std::nullopt, 0, 0, 0, 0, 0, 0, {}, CaseTag::CaseA};
  inv.rho = params.rho();

  const auto* declared = std::get_if<DeclaredMode>(&mode);
  const auto* numeric = std::get_if<NumericMode>(&mode);

  if (declared) {
    inv.rho_rationality = declared->rho ? declared_result(*declared->rho, inv.rho, declared->gate, "rho")
                                        : declared_irrational(inv.rho);
  } else {
    inv.rho_rationality = detect_rational(inv.rho, numeric->tol, numeric->max_den);
  }

  if (!inv.rho_rationality.is_rational()) {
    inv.case_tag = CaseTag::CaseA;
    return inv;
  }
  inv.q = inv.rho_rationality.value.num;
  inv.p = inv.rho_rationality.value.den;
  const double tau = tau_for(params, static_cast<double>(inv.q) / static_cast<double>(inv.p));
  inv.tau = tau;

  RationalityResult tau_r;
  if (declared) {
    tau_r = declared->tau ? declared_result(*declared->tau, tau, declared->gate, "tau")
                          : declared_irrational(tau);
  } else {
    tau_r = detect_rational(tau, numeric->tol, numeric->max_den);
  }
  inv.tau_rationality = tau_r;

  if (!tau_r.is_rational()) {
    inv.case_tag = CaseTag::CaseB1;
    return inv;
  }
  inv.m = tau_r.value.num;
  inv.l = tau_r.value.den;  // tau = 0 gives 0/1, i.e. l = 1
  inv.g = std::gcd(inv.p, inv.l);
  inv.nu = inv.p * inv.l / inv.g;
  inv.K = roots_of_unity_group(inv.nu);
  inv.case_tag = CaseTag::CaseB2;
  return inv;
}

}  // namespace hopf
