#include "hopf/quotient.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

bool in_fundamental_domain(CPair pt, const HopfParams& params) {
  const double az = std::abs(pt.z);
  const double aw = std::abs(pt.w);
  const bool e1 = az <= params.abs_a() && aw > 1.0 && aw <= params.abs_b();
  const bool e2 = az > 1.0 && az <= params.abs_a() && aw <= params.abs_b();
  return e1 || e2;
}

CPair lift(CPair pt, int n, const HopfParams& params) {
  return {ipow(params.a(), n) * pt.z, ipow(params.b(), n) * pt.w};
}

namespace {

// phi(z, w) = max(log|z|/log|a|, log|w|/log|b|); F is exactly {0 < phi <= 1}
// and the deck map lowers phi by one.
double level_index(CPair pt, const HopfParams& params) {
  const double inf = std::numeric_limits<double>::infinity();
  const double lz = pt.z == 0.0 ? -inf : std::log(std::abs(pt.z)) / params.log_abs_a();
  const double lw = pt.w == 0.0 ? -inf : std::log(std::abs(pt.w)) / params.log_abs_b();
  return std::max(lz, lw);
}

}  // namespace

HopfPoint reduce(CPair raw, const HopfParams& params) {
  if (raw.is_zero()) fail(ErrorKind::InvalidInput, "reduce: (0,0) is not a point of the Hopf surface");
  if (!std::isfinite(std::abs(raw.z)) || !std::isfinite(std::abs(raw.w))) {
    fail(ErrorKind::InvalidInput, "reduce: coordinates must be finite");
  }
  const double phi = level_index(raw, params);
  const int n0 = static_cast<int>(std::ceil(phi)) - 1;

  HopfPoint out;
  out.on_Ta = raw.w == 0.0;
  out.on_Tb = raw.z == 0.0;
  for (int n = n0 - 1; n <= n0 + 1; ++n) {
    const CPair rep = lift(raw, -n, params);
    if (in_fundamental_domain(rep, params)) {
      out.rep = rep;
      out.lift_index = n;
      return out;
    }
  }
  // Rounding put the point just outside every candidate; take the analytic index.
  out.rep = lift(raw, -n0, params);
  out.lift_index = n0;
  return out;
}

namespace {

bool close(CPair x, CPair y, double tol) {
  return std::abs(x.z - y.z) <= tol && std::abs(x.w - y.w) <= tol;
}

}  // namespace

bool equivalent(CPair p1, CPair p2, const HopfParams& params, double tol) {
  if (p1.is_zero() || p2.is_zero()) fail(ErrorKind::InvalidInput, "equivalent: zero point");
  const CPair r1 = reduce(p1, params).rep;
  const CPair r2 = reduce(p2, params).rep;
  if (close(r1, r2, tol)) return true;
  // Outer boundary faces of F are glued to the inner ones by the deck map.
  return close(r1, lift(r2, 1, params), tol) || close(r1, lift(r2, -1, params), tol);
}

double u_value(CPair pt, const HopfParams& params, UOptions opts) {
  if (pt.w == 0.0 || pt.z == 0.0) {
    if (pt.is_zero()) fail(ErrorKind::InvalidInput, "u_value: zero point");
    if (!opts.extended_real) fail(ErrorKind::Domain, "u_value: U is unbounded on the tori zw = 0");
    return pt.w == 0.0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
  }
  return std::log(std::abs(pt.z)) / params.log_abs_a() - std::log(std::abs(pt.w)) / params.log_abs_b();
}

double u_value(const HopfPoint& pt, const HopfParams& params, UOptions opts) {
  return u_value(pt.rep, params, opts);
}

LevelMembership level_membership(const HopfPoint& pt, double c, const HopfParams& params) {
  const double u = u_value(pt, params);
  LevelMembership out;
  out.residual = u - c;
  out.k = std::exp(-c * params.log_abs_b());
  out.log_residual =
      std::log(std::abs(pt.rep.w)) - std::log(out.k) - params.rho() * std::log(std::abs(pt.rep.z));
  return out;
}

LeafSpec LeafSpec::modulus(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) fail(ErrorKind::InvalidInput, "modulus leaf needs c in (0, inf)");
  return {Kind::ModulusLeaf, c};
}

LeafSpec LeafSpec::complex(cplx c) {
  if (c == 0.0) fail(ErrorKind::InvalidInput, "complex leaf needs c != 0");
  return {Kind::ComplexLeaf, c};
}

std::string LeafSpec::describe() const {
  std::ostringstream os;
  os.precision(12);
  switch (kind) {
    case Kind::ModulusLeaf: os << "Sigma_c {|w| = c|z|^rho}, c = " << c.real(); break;
    case Kind::ComplexLeaf: os << "sigma_c {w = c z^rho}, c = " << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i"; break;
    case Kind::Ta: os << "T_a"; break;
    case Kind::Tb: os << "T_b"; break;
  }
  return os.str();
}

void validate_leaf(const LeafSpec& leaf, const InvariantSet& inv) {
  if (leaf.kind == LeafSpec::Kind::ComplexLeaf && inv.case_tag != CaseTag::CaseB2) {
    fail(ErrorKind::Case, "complex leaves sigma_c exist only in case B2");
  }
  if (leaf.kind == LeafSpec::Kind::ModulusLeaf && inv.case_tag == CaseTag::CaseB2) {
    fail(ErrorKind::Case, "in case B2 the leaves are the tori sigma_c, not Sigma_c");
  }
}

bool leaf_equivalent(cplx c1, cplx c2, const InvariantSet& inv, double tol) {
  if (inv.case_tag != CaseTag::CaseB2) fail(ErrorKind::Case, "leaf_equivalent requires case B2");
  if (c1 == 0.0 || c2 == 0.0) fail(ErrorKind::InvalidInput, "leaf_equivalent: c must be nonzero");
  const cplx ratio = c2 / c1;
  for (const cplx& k : inv.K) {
    if (std::abs(ratio - k) <= tol) return true;
  }
  return false;
}

}  // namespace hopf
