#pragma once

#include <string>

#include "hopf/invariants.hpp"
#include "hopf/params.hpp"

namespace hopf {

/// A point [z, w] of the Hopf surface, stored as its representative in the
/// fundamental domain F = E1 u E2 together with the deck index that maps the
/// representative back to the original input.
struct HopfPoint {
  CPair rep;
  int lift_index = 0;  // raw = (a^n rep.z, b^n rep.w)
  bool on_Ta = false;  // w == 0
  bool on_Tb = false;  // z == 0
};

/// F = {|z| <= |a|} x {1 < |w| <= |b|}  u  {1 < |z| <= |a|} x {|w| <= |b|}.
bool in_fundamental_domain(CPair pt, const HopfParams& params);

/// (a^n z, b^n w).
CPair lift(CPair pt, int n, const HopfParams& params);

/// Reduce a nonzero point of C^2 into F. On boundary circles the smallest
/// qualifying lift index wins.
HopfPoint reduce(CPair raw, const HopfParams& params);

/// True when the two points define the same point of H, comparing reduced
/// representatives componentwise within `tol` and accounting for the boundary
/// gluing (z, w) ~ (z/a, w/b) on the outer faces of F.
bool equivalent(CPair p1, CPair p2, const HopfParams& params, double tol);

struct UOptions {
  /// Return +inf on T_a and -inf on T_b instead of throwing.
  bool extended_real = false;
};

/// U[z,w] = log|z|/log|a| - log|w|/log|b|, invariant under the deck group.
double u_value(CPair pt, const HopfParams& params, UOptions opts = {});
double u_value(const HopfPoint& pt, const HopfParams& params, UOptions opts = {});

struct LevelMembership {
  double residual;      // U - c; zero iff the point lies on S_c
  double k;             // S_c = {|w| = k |z|^rho}, k = exp(-c log|b|)
  double log_residual;  // log|w| - log k - rho log|z|
};

LevelMembership level_membership(const HopfPoint& pt, double c, const HopfParams& params);

/// Leaves of the foliation of H by closures of X_u-orbits.
struct LeafSpec {
  enum class Kind { ModulusLeaf, ComplexLeaf, Ta, Tb };
  Kind kind = Kind::ModulusLeaf;
  cplx c = 1.0;  // real positive for ModulusLeaf, nonzero complex for ComplexLeaf

  static LeafSpec modulus(double c);
  static LeafSpec complex(cplx c);

  std::string describe() const;
};

/// Validates the leaf kind against the invariant case (ComplexLeaf needs CaseB2).
void validate_leaf(const LeafSpec& leaf, const InvariantSet& inv);

/// sigma_{c1} == sigma_{c2} iff c2/c1 lies within tol of an element of K.
bool leaf_equivalent(cplx c1, cplx c2, const InvariantSet& inv, double tol);

}  // namespace hopf
