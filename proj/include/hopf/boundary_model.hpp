#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/polynomial.hpp"

namespace hopf {

/// Local normal form psi(z, w) = v + p0(z) + p1(z) u + p2(z) u^2 + ... near a
/// boundary point, w = u + iv, with p0(0) = p1(0) = 0.
struct BoundaryModel {
  std::vector<RealPoly2> p;
  int truncation_degree = kMaxPolyDegree;
  /// Optional replacements for p used only when evaluating arcs in
  /// sweep_cover_check.
  std::vector<std::function<double(cplx)>> arc_coefficients;

  /// p_i(z), zero past the end.
  double coefficient(std::size_t i, cplx z) const;
  /// psi(z, w).
  double psi(cplx z, cplx w) const;

  void validate() const;
};

/// (1 + p1^2) p0_{z zbar} - 2 Re{p1_z p0_zbar (-i + p1)} + 2 p2 |p0_z|^2.
double levi2_residual(const BoundaryModel& model, cplx z);

enum class DiamondCase {
  Gradient,           // grad p0(0) != 0
  Subharmonic,        // degree 2 with a11 > 0
  HarmonicQuadratic,  // degree 2 with a11 = 0, a20 != 0
  OddLeading,         // lowest degree 2n - 1 >= 3
  EvenLeadingMixed,   // lowest degree 2n with some c_k != 0, or degree 2 with a11 < 0
  EvenLeadingRadial,  // lowest degree 2n, only the |z|^{2n} term
};
std::string_view to_string(DiamondCase c);

struct CircleMax {
  double theta;
  double value;
};

/// Max of f over [0, 2pi): a uniform grid followed by golden-section
/// refinement around the best grid point.
CircleMax maximize_on_circle(const std::function<double(double)>& f, int grid = 4096);

/// g(Z) = sum_j coeffs[j] Z^j.
cplx eval_poly(const std::vector<cplx>& coeffs, cplx Z);

/// Max of Re g on the unit circle.
CircleMax maximize_re_on_circle(const std::vector<cplx>& coeffs, int grid = 4096);

/// The auxiliary polynomial for the lowest homogeneous part of p0 (degree
/// d >= 3), indexed by power of Z. Odd d: c_k Z^{d-2k}. Even d = 2n:
/// c_k (1 - (2n-k)k/n^2) Z^{2n-2k}.
std::vector<cplx> g_polynomial(const RealPoly2& p0, int d);

struct DiamondResult {
  bool found = false;
  cplx z_star = 0.0;
  double p0_value = 0.0;
  std::optional<DiamondCase> case_taken;
  int halvings = 0;
  std::vector<std::string> trace;
  std::vector<std::string> warnings;
};

inline constexpr int kShrinkBudget = 60;

/// Finds z* with |z*| < r1 and p0(z*) > 0.
DiamondResult diamond_search(const BoundaryModel& model, double r1);

struct SweepSample {
  cplx w;
  double t;  // z = t z* solves psi(z, w) = 0
  double residual;
};

struct SweepReport {
  DiamondResult diamond;
  double r_prime = 0.0;
  int halvings = 0;
  bool certified = false;
  std::vector<SweepSample> samples;
  double max_residual = 0.0;
};

/// Every sampled w with |w| < r' and psi(0, w) < 0 lies on an arc
/// {psi(z, .) = 0} for some z in the segment [0, z*].
SweepReport sweep_cover_check(const BoundaryModel& model, double r1, std::size_t n_w_samples, std::uint64_t seed);

}  // namespace hopf
