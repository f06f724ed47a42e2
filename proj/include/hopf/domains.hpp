#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopf/flows.hpp"
#include "hopf/invariants.hpp"
#include "hopf/quotient.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Domain families in H. Residual convention: negative inside, zero on the
// boundary, positive outside.
// ---------------------------------------------------------------------------

/// Union of Sigma_c for c in (k1, k2): {k1 |z|^rho < |w| < k2 |z|^rho}.
struct LevelBand {
  double k1, k2;
};

/// Union of Sigma_c for c in [0, k): {|w| < k |z|^rho} together with T_a.
struct SubLevel {
  double k;
};

/// Union of Sigma_c for c in (k, inf]: {|w| > k |z|^rho} together with T_b.
struct SuperLevel {
  double k;
};

/// A point of P^1 = C u {inf}.
struct ProjectivePoint {
  cplx value = 0.0;
  bool infinite = false;
};

enum class PointRelation { Inside, Boundary, Outside };
std::string_view to_string(PointRelation r);

/// Union of the tori sigma_c = {w = c z^rho} for c in a region delta of P^1.
/// `delta_residual` must be invariant under c -> c k for k in K.
struct LeafFamily {
  std::function<double(ProjectivePoint)> delta_residual;
  PointRelation zero = PointRelation::Outside;
  PointRelation infinity = PointRelation::Outside;
  std::string label = "delta";
};

/// C_z x {A u + B v < 0} / ~ with w = u + iv; requires b real and > 1.
/// Stored with A^2 + B^2 = 1.
struct Nemirovskii {
  double A, B;
};

/// A caller-supplied defining function on C^2 (assumed smooth).
struct Implicit {
  std::function<double(CPair)> psi;
  std::string label = "psi";
  bool boundary_contains_Ta = false;
  bool boundary_contains_Tb = false;
};

struct DomainSpec {
  std::variant<LevelBand, SubLevel, SuperLevel, LeafFamily, Nemirovskii, Implicit> kind;

  std::string_view kind_name() const;
};

DomainSpec make_level_band(double k1, double k2);
DomainSpec make_sub_level(double k);
DomainSpec make_super_level(double k);
DomainSpec make_leaf_family(LeafFamily family);
DomainSpec make_nemirovskii(double A, double B);
DomainSpec make_implicit(Implicit psi);

struct DomainEval {
  double residual;
  bool inside;
};

/// Residual on the reduced representative (deck invariant in sign for every family).
DomainEval evaluate_domain(const DomainSpec& spec, CPair pt, const HopfParams& params);

/// A defining function that is smooth near pt in C^2, evaluated without
/// reduction. Agrees with evaluate_domain in sign.
double local_residual(const DomainSpec& spec, CPair pt, const HopfParams& params);

// ---------------------------------------------------------------------------
// Translates D[z,w] = {(xi, eta) in C* x C* : (xi z, eta w) in D~}.
// ---------------------------------------------------------------------------

/// C*_z x {(cos theta) u - (sin theta) v > 0}.
struct ProductHalfPlane {
  double theta;
};

/// {k_lo < |eta| / |xi|^rho < k_hi}, k_lo in [0, inf), k_hi in (0, inf].
struct ModulusRegion {
  double k_lo;
  double k_hi;
  double rho;
};

struct GenericTranslate {
  std::function<double(CPair)> residual;
};

struct TranslatedDomain {
  CPair anchor;  // raw anchor as supplied
  std::variant<ProductHalfPlane, ModulusRegion, GenericTranslate> form;

  double residual(CPair pt) const;
  bool contains(CPair pt) const { return residual(pt) < 0.0; }
  bool contains_identity() const { return contains({1.0, 1.0}); }
};

TranslatedDomain translate_domain(const DomainSpec& spec, CPair anchor, const HopfParams& params);

struct DistanceConfig {
  /// Lipschitz bound of a Generic residual, for a certified lower bound.
  double lipschitz = 0.0;
  int directions = 256;
  double search_radius = 10.0;
  std::uint64_t seed = 12345;
};

struct DistanceBracket {
  double lower;
  double upper;
};

/// Euclidean distance in C^2 = R^4 from e = (1, 1) to the boundary of td.
DistanceBracket distance_to_identity(const TranslatedDomain& td, const DistanceConfig& cfg = {});

/// Distance in the (|xi|, |eta|) quarter plane from (r0, s0) to the curve
/// s = k r^rho, r >= 0, by branch and bound; upper - lower <= gap.
DistanceBracket modulus_curve_distance(double r0, double s0, double k, double rho, double gap);

/// Distance in C^2 from pt to the boundary of a ModulusRegion.
DistanceBracket modulus_region_distance(const ModulusRegion& region, CPair pt, double gap);

// ---------------------------------------------------------------------------

struct BoundarySampling {
  double r_min = 0.25;  // annulus used for |z| and |w| of candidate points
  double bisection_tol = 1e-10;
  std::size_t pool_factor = 8;
};

struct BoundarySamples {
  std::vector<CPair> boundary;
  std::vector<CPair> interior;
  std::size_t skipped = 0;  // segments where bisection did not converge
};

/// Boundary points by bisection on segments joining random interior and
/// exterior points of the fundamental-domain box.
BoundarySamples sample_boundary(const DomainSpec& spec, const HopfParams& params, std::size_t n,
                                std::uint64_t seed, const BoundarySampling& opts = {});

struct TangencyReport {
  double max_drift = 0.0;  // max over boundary samples and t of |psi(flow) - psi(start)|
  std::size_t boundary_samples = 0;
  std::size_t interior_samples = 0;
  std::size_t escapes = 0;  // interior samples whose flow changes sign
  std::size_t skipped = 0;
  bool tangential = false;
  /// For level families: |beta log|a| - alpha log|b||, the exact rate at
  /// which log(|w|/|z|^rho) moves along X (scaled by log|a|).
  std::optional<double> symbolic_rate;
};

TangencyReport tangency_check(const DomainSpec& spec, const VectorField& X, std::size_t n_samples,
                              std::span<const cplx> t_grid, double tol, const HopfParams& params,
                              std::uint64_t seed);

// ---------------------------------------------------------------------------

enum class Theorem1Type { A1, A2prime, A2doubleprime, B2, SteinCandidate, NemirovskiiStein };
std::string_view to_string(Theorem1Type t);

struct SteinVerdict {
  enum class Kind { NotStein, Stein, Undetermined };
  Kind kind = Kind::Undetermined;
  std::optional<LeafSpec> witness;  // NotStein only: a compact leaf inside D
  std::string reason;
};
std::string_view to_string(SteinVerdict::Kind k);

struct ClassificationResult {
  Theorem1Type theorem1_type;
  std::string delta_description;  // B2 only
  SteinVerdict stein_verdict;
  std::vector<std::string> notes;
};

ClassificationResult classify_domain(const DomainSpec& spec, const InvariantSet& inv);

struct NemirovskiiQuotientReport {
  std::size_t forward_samples = 0;
  std::size_t forward_pass = 0;
  std::size_t case1 = 0;  // deck index of z >= that of w
  std::size_t case2 = 0;  // deck index of w >= that of z
  std::size_t converse_samples = 0;
  std::size_t converse_pass = 0;
  std::size_t negative_samples = 0;  // points with Re w < 0
  std::size_t negative_rejected = 0;  // of those, never reduced into D

  bool all_pass() const {
    return forward_pass == forward_samples && converse_pass == converse_samples &&
           negative_rejected == negative_samples;
  }
};

/// D := (E1' x K1'') u (E2' x K2'') with K1'' = {1 < |w| < b, Re w > 0},
/// K2'' = {|w| < b, Re w > 0}, E1' = {|z| <= |a|}, E2' = {1 < |z| <= |a|}.
bool in_nemirovskii_model(CPair pt, const HopfParams& params);

NemirovskiiQuotientReport verify_nemirovskii_quotient(const HopfParams& params, std::size_t n_samples,
                                                      std::uint64_t seed);

}  // namespace hopf
