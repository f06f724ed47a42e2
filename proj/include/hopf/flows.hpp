#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "hopf/invariants.hpp"
#include "hopf/quotient.hpp"

namespace hopf {

/// X = alpha z d/dz + beta w d/dw.
struct VectorField {
  cplx alpha;
  cplx beta;

  bool is_zero() const { return alpha == 0.0 && beta == 0.0; }
};

/// X_u = (log|a|) z d/dz + (log|b|) w d/dw; its orbits sweep out the leaves
/// |w| = c|z|^rho.
VectorField ueda_field(const HopfParams& params);

/// (Log a) z d/dz + (Log b) w d/dw with principal logs; exp(1 * X) = (a, b).
VectorField deck_field(const HopfParams& params);

/// Scale-free test |alpha log|b| - beta log|a|| <= rel * max(|alpha|, |beta|).
bool proportional_to_xu(const VectorField& X, const HopfParams& params, double rel = 1e-10);

/// (z0 e^{alpha t}, w0 e^{beta t}).
CPair flow_point(const VectorField& X, CPair start, cplx t);

/// flow_point at every t of the grid followed by reduction into F, in grid order.
std::vector<HopfPoint> orbit_reduce_samples(const VectorField& X, CPair start, std::span<const cplx> t_grid,
                                            const HopfParams& params);

struct FiberSample {
  int n;  // deck index
  int k;  // monodromy index of the branch of z^{beta/alpha}
  cplx w;
};

/// Intersection of the saturated orbit through `start` with the fiber {z = z'}.
struct FiberSet {
  cplx z_prime;
  std::vector<FiberSample> samples;  // deduplicated, first-visit order
  double min_abs = 0.0;
  double max_abs = 0.0;
  std::vector<double> arguments;  // arg w in [0, 2pi), same order as samples
  std::vector<double> decay_n;    // |w_{n,0}| for n = 0, 1, 2, ...
  std::vector<double> decay_k;    // |w_{0,k}| for k = 0, 1, 2, ...
  bool n_axis_degenerate = false;  // deck generator acts trivially on the fiber
  bool k_axis_degenerate = false;  // monodromy generator acts trivially
};

struct FiberOptions {
  CPair start{1.0, 1.0};
  double dedup_tol = 1e-12;
  int decay_terms = 41;
};

/// Enumerates (n, k) in a square spiral and returns up to `count` distinct
/// fiber values. An axis whose generator acts trivially is collapsed so the
/// enumeration does not spend its budget on repeats.
FiberSet fiber_set(const VectorField& X, cplx z_prime, const InvariantSet& inv, std::size_t count,
                   const FiberOptions& opts = {});

/// Exact star discrepancy of angles taken mod 2pi and scaled to [0, 1).
double star_discrepancy(std::span<const double> angles);

/// Same, for points already in [0, 1).
double star_discrepancy_unit(std::vector<double> x);

enum class ClosureTag { LeviFlatHypersurface, CompactTorus, ContainsBothTori, ContainsTaOnly, ContainsTbOnly };
std::string_view to_string(ClosureTag tag);

struct ClosureEvidence {
  double modulus_residual = 0.0;  // max ||w| - c|z|^rho| over reduced orbit samples
  double fiber_discrepancy = 0.0;
  std::size_t fiber_cardinality = 0;
  std::vector<double> ta_decay;  // |w| along a sequence converging to T_a
  std::vector<double> tb_decay;  // |z| along a sequence converging to T_b
};

struct ClosureClass {
  ClosureTag tag;
  std::int64_t sheets = 0;  // nu for CompactTorus
  ClosureEvidence evidence;
};

struct EvidenceConfig {
  std::size_t fiber_count = 10'000;
  cplx z_prime = 1.5;
  std::size_t orbit_samples = 256;
  CPair start{1.0, 1.0};
  std::uint64_t seed = 12345;
};

ClosureClass classify_orbit_closure(const VectorField& X, const InvariantSet& inv, const EvidenceConfig& cfg = {});

/// CSV: t_re,t_im,z_re,z_im,w_re,w_im,rep_z_re,rep_z_im,rep_w_re,rep_w_im,lift_index,on_Ta,on_Tb
void write_orbit_csv(std::ostream& os, const VectorField& X, CPair start, std::span<const cplx> t_grid,
                     const HopfParams& params);

/// CSV: n,k,w_re,w_im,abs_w,arg_w
void write_fiber_csv(std::ostream& os, const FiberSet& fiber);

}  // namespace hopf
