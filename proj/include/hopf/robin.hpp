#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hopf/domains.hpp"
#include "hopf/wos.hpp"

namespace hopf {

Vec4 to_vec4(CPair p);

/// e = (1, 1) in R^4.
inline constexpr Vec4 kIdentity4{1.0, 0.0, 1.0, 0.0};

struct RobinBudget {
  std::uint64_t walks = 20'000;
  std::uint64_t seed = 12345;
  double c_weight = 0.0;
  WosConfig wos{};
  /// Lipschitz bound for Generic translates (distance = |residual| / L).
  double lipschitz = 0.0;
};

/// ProductHalfPlane -> half-space; ModulusRegion -> certified branch-and-bound
/// distance; Generic -> residual over the Lipschitz bound.
SolvableDomain to_solvable(const TranslatedDomain& td, double lipschitz = 0.0);

struct BoundaryRow {
  CPair anchor;
  std::optional<double> theta;
  DistanceBracket dist;
  RobinEstimate est;
};

/// Robin constant of D[z, w] with pole e at each anchor, in path order.
std::vector<BoundaryRow> boundary_behavior_experiment(const DomainSpec& spec, const std::vector<CPair>& anchors,
                                                      const HopfParams& params, const RobinBudget& budget);

/// CSV: z_re,z_im,w_re,w_im,theta,dist_lower,dist_upper,lambda_hat,stderr,n_walks,truncated_walks
void write_boundary_csv(std::ostream& os, const std::vector<BoundaryRow>& rows);

struct PshReport {
  double center_value = 0.0;  // -lambda at the anchor
  double ring_mean = 0.0;
  double residual = 0.0;  // ring_mean - center_value
  double combined_stderr = 0.0;
  std::vector<double> ring_values;
  bool consistent = false;  // residual >= -3 combined_stderr
};

/// Sub-mean-value test for -lambda on the disk {anchor + t direction : |t| <= r}.
/// Every point uses the same seed.
PshReport psh_spot_check(const std::function<SolvableDomain(CPair)>& translate_at, CPair anchor, CPair direction,
                         double disk_radius, int grid_n, const RobinBudget& budget);

PshReport psh_spot_check(const DomainSpec& spec, CPair anchor, CPair direction, double disk_radius, int grid_n,
                         const RobinBudget& budget, const HopfParams& params);

}  // namespace hopf
