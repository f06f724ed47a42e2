#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "hopf/domains.hpp"

namespace hopf {

/// First and second Wirtinger derivatives of a real function on C^2.
struct Jet2 {
  double psi = 0.0;
  cplx d_z = 0.0, d_w = 0.0;
  double d_zzbar = 0.0, d_wwbar = 0.0;
  cplx d_zwbar = 0.0;
  CPair point{};

  /// Jet of s * psi.
  Jet2 scaled(double s) const;
};

/// psi_{z zbar}|psi_w|^2 - 2 Re{psi_{z wbar} psi_{zbar} psi_w} + psi_{w wbar}|psi_z|^2.
double levi_form(const Jet2& j);

/// Central differences in Re z, Im z, Re w, Im w with step h; error O(h^2).
Jet2 numeric_jet(const std::function<double(CPair)>& psi, CPair point, double h);

/// Richardson combination (4 J(h/2) - J(h)) / 3 of numeric_jet; error O(h^4).
Jet2 extrapolated_jet(const std::function<double(CPair)>& psi, CPair point, double h);

struct LeviSample {
  CPair point;
  double levi;
};

struct LeviScanReport {
  std::size_t boundary_samples = 0;
  std::size_t skipped = 0;  // bracketing failures
  double min_levi = 0.0;
  double max_abs_levi = 0.0;
  std::vector<LeviSample> samples;
  std::vector<LeviSample> violations;  // levi < -tol
  bool pseudoconvex = false;
};

struct LeviScanOptions {
  double h_scale = 1e-3;  // step = h_scale * min(1, |z|, |w|)
  BoundarySampling sampling{};
};

/// Levi form of the local defining function at sampled boundary points.
LeviScanReport pseudoconvexity_scan(const DomainSpec& spec, std::size_t n_samples, double tol,
                                    const HopfParams& params, std::uint64_t seed, const LeviScanOptions& opts = {});

/// CSV: z_re,z_im,w_re,w_im,levi
void write_levi_csv(std::ostream& os, const std::vector<LeviSample>& samples);

}  // namespace hopf
