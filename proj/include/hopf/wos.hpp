#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

namespace hopf {

using Vec4 = std::array<double, 4>;

double norm(const Vec4& x);
Vec4 operator-(const Vec4& a, const Vec4& b);

struct Ball {
  Vec4 center;
  double radius;
};

/// {x : <n, x> > offset} with |n| = 1.
struct HalfSpace {
  Vec4 normal;
  double offset;
};

/// C*_z x {(cos theta) u - (sin theta) v > 0} in coordinates (x, y, u, v).
/// The puncture {z = 0} is polar in R^4 and ignored.
struct ProductHalfPlaneR4 {
  double theta;
};

struct GenericDomain {
  std::function<bool(const Vec4&)> inside;
  /// A lower bound for the distance to the boundary, positive inside.
  std::function<double(const Vec4&)> distance;
  /// Optional nearest-point projection used at the epsilon shell.
  std::function<Vec4(const Vec4&)> project;
};

using SolvableDomain = std::variant<Ball, HalfSpace, ProductHalfPlaneR4, GenericDomain>;

/// Distance to the boundary (negative outside) for the closed-form kinds.
double boundary_distance(const SolvableDomain& dom, const Vec4& x);

/// r^{-2}, the R^4 harmonic kernel without the surface-area constant.
double kernel(double r);

struct WosConfig {
  double eps_shell = 1e-4;
  double r_max_factor = 1e3;
  std::uint64_t max_steps = 100'000;
  std::size_t block_size = 1024;  // walks per RNG substream
  int shards = 1;                 // OpenMP threads; results do not depend on it
};

struct RobinEstimate {
  double lambda_hat = 0.0;
  double stderr_ = 0.0;
  std::uint64_t n_walks = 0;
  double c_weight = 0.0;
  std::string kernel_normalization = "G(x) = |x - p|^-2 + lambda + o(1); no 1/(4 pi^2) factor";
  std::uint64_t seed = 0;
  std::uint64_t truncated_walks = 0;  // step budget exhausted
  std::uint64_t escaped_walks = 0;    // left the escape radius
  double mean_steps = 0.0;
  double escape_bias_bound = 0.0;  // kernel at the escape radius
  bool qualitative = false;        // c > 0 away from balls
};

/// lambda_hat = -mean(weight * kernel(|X_exit - pole|)) over walks started at
/// the pole, in fixed-size blocks merged in block order. Deterministic in
/// (seed, n_walks, cfg) for every shard count.
RobinEstimate robin_constant(const SolvableDomain& dom, const Vec4& pole, double c_weight, std::uint64_t n_walks,
                             std::uint64_t seed, const WosConfig& cfg = {});

/// Single-threaded reference with the same block decomposition.
RobinEstimate robin_constant_serial(const SolvableDomain& dom, const Vec4& pole, double c_weight,
                                    std::uint64_t n_walks, std::uint64_t seed, const WosConfig& cfg = {});

}  // namespace hopf
