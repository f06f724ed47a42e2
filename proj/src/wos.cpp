#include "hopf/wos.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <omp.h>

#include "hopf/errors.hpp"

namespace hopf {

double norm(const Vec4& x) { return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]); }

Vec4 operator-(const Vec4& a, const Vec4& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }

namespace {

double dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

HalfSpace as_half_space(const ProductHalfPlaneR4& p) {
  return {{0.0, 0.0, std::cos(p.theta), -std::sin(p.theta)}, 0.0};
}

Vec4 project(const SolvableDomain& dom, const Vec4& x) {
  if (const auto* b = std::get_if<Ball>(&dom)) {
    const Vec4 d = x - b->center;
    const double s = b->radius / norm(d);
    return {b->center[0] + s * d[0], b->center[1] + s * d[1], b->center[2] + s * d[2], b->center[3] + s * d[3]};
  }
  auto half = [&](const HalfSpace& h) {
    const double t = dot(h.normal, x) - h.offset;
    return Vec4{x[0] - t * h.normal[0], x[1] - t * h.normal[1], x[2] - t * h.normal[2], x[3] - t * h.normal[3]};
  };
  if (const auto* h = std::get_if<HalfSpace>(&dom)) return half(*h);
  if (const auto* p = std::get_if<ProductHalfPlaneR4>(&dom)) return half(as_half_space(*p));
  const auto& g = std::get<GenericDomain>(dom);
  return g.project ? g.project(x) : x;
}

struct BlockStats {
  double sum = 0.0;
  double sumsq = 0.0;
  std::uint64_t count = 0;
  std::uint64_t truncated = 0;
  std::uint64_t escaped = 0;
  std::uint64_t steps = 0;
};

/// sqrt(c) r / (2 I_1(sqrt(c) r)): the expected survival over one step of
/// radius r for the screened operator (Laplacian - c) in R^4.
double survival_factor(double c, double r) {
  const double s = std::sqrt(c) * r;
  if (s < 1e-8) return 1.0 - s * s / 8.0;
  return s / (2.0 * std::cyl_bessel_i(1.0, s));
}

double walk(const SolvableDomain& dom, const Vec4& pole, double c, double r_max, const WosConfig& cfg,
            std::mt19937_64& rng, BlockStats& st) {
  std::normal_distribution<double> normal;
  Vec4 x = pole;
  double weight = 1.0;
  for (std::uint64_t step = 0; step < cfg.max_steps; ++step) {
    const double d = boundary_distance(dom, x);
    if (d <= cfg.eps_shell) {
      st.steps += step;
      return weight * kernel(norm(project(dom, x) - pole));
    }
    if (norm(x - pole) > r_max) {
      ++st.escaped;
      st.steps += step;
      return 0.0;
    }
    if (c > 0.0) weight *= survival_factor(c, d);
    Vec4 g{normal(rng), normal(rng), normal(rng), normal(rng)};
    const double s = d / norm(g);
    for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(i)] += s * g[static_cast<std::size_t>(i)];
  }
  ++st.truncated;
  st.steps += cfg.max_steps;
  return 0.0;
}

BlockStats run_block(const SolvableDomain& dom, const Vec4& pole, double c, double r_max, const WosConfig& cfg,
                     std::uint64_t seed, std::uint64_t block, std::uint64_t walks) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  BlockStats st;
  for (std::uint64_t i = 0; i < walks; ++i) {
    const double v = walk(dom, pole, c, r_max, cfg, rng, st);
    st.sum += v;
    st.sumsq += v * v;
    ++st.count;
  }
  return st;
}

struct Plan {
  double r_max;
  std::uint64_t blocks;
};

Plan plan(const SolvableDomain& dom, const Vec4& pole, double c_weight, std::uint64_t n_walks, const WosConfig& cfg) {
  if (!(c_weight >= 0.0) || !std::isfinite(c_weight)) fail(ErrorKind::InvalidInput, "c_weight must be >= 0");
  if (n_walks == 0) fail(ErrorKind::InvalidInput, "n_walks must be positive");
  if (cfg.block_size == 0 || !(cfg.eps_shell > 0.0) || !(cfg.r_max_factor > 1.0)) {
    fail(ErrorKind::InvalidInput, "invalid walk-on-spheres configuration");
  }
  const double d0 = boundary_distance(dom, pole);
  if (!(d0 > cfg.eps_shell)) fail(ErrorKind::Domain, "pole must lie strictly inside the domain");
  return {cfg.r_max_factor * d0, (n_walks + cfg.block_size - 1) / cfg.block_size};
}

std::uint64_t walks_in_block(std::uint64_t b, std::uint64_t n_walks, std::size_t block_size) {
  return std::min<std::uint64_t>(block_size, n_walks - b * block_size);
}

RobinEstimate finish(const std::vector<BlockStats>& blocks, const SolvableDomain& dom, double c_weight,
                     std::uint64_t seed, double r_max) {
  BlockStats tot;
  for (const auto& b : blocks) {
    tot.sum += b.sum;
    tot.sumsq += b.sumsq;
    tot.count += b.count;
    tot.truncated += b.truncated;
    tot.escaped += b.escaped;
    tot.steps += b.steps;
  }
  RobinEstimate est;
  const double n = static_cast<double>(tot.count);
  const double mean = tot.sum / n;
  const double var = tot.count > 1 ? std::max(0.0, (tot.sumsq - n * mean * mean) / (n - 1.0)) : 0.0;
  est.lambda_hat = -mean;
  est.stderr_ = std::sqrt(var / n);
  est.n_walks = tot.count;
  est.c_weight = c_weight;
  est.seed = seed;
  est.truncated_walks = tot.truncated;
  est.escaped_walks = tot.escaped;
  est.mean_steps = static_cast<double>(tot.steps) / n;
  est.escape_bias_bound = kernel(r_max);
  est.qualitative = c_weight > 0.0 && !std::holds_alternative<Ball>(dom);
  return est;
}

}  // namespace

double boundary_distance(const SolvableDomain& dom, const Vec4& x) {
  if (const auto* b = std::get_if<Ball>(&dom)) return b->radius - norm(x - b->center);
  if (const auto* h = std::get_if<HalfSpace>(&dom)) return dot(h->normal, x) - h->offset;
  if (const auto* p = std::get_if<ProductHalfPlaneR4>(&dom)) {
    const HalfSpace h = as_half_space(*p);
    return dot(h.normal, x) - h.offset;
  }
  const auto& g = std::get<GenericDomain>(dom);
  return g.inside(x) ? g.distance(x) : -1.0;
}

double kernel(double r) {
  if (!(r > 0.0)) fail(ErrorKind::InvalidInput, "kernel needs r > 0");
  return 1.0 / (r * r);
}

RobinEstimate robin_constant_serial(const SolvableDomain& dom, const Vec4& pole, double c_weight,
                                    std::uint64_t n_walks, std::uint64_t seed, const WosConfig& cfg) {
  const Plan p = plan(dom, pole, c_weight, n_walks, cfg);
  std::vector<BlockStats> blocks(p.blocks);
  for (std::uint64_t b = 0; b < p.blocks; ++b) {
    blocks[b] = run_block(dom, pole, c_weight, p.r_max, cfg, seed, b, walks_in_block(b, n_walks, cfg.block_size));
  }
  return finish(blocks, dom, c_weight, seed, p.r_max);
}

RobinEstimate robin_constant(const SolvableDomain& dom, const Vec4& pole, double c_weight, std::uint64_t n_walks,
                             std::uint64_t seed, const WosConfig& cfg) {
  if (cfg.shards < 1) fail(ErrorKind::InvalidInput, "shards must be >= 1");
  const Plan p = plan(dom, pole, c_weight, n_walks, cfg);
  std::vector<BlockStats> blocks(p.blocks);
  const auto n_blocks = static_cast<std::int64_t>(p.blocks);
  // Generic domains may call back into user code that can throw.
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(cfg.shards)
  for (std::int64_t b = 0; b < n_blocks; ++b) {
    try {
      const auto ub = static_cast<std::uint64_t>(b);
      blocks[ub] = run_block(dom, pole, c_weight, p.r_max, cfg, seed, ub, walks_in_block(ub, n_walks, cfg.block_size));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return finish(blocks, dom, c_weight, seed, p.r_max);
}

}  // namespace hopf
