#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "hopf/domains.hpp"
#include "hopf/errors.hpp"

namespace hopf {

namespace {

struct Node {
  double lo, hi, lb;
  bool operator>(const Node& o) const { return lb > o.lb; }
};

}  // namespace

DistanceBracket modulus_curve_distance(double r0, double s0, double k, double rho, double gap) {
  if (!(k > 0.0) || !(rho > 0.0) || r0 < 0.0 || s0 < 0.0) {
    fail(ErrorKind::InvalidInput, "modulus_curve_distance: need k > 0, rho > 0 and a point in the quarter plane");
  }
  auto curve = [&](double r) { return k * std::pow(r, rho); };
  auto dist = [&](double r) { return std::hypot(r - r0, curve(r) - s0); };
  // The curve is increasing, so a parameter interval lies in the box
  // [lo, hi] x [s(lo), s(hi)] and the point-to-box distance bounds it below.
  auto box_lb = [&](double lo, double hi) {
    const double dx = std::max({0.0, lo - r0, r0 - hi});
    const double dy = std::max({0.0, curve(lo) - s0, s0 - curve(hi)});
    return std::hypot(dx, dy);
  };

  double best = std::min(dist(r0), dist(0.0));
  const double r_hi = r0 + best;  // any r beyond this is farther than best
  best = std::min(best, dist(r_hi));

  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  queue.push({0.0, r_hi, box_lb(0.0, r_hi)});
  double floor_lb = best;
  for (int iter = 0; iter < 2'000'000 && !queue.empty(); ++iter) {
    const Node top = queue.top();
    if (top.lb >= best - gap) break;
    queue.pop();
    const double mid = 0.5 * (top.lo + top.hi);
    if (mid <= top.lo || mid >= top.hi) {
      floor_lb = std::min(floor_lb, top.lb);
      continue;
    }
    best = std::min(best, dist(mid));
    queue.push({top.lo, mid, box_lb(top.lo, mid)});
    queue.push({mid, top.hi, box_lb(mid, top.hi)});
  }
  double lower = std::min(best, floor_lb);
  if (!queue.empty()) lower = std::min(lower, queue.top().lb);
  return {lower, best};
}

DistanceBracket modulus_region_distance(const ModulusRegion& region, CPair pt, double gap) {
  const double r0 = std::abs(pt.z), s0 = std::abs(pt.w);
  DistanceBracket out{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (double k : {region.k_lo, region.k_hi}) {
    if (!(k > 0.0) || std::isinf(k)) continue;
    const DistanceBracket d = modulus_curve_distance(r0, s0, k, region.rho, gap);
    out.lower = std::min(out.lower, d.lower);
    out.upper = std::min(out.upper, d.upper);
  }
  return out;
}

}  // namespace hopf
