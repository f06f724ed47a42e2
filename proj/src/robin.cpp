#include "hopf/robin.hpp"

#include <cmath>
#include <ostream>

#include "hopf/errors.hpp"

namespace hopf {

Vec4 to_vec4(CPair p) { return {p.z.real(), p.z.imag(), p.w.real(), p.w.imag()}; }

namespace {

CPair to_cpair(const Vec4& x) { return {{x[0], x[1]}, {x[2], x[3]}}; }

}  // namespace

SolvableDomain to_solvable(const TranslatedDomain& td, double lipschitz) {
  if (const auto* h = std::get_if<ProductHalfPlane>(&td.form)) return ProductHalfPlaneR4{h->theta};
  if (const auto* m = std::get_if<ModulusRegion>(&td.form)) {
    const ModulusRegion region = *m;
    return GenericDomain{
        [td](const Vec4& x) { return td.contains(to_cpair(x)); },
        [region](const Vec4& x) { return modulus_region_distance(region, to_cpair(x), 1e-6).lower; },
        {},
    };
  }
  if (!(lipschitz > 0.0)) fail(ErrorKind::InvalidInput, "generic translates need a positive Lipschitz bound");
  return GenericDomain{
      [td](const Vec4& x) { return td.contains(to_cpair(x)); },
      [td, lipschitz](const Vec4& x) { return std::abs(td.residual(to_cpair(x))) / lipschitz; },
      {},
  };
}

std::vector<BoundaryRow> boundary_behavior_experiment(const DomainSpec& spec, const std::vector<CPair>& anchors,
                                                      const HopfParams& params, const RobinBudget& budget) {
  std::vector<BoundaryRow> rows;
  rows.reserve(anchors.size());
  for (const CPair& a : anchors) {
    if (!evaluate_domain(spec, a, params).inside) fail(ErrorKind::Domain, "boundary experiment anchor lies outside D");
    const TranslatedDomain td = translate_domain(spec, a, params);
    BoundaryRow row{a, std::nullopt, distance_to_identity(td, {.lipschitz = budget.lipschitz}), {}};
    if (const auto* h = std::get_if<ProductHalfPlane>(&td.form)) row.theta = h->theta;
    row.est = robin_constant(to_solvable(td, budget.lipschitz), kIdentity4, budget.c_weight, budget.walks, budget.seed,
                             budget.wos);
    rows.push_back(row);
  }
  return rows;
}

void write_boundary_csv(std::ostream& os, const std::vector<BoundaryRow>& rows) {
  os << "z_re,z_im,w_re,w_im,theta,dist_lower,dist_upper,lambda_hat,stderr,n_walks,truncated_walks\n";
  os.precision(17);
  for (const auto& r : rows) {
    os << r.anchor.z.real() << ',' << r.anchor.z.imag() << ',' << r.anchor.w.real() << ',' << r.anchor.w.imag() << ',';
    if (r.theta) os << *r.theta;
    os << ',' << r.dist.lower << ',' << r.dist.upper << ',' << r.est.lambda_hat << ',' << r.est.stderr_ << ','
       << r.est.n_walks << ',' << r.est.truncated_walks << '\n';
  }
}

PshReport psh_spot_check(const std::function<SolvableDomain(CPair)>& translate_at, CPair anchor, CPair direction,
                         double disk_radius, int grid_n, const RobinBudget& budget) {
  if (grid_n < 1 || !(disk_radius > 0.0)) fail(ErrorKind::InvalidInput, "psh_spot_check needs grid_n >= 1 and r > 0");
  auto value = [&](CPair p) {
    return robin_constant(translate_at(p), kIdentity4, budget.c_weight, budget.walks, budget.seed, budget.wos);
  };
  PshReport rep;
  const RobinEstimate c = value(anchor);
  rep.center_value = -c.lambda_hat;
  double var_sum = 0.0;
  for (int j = 0; j < grid_n; ++j) {
    const cplx t = std::polar(disk_radius, kTwoPi * j / grid_n);
    const RobinEstimate e = value({anchor.z + t * direction.z, anchor.w + t * direction.w});
    rep.ring_values.push_back(-e.lambda_hat);
    rep.ring_mean += -e.lambda_hat;
    var_sum += e.stderr_ * e.stderr_;
  }
  rep.ring_mean /= grid_n;
  rep.residual = rep.ring_mean - rep.center_value;
  rep.combined_stderr = std::sqrt(c.stderr_ * c.stderr_ + var_sum / (static_cast<double>(grid_n) * grid_n));
  rep.consistent = rep.residual >= -3.0 * rep.combined_stderr;
  return rep;
}

PshReport psh_spot_check(const DomainSpec& spec, CPair anchor, CPair direction, double disk_radius, int grid_n,
                         const RobinBudget& budget, const HopfParams& params) {
  auto inside = [&](CPair p) { return !p.is_zero() && evaluate_domain(spec, p, params).inside; };
  if (!inside(anchor)) fail(ErrorKind::Precondition, "psh_spot_check: anchor lies outside D");
  constexpr int kCheck = 16;
  for (int i = 1; i <= kCheck; ++i) {
    for (int j = 0; j < 4 * kCheck; ++j) {
      const cplx t = std::polar(disk_radius * i / kCheck, kTwoPi * j / (4 * kCheck));
      if (!inside({anchor.z + t * direction.z, anchor.w + t * direction.w})) {
        fail(ErrorKind::Precondition, "psh_spot_check: the complex disk leaves D");
      }
    }
  }
  return psh_spot_check([&](CPair p) { return to_solvable(translate_domain(spec, p, params), budget.lipschitz); },
                        anchor, direction, disk_radius, grid_n, budget);
}

}  // namespace hopf
