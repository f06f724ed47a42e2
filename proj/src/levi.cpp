#include "hopf/levi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "hopf/errors.hpp"

namespace hopf {

Jet2 Jet2::scaled(double s) const {
  Jet2 out = *this;
  out.psi *= s;
  out.d_z *= s;
  out.d_w *= s;
  out.d_zzbar *= s;
  out.d_wwbar *= s;
  out.d_zwbar *= s;
  return out;
}

double levi_form(const Jet2& j) {
  return j.d_zzbar * std::norm(j.d_w) - 2.0 * (j.d_zwbar * std::conj(j.d_z) * j.d_w).real() +
         j.d_wwbar * std::norm(j.d_z);
}

Jet2 numeric_jet(const std::function<double(CPair)>& psi, CPair point, double h) {
  if (!(h > 0.0)) fail(ErrorKind::InvalidInput, "numeric_jet needs h > 0");
  using R4 = std::array<double, 4>;
  const R4 x0{point.z.real(), point.z.imag(), point.w.real(), point.w.imag()};
  auto f = [&](R4 x) {
    const double v = psi({{x[0], x[1]}, {x[2], x[3]}});
    if (!std::isfinite(v)) fail(ErrorKind::Evaluation, "numeric_jet: non-finite value on the stencil");
    return v;
  };
  auto shifted = [&](int i, double di, int j = -1, double dj = 0.0) {
    R4 x = x0;
    x[static_cast<std::size_t>(i)] += di;
    if (j >= 0) x[static_cast<std::size_t>(j)] += dj;
    return f(x);
  };

  const double f0 = f(x0);
  std::array<double, 4> g{}, dd{};
  for (int i = 0; i < 4; ++i) {
    const double fp = shifted(i, h), fm = shifted(i, -h);
    g[static_cast<std::size_t>(i)] = (fp - fm) / (2.0 * h);
    dd[static_cast<std::size_t>(i)] = (fp - 2.0 * f0 + fm) / (h * h);
  }
  auto mixed = [&](int i, int j) {
    return (shifted(i, h, j, h) - shifted(i, h, j, -h) - shifted(i, -h, j, h) + shifted(i, -h, j, -h)) / (4.0 * h * h);
  };
  const double xu = mixed(0, 2), xv = mixed(0, 3), yu = mixed(1, 2), yv = mixed(1, 3);

  Jet2 j;
  j.point = point;
  j.psi = f0;
  j.d_z = 0.5 * cplx(g[0], -g[1]);
  j.d_w = 0.5 * cplx(g[2], -g[3]);
  j.d_zzbar = 0.25 * (dd[0] + dd[1]);
  j.d_wwbar = 0.25 * (dd[2] + dd[3]);
  j.d_zwbar = 0.25 * cplx(xu + yv, xv - yu);
  return j;
}

Jet2 extrapolated_jet(const std::function<double(CPair)>& psi, CPair point, double h) {
  const Jet2 coarse = numeric_jet(psi, point, h);
  const Jet2 fine = numeric_jet(psi, point, 0.5 * h);
  auto mix = [](auto a, auto b) { return (4.0 * b - a) / 3.0; };
  Jet2 j = fine;
  j.d_z = mix(coarse.d_z, fine.d_z);
  j.d_w = mix(coarse.d_w, fine.d_w);
  j.d_zzbar = mix(coarse.d_zzbar, fine.d_zzbar);
  j.d_wwbar = mix(coarse.d_wwbar, fine.d_wwbar);
  j.d_zwbar = mix(coarse.d_zwbar, fine.d_zwbar);
  return j;
}

LeviScanReport pseudoconvexity_scan(const DomainSpec& spec, std::size_t n_samples, double tol,
                                    const HopfParams& params, std::uint64_t seed, const LeviScanOptions& opts) {
  const BoundarySamples bs = sample_boundary(spec, params, n_samples, seed, opts.sampling);
  const auto psi = [&](CPair p) { return local_residual(spec, p, params); };

  LeviScanReport rep;
  rep.boundary_samples = bs.boundary.size();
  rep.skipped = bs.skipped;
  rep.min_levi = std::numeric_limits<double>::infinity();
  for (const CPair& p : bs.boundary) {
    const double scale = std::min({1.0, std::abs(p.z), std::abs(p.w)});
    const double levi = levi_form(extrapolated_jet(psi, p, opts.h_scale * scale));
    rep.samples.push_back({p, levi});
    rep.min_levi = std::min(rep.min_levi, levi);
    rep.max_abs_levi = std::max(rep.max_abs_levi, std::abs(levi));
    if (levi < -tol) rep.violations.push_back({p, levi});
  }
  if (rep.samples.empty()) rep.min_levi = 0.0;
  rep.pseudoconvex = !rep.samples.empty() && rep.violations.empty();
  return rep;
}

void write_levi_csv(std::ostream& os, const std::vector<LeviSample>& samples) {
  os << "z_re,z_im,w_re,w_im,levi\n";
  os.precision(17);
  for (const auto& s : samples) {
    os << s.point.z.real() << ',' << s.point.z.imag() << ',' << s.point.w.real() << ',' << s.point.w.imag() << ','
       << s.levi << '\n';
  }
}

}  // namespace hopf
