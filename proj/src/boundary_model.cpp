#include "hopf/boundary_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

double BoundaryModel::coefficient(std::size_t i, cplx z) const {
  return i < p.size() ? p[i].eval(z) : 0.0;
}

double BoundaryModel::psi(cplx z, cplx w) const {
  const double u = w.real();
  const std::size_t n = arc_coefficients.empty() ? p.size() : arc_coefficients.size();
  double acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    const double c = arc_coefficients.empty() ? p[i].eval(z) : arc_coefficients[i](z);
    acc = acc * u + c;
  }
  return w.imag() + acc;
}

void BoundaryModel::validate() const {
  if (truncation_degree < 0 || truncation_degree > kMaxPolyDegree) {
    fail(ErrorKind::InvalidInput, "boundary model truncation degree must lie in [0, 16]");
  }
  if (p.empty()) fail(ErrorKind::InvalidInput, "boundary model needs p0");
  for (const auto& q : p) {
    if (q.degree() > truncation_degree) fail(ErrorKind::InvalidInput, "coefficient exceeds the truncation degree");
  }
  if (std::abs(p[0].eval(0.0)) > 1e-14) fail(ErrorKind::InvalidInput, "boundary model needs p0(0) = 0");
  if (p.size() > 1 && std::abs(p[1].eval(0.0)) > 1e-14) fail(ErrorKind::InvalidInput, "boundary model needs p1(0) = 0");
}

double levi2_residual(const BoundaryModel& model, cplx z) {
  const RealPoly2 zero;
  const RealPoly2& p0 = model.p.empty() ? zero : model.p[0];
  const double p1 = model.coefficient(1, z);
  const double p2 = model.coefficient(2, z);
  const cplx p0_z = p0.d_z(z);
  const cplx p1_z = model.p.size() > 1 ? model.p[1].d_z(z) : 0.0;
  return (1.0 + p1 * p1) * p0.d_zzbar(z) - 2.0 * (p1_z * std::conj(p0_z) * cplx(p1, -1.0)).real() +
         2.0 * p2 * std::norm(p0_z);
}

std::string_view to_string(DiamondCase c) {
  switch (c) {
    case DiamondCase::Gradient: return "gradient";
    case DiamondCase::Subharmonic: return "subharmonic";
    case DiamondCase::HarmonicQuadratic: return "harmonic-quadratic";
    case DiamondCase::OddLeading: return "odd-leading";
    case DiamondCase::EvenLeadingMixed: return "even-leading-mixed";
    case DiamondCase::EvenLeadingRadial: return "even-leading-radial";
  }
  return "?";
}

CircleMax maximize_on_circle(const std::function<double(double)>& f, int grid) {
  const double step = kTwoPi / grid;
  CircleMax best{0.0, f(0.0)};
  int best_i = 0;
  for (int i = 1; i < grid; ++i) {
    const double v = f(i * step);
    if (v > best.value) best = {i * step, v}, best_i = i;
  }
  // Golden section on the bracket around the best grid point.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = (best_i - 1) * step, hi = (best_i + 1) * step;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      lo = x1, x1 = x2, f1 = f2;
      x2 = lo + inv_phi * (hi - lo), f2 = f(x2);
    } else {
      hi = x2, x2 = x1, f2 = f1;
      x1 = hi - inv_phi * (hi - lo), f1 = f(x1);
    }
  }
  const double x = 0.5 * (lo + hi), fx = f(x);
  if (fx > best.value) best = {std::fmod(x + kTwoPi, kTwoPi), fx};
  return best;
}

cplx eval_poly(const std::vector<cplx>& coeffs, cplx Z) {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * Z + *it;
  return acc;
}

CircleMax maximize_re_on_circle(const std::vector<cplx>& coeffs, int grid) {
  return maximize_on_circle([&](double t) { return eval_poly(coeffs, std::polar(1.0, t)).real(); }, grid);
}

std::vector<cplx> g_polynomial(const RealPoly2& p0, int d) {
  if (d < 3) fail(ErrorKind::InvalidInput, "g_polynomial applies to lowest degree >= 3");
  if (d > kMaxPolyDegree) fail(ErrorKind::InvalidInput, "g_polynomial: degree exceeds 16");
  const std::vector<cplx> e = complex_form(p0, d);
  std::vector<cplx> g(static_cast<std::size_t>(d + 1), 0.0);
  const int n = (d + 1) / 2;
  for (int k = 0; 2 * k < d; ++k) {
    const cplx c = 2.0 * e[static_cast<std::size_t>(k)];
    double factor = 1.0;
    if (d % 2 == 0) {
      factor = 1.0 - static_cast<double>((2 * n - k) * k) / (n * n);
      if (!(factor > 1e-12)) fail(ErrorKind::Evaluation, "g_polynomial: vanishing even-degree factor");
    }
    g[static_cast<std::size_t>(d - 2 * k)] = c * factor;
  }
  return g;
}

namespace {

constexpr double kCoefTol = 1e-14;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

DiamondResult diamond_search(const BoundaryModel& model, double r1) {
  if (!(r1 > 0.0) || !std::isfinite(r1)) fail(ErrorKind::InvalidInput, "diamond_search needs r1 > 0");
  model.validate();
  const RealPoly2& p0 = model.p[0];
  DiamondResult res;

  for (double frac : {0.125, 0.25, 0.5, 0.75, 0.95}) {
    for (int j = 0; j < 16; ++j) {
      const cplx z = std::polar(frac * r1, kTwoPi * j / 16);
      const double lr = levi2_residual(model, z);
      if (lr < -1e-12) {
        res.warnings.push_back("levi2 inequality fails at |z| = " + fmt(frac * r1) + " (residual " + fmt(lr) + ")");
        break;
      }
    }
  }

  const int d = p0.lowest_degree(kCoefTol);
  if (d < 0) {
    res.trace.push_back("p0 vanishes identically");
    return res;
  }
  res.trace.push_back("lowest homogeneous degree " + std::to_string(d));

  // Shrink r from r1/2 along a fixed direction, or maximize over each circle.
  auto shrink = [&](const std::function<double(double)>& pick_theta) {
    double r = 0.5 * r1;
    for (int h = 0; h <= kShrinkBudget; ++h, r *= 0.5) {
      const cplx z = std::polar(r, pick_theta(r));
      const double v = p0.eval(z);
      if (v > 0.0) {
        res.found = true;
        res.z_star = z;
        res.p0_value = v;
        res.halvings = h;
        res.trace.push_back("p0(z*) = " + fmt(v) + " at |z*| = " + fmt(r) + " after " + std::to_string(h) + " halvings");
        return;
      }
    }
    res.halvings = kShrinkBudget;
    res.trace.push_back("shrink budget exhausted");
  };
  auto fixed = [](double theta) { return [theta](double) { return theta; }; };
  auto take = [&](DiamondCase c, std::string note) {
    res.case_taken = c;
    res.trace.push_back(std::string(to_string(c)) + ": " + note);
  };

  if (d == 1) {
    const double gx = p0.coef(1, 0), gy = p0.coef(0, 1);
    take(DiamondCase::Gradient, "grad p0(0) = (" + fmt(gx) + ", " + fmt(gy) + ")");
    shrink(fixed(std::atan2(gy, gx)));
    return res;
  }

  const std::vector<cplx> e = complex_form(p0, d);
  if (d == 2) {
    const double a11 = e[1].real();
    const cplx a20 = 2.0 * e[0];
    if (a11 > kCoefTol) {
      take(DiamondCase::Subharmonic, "a11 = " + fmt(a11) + " > 0, maximizing p0 on circles");
      shrink([&](double r) { return maximize_on_circle([&](double t) { return p0.eval(std::polar(r, t)); }).theta; });
      return res;
    }
    if (std::abs(a11) <= kCoefTol && std::abs(a20) > kCoefTol) {
      take(DiamondCase::HarmonicQuadratic, "a11 = 0, a20 = " + fmt(a20.real()) + (a20.imag() < 0 ? "" : "+") +
                                               fmt(a20.imag()) + "i");
      shrink(fixed(-std::arg(a20) / 2.0));
      return res;
    }
    take(DiamondCase::EvenLeadingMixed, "a11 = " + fmt(a11) + " < 0");
    shrink(fixed(std::arg(a20) == 0.0 ? 0.0 : -std::arg(a20) / 2.0));
    return res;
  }

  if (d % 2 == 1) {
    const CircleMax m = maximize_re_on_circle(g_polynomial(p0, d));
    take(DiamondCase::OddLeading, "max Re g = " + fmt(m.value) + " at theta = " + fmt(m.theta));
    shrink(fixed(m.theta));
    return res;
  }

  const int n = d / 2;
  bool mixed = false;
  for (int k = 0; k < n; ++k) mixed = mixed || std::abs(e[static_cast<std::size_t>(k)]) > kCoefTol;
  if (mixed) {
    const CircleMax m = maximize_re_on_circle(g_polynomial(p0, d));
    take(DiamondCase::EvenLeadingMixed, "max Re g = " + fmt(m.value) + " at theta = " + fmt(m.theta));
    shrink(fixed(m.theta));
    return res;
  }
  const double an = e[static_cast<std::size_t>(n)].real();
  if (an > 0.0) {
    take(DiamondCase::EvenLeadingRadial, "a_n = " + fmt(an) + " > 0");
    shrink([&](double r) { return maximize_on_circle([&](double t) { return p0.eval(std::polar(r, t)); }).theta; });
    return res;
  }
  res.trace.push_back("leading part is a_n |z|^" + std::to_string(d) + " with a_n = " + fmt(an) + " <= 0");
  return res;
}

SweepReport sweep_cover_check(const BoundaryModel& model, double r1, std::size_t n_w_samples, std::uint64_t seed) {
  model.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  auto arc_p0 = [&](cplx z) { return model.psi(z, 0.0); };
  double max_p0 = 0.0;
  for (int i = 0; i < 256; ++i) {
    max_p0 = std::max(max_p0, std::abs(arc_p0(std::polar(r1 * std::sqrt(uni(rng)), kTwoPi * uni(rng)))));
  }
  if (!(max_p0 > 1e-14)) fail(ErrorKind::Precondition, "sweep_cover_check: p0 vanishes on the disk |z| < r1");

  SweepReport rep;
  rep.diamond = diamond_search(model, r1);
  if (!rep.diamond.found) return rep;
  const cplx zs = rep.diamond.z_star;

  double r_prime = rep.diamond.p0_value;
  for (int h = 0; h <= kShrinkBudget; ++h, r_prime *= 0.5) {
    std::vector<SweepSample> samples;
    bool ok = true;
    for (std::size_t attempts = 0; samples.size() < n_w_samples && attempts < 100 * n_w_samples; ++attempts) {
      const cplx w = std::polar(r_prime * std::sqrt(uni(rng)), kTwoPi * uni(rng));
      if (!(model.psi(0.0, w) < 0.0)) continue;
      auto f = [&](double t) { return model.psi(t * zs, w); };
      if (!(f(1.0) > 0.0)) {
        ok = false;
        break;
      }
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
      }
      const double t = std::abs(f(lo)) < std::abs(f(hi)) ? lo : hi;
      samples.push_back({w, t, f(t)});
    }
    if (ok && !samples.empty()) {
      rep.r_prime = r_prime;
      rep.halvings = h;
      rep.certified = true;
      rep.samples = std::move(samples);
      for (const auto& s : rep.samples) rep.max_residual = std::max(rep.max_residual, std::abs(s.residual));
      return rep;
    }
  }
  return rep;
}

}  // namespace hopf
