#include "hopf/flows.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <ostream>
#include <random>

#include "hopf/errors.hpp"

namespace hopf {

VectorField ueda_field(const HopfParams& params) { return {params.log_abs_a(), params.log_abs_b()}; }

VectorField deck_field(const HopfParams& params) { return {params.log_a(), params.log_b()}; }

bool proportional_to_xu(const VectorField& X, const HopfParams& params, double rel) {
  const double scale = std::max(std::abs(X.alpha), std::abs(X.beta));
  if (scale == 0.0) return false;
  return std::abs(X.alpha * params.log_abs_b() - X.beta * params.log_abs_a()) <= rel * scale;
}

CPair flow_point(const VectorField& X, CPair start, cplx t) {
  if (start.is_zero()) fail(ErrorKind::InvalidInput, "flow_point: start must be nonzero");
  return {start.z * std::exp(X.alpha * t), start.w * std::exp(X.beta * t)};
}

std::vector<HopfPoint> orbit_reduce_samples(const VectorField& X, CPair start, std::span<const cplx> t_grid,
                                            const HopfParams& params) {
  if (start.is_zero()) fail(ErrorKind::InvalidInput, "orbit_reduce_samples: start must be nonzero");
  std::vector<HopfPoint> out(t_grid.size());
  std::exception_ptr error;
  const auto count = static_cast<std::ptrdiff_t>(t_grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = reduce(flow_point(X, start, t_grid[static_cast<std::size_t>(i)]), params);
    } catch (...) {
#pragma omp critical(hopf_orbit_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

namespace {

cplx principal_log(cplx x) { return {std::log(std::abs(x)), normalized_arg(x)}; }

// Fiber values w_{n,k} = w0 exp(s (Log z' - Log z0) + n (s LogA - LogB) + 2 pi i k s),
// the branches of w = c z^s over z' combined with deck translates.
struct GeneralFiber {
  cplx s, base, step_n, step_k, w0;

  cplx value(int n, int k) const {
    return w0 * std::exp(base + static_cast<double>(n) * step_n + static_cast<double>(k) * step_k);
  }
};

GeneralFiber general_fiber(cplx s, cplx log_a, cplx log_b, cplx z_prime, cplx z0, cplx w0) {
  GeneralFiber f;
  f.s = s;
  f.w0 = w0;
  f.base = s * (principal_log(z_prime) - principal_log(z0));
  f.step_n = s * log_a - log_b;
  f.step_k = cplx(0.0, kTwoPi) * s;
  return f;
}

// For X proportional to X_u the fiber is a circle |w| = |c| |z'|^rho and the
// phase of w_{n,k} is n tau + k rho (mod 1), exact in integers when rational.
struct LeafFiber {
  cplx center;  // c * pr(z'^rho)
  bool rational = false;
  std::int64_t mp = 0, ql = 0, lp = 1;  // phase = (n m p + k q l) / (l p)
  double tau = 0.0, rho = 0.0;

  double phase(int n, int k) const {
    if (rational) {
      std::int64_t num = (static_cast<std::int64_t>(n) * mp + static_cast<std::int64_t>(k) * ql) % lp;
      if (num < 0) num += lp;
      return static_cast<double>(num) / static_cast<double>(lp);
    }
    double x = std::fmod(static_cast<double>(n) * tau + static_cast<double>(k) * rho, 1.0);
    if (x < 0.0) x += 1.0;
    return x;
  }

  cplx value(int n, int k) const {
    const double ph = phase(n, k);
    // Exact quarter turns keep K-valued fibers free of rounding.
    const double q4 = ph * 4.0;
    if (q4 == std::floor(q4)) {
      switch (static_cast<int>(q4)) {
        case 0: return center;
        case 1: return center * cplx(0.0, 1.0);
        case 2: return -center;
        case 3: return center * cplx(0.0, -1.0);
      }
    }
    return center * std::polar(1.0, kTwoPi * ph);
  }
};

bool near_one_phase(double frac) {
  double x = std::fmod(frac, 1.0);
  if (x < 0) x += 1.0;
  return x < 1e-12 || x > 1.0 - 1e-12;
}

std::vector<std::pair<int, int>> spiral(std::size_t count, bool n_deg, bool k_deg) {
  std::vector<std::pair<int, int>> out;
  if (count == 0) return out;
  out.reserve(count);
  if (n_deg && k_deg) {
    out.emplace_back(0, 0);
    return out;
  }
  if (n_deg || k_deg) {
    for (int i = 0; out.size() < count; ++i) {
      const int v = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
      out.push_back(n_deg ? std::pair{0, v} : std::pair{v, 0});
    }
    return out;
  }
  out.emplace_back(0, 0);
  for (int r = 1; out.size() < count; ++r) {
    for (int k = -r + 1; k <= r && out.size() < count; ++k) out.emplace_back(r, k);
    for (int n = r - 1; n >= -r && out.size() < count; --n) out.emplace_back(n, r);
    for (int k = r - 1; k >= -r && out.size() < count; --k) out.emplace_back(-r, k);
    for (int n = -r + 1; n <= r && out.size() < count; ++n) out.emplace_back(n, -r);
  }
  return out;
}

// Keeps the first-visited representative of every cluster of values within
// relative distance tol.
std::vector<FiberSample> deduplicate(std::vector<FiberSample> samples, double tol) {
  const std::size_t n = samples.size();
  std::vector<double> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = std::log(std::abs(samples[i].w));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key[x] < key[y]; });
  std::vector<char> dup(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = order[a];
    for (std::size_t b = a + 1; b < n && key[order[b]] - key[i] <= 2.0 * tol; ++b) {
      const std::size_t j = order[b];
      const double scale = std::max(std::abs(samples[i].w), std::abs(samples[j].w));
      if (std::abs(samples[i].w - samples[j].w) <= tol * scale) dup[std::max(i, j)] = 1;
    }
  }
  std::vector<FiberSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!dup[i]) out.push_back(samples[i]);
  return out;
}

template <class Fiber>
FiberSet assemble(const Fiber& fiber, cplx z_prime, std::size_t count, bool n_deg, bool k_deg,
                  const FiberOptions& opts) {
  FiberSet out;
  out.z_prime = z_prime;
  out.n_axis_degenerate = n_deg;
  out.k_axis_degenerate = k_deg;
  const auto lattice = spiral(count, n_deg, k_deg);
  std::vector<FiberSample> raw(lattice.size());
  const auto m = static_cast<std::ptrdiff_t>(lattice.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const auto [n, k] = lattice[static_cast<std::size_t>(i)];
    raw[static_cast<std::size_t>(i)] = {n, k, fiber.value(n, k)};
  }
  out.samples = deduplicate(std::move(raw), opts.dedup_tol);
  out.arguments.reserve(out.samples.size());
  out.min_abs = out.samples.empty() ? 0.0 : std::abs(out.samples.front().w);
  out.max_abs = out.min_abs;
  for (const auto& s : out.samples) {
    const double r = std::abs(s.w);
    out.min_abs = std::min(out.min_abs, r);
    out.max_abs = std::max(out.max_abs, r);
    out.arguments.push_back(normalized_arg(s.w));
  }
  for (int t = 0; t < opts.decay_terms; ++t) {
    out.decay_n.push_back(std::abs(fiber.value(t, 0)));
    out.decay_k.push_back(std::abs(fiber.value(0, t)));
  }
  return out;
}

}  // namespace

FiberSet fiber_set(const VectorField& X, cplx z_prime, const InvariantSet& inv, std::size_t count,
                   const FiberOptions& opts) {
  if (X.alpha == 0.0) fail(ErrorKind::Domain, "fiber_set: alpha = 0, the orbit is vertical and has no z-fiber");
  if (z_prime == 0.0) fail(ErrorKind::InvalidInput, "fiber_set: z' must be nonzero");
  if (opts.start.z == 0.0) fail(ErrorKind::InvalidInput, "fiber_set: start must have z != 0");
  const HopfParams& params = inv.params;

  if (proportional_to_xu(X, params)) {
    LeafFiber leaf;
    leaf.rho = inv.rho;
    const cplx zr = z_prime / opts.start.z;
    // c pr(z'^rho) with c = w0 / pr(z0^rho).
    leaf.center = opts.start.w * std::polar(std::pow(std::abs(zr), inv.rho),
                                            inv.rho * (normalized_arg(z_prime) - normalized_arg(opts.start.z)));
    bool n_deg, k_deg;
    if (inv.case_tag == CaseTag::CaseB2) {
      leaf.rational = true;
      leaf.lp = inv.l * inv.p;
      leaf.mp = inv.m * inv.p;
      leaf.ql = inv.q * inv.l;
      n_deg = leaf.mp % leaf.lp == 0;
      k_deg = leaf.ql % leaf.lp == 0;
    } else {
      leaf.tau = tau_for(params, inv.rho);
      n_deg = near_one_phase(leaf.tau);
      k_deg = near_one_phase(leaf.rho);
    }
    return assemble(leaf, z_prime, count, n_deg, k_deg, opts);
  }

  const GeneralFiber fiber =
      general_fiber(X.beta / X.alpha, params.log_a(), params.log_b(), z_prime, opts.start.z, opts.start.w);
  const bool n_deg = std::abs(std::exp(fiber.step_n) - 1.0) <= 1e-12;
  const bool k_deg = std::abs(std::exp(fiber.step_k) - 1.0) <= 1e-12;
  return assemble(fiber, z_prime, count, n_deg, k_deg, opts);
}

double star_discrepancy_unit(std::vector<double> x) {
  if (x.empty()) fail(ErrorKind::InvalidInput, "star_discrepancy: empty point set");
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, hi - x[i], x[i] - lo});
  }
  return d;
}

double star_discrepancy(std::span<const double> angles) {
  if (angles.empty()) fail(ErrorKind::InvalidInput, "star_discrepancy: empty point set");
  std::vector<double> x;
  x.reserve(angles.size());
  for (double a : angles) {
    if (!std::isfinite(a)) fail(ErrorKind::InvalidInput, "star_discrepancy: non-finite angle");
    double u = std::fmod(a, kTwoPi) / kTwoPi;
    if (u < 0.0) u += 1.0;
    if (u >= 1.0) u = 0.0;
    x.push_back(u);
  }
  return star_discrepancy_unit(std::move(x));
}

std::string_view to_string(ClosureTag tag) {
  switch (tag) {
    case ClosureTag::LeviFlatHypersurface: return "LeviFlatHypersurface";
    case ClosureTag::CompactTorus: return "CompactTorus";
    case ClosureTag::ContainsBothTori: return "ContainsBothTori";
    case ClosureTag::ContainsTaOnly: return "ContainsTaOnly";
    case ClosureTag::ContainsTbOnly: return "ContainsTbOnly";
  }
  return "?";
}

namespace {

// |values| along the lattice axis on which the fiber shrinks fastest.
std::vector<double> shrinking_axis(const GeneralFiber& f, int terms) {
  const double rn = std::exp(f.step_n.real());
  const double rk = std::exp(f.step_k.real());
  const bool use_n = std::fabs(std::log(rn)) >= std::fabs(std::log(rk));
  const double r = use_n ? rn : rk;
  const int dir = r < 1.0 ? 1 : -1;
  std::vector<double> out;
  for (int t = 0; t < terms; ++t) {
    out.push_back(std::abs(use_n ? f.value(dir * t, 0) : f.value(0, dir * t)));
  }
  return out;
}

}  // namespace

ClosureClass classify_orbit_closure(const VectorField& X, const InvariantSet& inv, const EvidenceConfig& cfg) {
  if (X.is_zero()) fail(ErrorKind::InvalidInput, "classify_orbit_closure: zero vector field");
  const HopfParams& params = inv.params;
  ClosureClass out{};
  constexpr int kDecayTerms = 41;

  if (X.alpha != 0.0 && X.beta != 0.0 && proportional_to_xu(X, params)) {
    FiberOptions fopts;
    fopts.start = cfg.start;
    const FiberSet fiber = fiber_set(X, cfg.z_prime, inv, cfg.fiber_count, fopts);
    out.evidence.fiber_cardinality = fiber.samples.size();
    out.evidence.fiber_discrepancy = star_discrepancy(fiber.arguments);

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<cplx> grid(cfg.orbit_samples);
    for (auto& t : grid) t = {u(rng), u(rng)};
    const auto pts = orbit_reduce_samples(X, cfg.start, grid, params);
    const double c = std::abs(cfg.start.w) / std::pow(std::abs(cfg.start.z), inv.rho);
    double worst = 0.0;
    for (const auto& p : pts) {
      worst = std::max(worst, std::fabs(std::abs(p.rep.w) - c * std::pow(std::abs(p.rep.z), inv.rho)));
    }
    out.evidence.modulus_residual = worst;

    if (inv.case_tag == CaseTag::CaseB2) {
      out.tag = ClosureTag::CompactTorus;
      out.sheets = inv.nu;
    } else {
      out.tag = ClosureTag::LeviFlatHypersurface;
    }
    return out;
  }

  if (X.alpha == 0.0) {
    out.tag = ClosureTag::ContainsTbOnly;
    // (z0, b^k w0) ~ (z0 / a^k, w0): |z| shrinks to T_b.
    std::vector<cplx> grid;
    for (int k = 0; k < kDecayTerms; ++k) grid.push_back(static_cast<double>(k) * params.log_b() / X.beta);
    for (const auto& p : orbit_reduce_samples(X, cfg.start, grid, params)) {
      out.evidence.tb_decay.push_back(std::abs(p.rep.z));
    }
    return out;
  }

  const GeneralFiber wf =
      general_fiber(X.beta / X.alpha, params.log_a(), params.log_b(), cfg.z_prime, cfg.start.z, cfg.start.w);
  out.evidence.ta_decay = shrinking_axis(wf, kDecayTerms);
  if (X.beta == 0.0) {
    out.tag = ClosureTag::ContainsTaOnly;
    return out;
  }
  out.tag = ClosureTag::ContainsBothTori;
  // Roles of z and w exchanged: z = c w^{alpha/beta} over w' = z'.
  const GeneralFiber zf =
      general_fiber(X.alpha / X.beta, params.log_b(), params.log_a(), cfg.z_prime, cfg.start.w, cfg.start.z);
  out.evidence.tb_decay = shrinking_axis(zf, kDecayTerms);
  return out;
}

void write_orbit_csv(std::ostream& os, const VectorField& X, CPair start, std::span<const cplx> t_grid,
                     const HopfParams& params) {
  const auto reduced = orbit_reduce_samples(X, start, t_grid, params);
  os << "t_re,t_im,z_re,z_im,w_re,w_im,rep_z_re,rep_z_im,rep_w_re,rep_w_im,lift_index,on_Ta,on_Tb\n";
  os.precision(17);
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const CPair raw = flow_point(X, start, t_grid[i]);
    const HopfPoint& p = reduced[i];
    os << t_grid[i].real() << ',' << t_grid[i].imag() << ',' << raw.z.real() << ',' << raw.z.imag() << ','
       << raw.w.real() << ',' << raw.w.imag() << ',' << p.rep.z.real() << ',' << p.rep.z.imag() << ','
       << p.rep.w.real() << ',' << p.rep.w.imag() << ',' << p.lift_index << ',' << (p.on_Ta ? 1 : 0) << ','
       << (p.on_Tb ? 1 : 0) << '\n';
  }
}

void write_fiber_csv(std::ostream& os, const FiberSet& fiber) {
  os << "n,k,w_re,w_im,abs_w,arg_w\n";
  os.precision(17);
  for (std::size_t i = 0; i < fiber.samples.size(); ++i) {
    const auto& s = fiber.samples[i];
    os << s.n << ',' << s.k << ',' << s.w.real() << ',' << s.w.imag() << ',' << std::abs(s.w) << ','
       << fiber.arguments[i] << '\n';
  }
}

}  // namespace hopf
