#include "hopf/domains.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

/// log(|w| / |z|^rho), with the conventions -inf on T_a and +inf on T_b.
double log_modulus_ratio(CPair pt, double rho) {
  if (pt.w == 0.0) return -kInf;
  if (pt.z == 0.0) return kInf;
  return std::log(std::abs(pt.w)) - rho * std::log(std::abs(pt.z));
}

double safe_log(double x) { return x == 0.0 ? -kInf : (std::isinf(x) ? kInf : std::log(x)); }

double band_residual(double L, double log_lo, double log_hi) { return std::max(log_lo - L, L - log_hi); }

double level_residual(const DomainSpec& spec, double L) {
  return std::visit(
      overloaded{
          [&](const LevelBand& s) { return band_residual(L, std::log(s.k1), std::log(s.k2)); },
          [&](const SubLevel& s) { return L - std::log(s.k); },
          [&](const SuperLevel& s) { return std::log(s.k) - L; },
          [](const auto&) { return 0.0; },
      },
      spec.kind);
}

bool is_level_family(const DomainSpec& spec) {
  return std::holds_alternative<LevelBand>(spec.kind) || std::holds_alternative<SubLevel>(spec.kind) ||
         std::holds_alternative<SuperLevel>(spec.kind);
}

void require_nonzero(CPair pt, const char* what) {
  if (pt.is_zero()) fail(ErrorKind::InvalidInput, std::string(what) + ": point must not be (0, 0)");
}

void require_nemirovskii_params(const HopfParams& params) {
  if (!params.b_real_gt_one()) fail(ErrorKind::InvalidInput, "Nemirovskii domains need b real with b > 1");
}

/// c = w / z^rho on the principal branch (arg z in [0, 2pi)).
ProjectivePoint leaf_coordinate(CPair pt, double rho) {
  if (pt.z == 0.0) return {0.0, true};
  if (pt.w == 0.0) return {0.0, false};
  const cplx zr = std::polar(std::pow(std::abs(pt.z), rho), rho * normalized_arg(pt.z));
  return {pt.w / zr, false};
}

double nemirovskii_value(const Nemirovskii& n, cplx w) { return n.A * w.real() + n.B * w.imag(); }

}  // namespace

std::string_view to_string(PointRelation r) {
  switch (r) {
    case PointRelation::Inside: return "inside";
    case PointRelation::Boundary: return "boundary";
    case PointRelation::Outside: return "outside";
  }
  return "?";
}

std::string_view DomainSpec::kind_name() const {
  return std::visit(overloaded{
                        [](const LevelBand&) { return std::string_view("LevelBand"); },
                        [](const SubLevel&) { return std::string_view("SubLevel"); },
                        [](const SuperLevel&) { return std::string_view("SuperLevel"); },
                        [](const LeafFamily&) { return std::string_view("LeafFamily"); },
                        [](const Nemirovskii&) { return std::string_view("Nemirovskii"); },
                        [](const Implicit&) { return std::string_view("Implicit"); },
                    },
                    kind);
}

DomainSpec make_level_band(double k1, double k2) {
  if (!(k1 > 0.0 && k1 < k2 && std::isfinite(k2))) fail(ErrorKind::InvalidInput, "LevelBand needs 0 < k1 < k2 < inf");
  return {LevelBand{k1, k2}};
}

DomainSpec make_sub_level(double k) {
  if (!(k > 0.0 && std::isfinite(k))) fail(ErrorKind::InvalidInput, "SubLevel needs 0 < k < inf");
  return {SubLevel{k}};
}

DomainSpec make_super_level(double k) {
  if (!(k > 0.0 && std::isfinite(k))) fail(ErrorKind::InvalidInput, "SuperLevel needs 0 < k < inf");
  return {SuperLevel{k}};
}

DomainSpec make_leaf_family(LeafFamily family) {
  if (!family.delta_residual) fail(ErrorKind::InvalidInput, "LeafFamily needs a residual for delta");
  return {std::move(family)};
}

DomainSpec make_nemirovskii(double A, double B) {
  const double norm = std::hypot(A, B);
  if (!(norm > 0.0) || !std::isfinite(norm)) fail(ErrorKind::InvalidInput, "Nemirovskii needs (A, B) != (0, 0)");
  return {Nemirovskii{A / norm, B / norm}};
}

DomainSpec make_implicit(Implicit psi) {
  if (!psi.psi) fail(ErrorKind::InvalidInput, "Implicit domain needs a defining function");
  return {std::move(psi)};
}

DomainEval evaluate_domain(const DomainSpec& spec, CPair pt, const HopfParams& params) {
  require_nonzero(pt, "evaluate_domain");
  double r = 0.0;
  if (is_level_family(spec)) {
    r = level_residual(spec, log_modulus_ratio(pt, params.rho()));
  } else {
    const HopfPoint hp = reduce(pt, params);
    r = std::visit(overloaded{
                       [&](const LeafFamily& s) { return s.delta_residual(leaf_coordinate(hp.rep, params.rho())); },
                       [&](const Nemirovskii& s) {
                         require_nemirovskii_params(params);
                         return nemirovskii_value(s, hp.rep.w);
                       },
                       [&](const Implicit& s) { return s.psi(hp.rep); },
                       [](const auto&) { return 0.0; },
                   },
                   spec.kind);
  }
  return {r, r < 0.0};
}

double local_residual(const DomainSpec& spec, CPair pt, const HopfParams& params) {
  if (is_level_family(spec)) return level_residual(spec, log_modulus_ratio(pt, params.rho()));
  return std::visit(overloaded{
                        [&](const LeafFamily& s) { return s.delta_residual(leaf_coordinate(pt, params.rho())); },
                        [&](const Nemirovskii& s) {
                          require_nemirovskii_params(params);
                          return nemirovskii_value(s, pt.w);
                        },
                        [&](const Implicit& s) { return s.psi(pt); },
                        [](const auto&) { return 0.0; },
                    },
                    spec.kind);
}

// ---------------------------------------------------------------------------

double TranslatedDomain::residual(CPair pt) const {
  return std::visit(overloaded{
                        [&](const ProductHalfPlane& h) {
                          return -(std::cos(h.theta) * pt.w.real() - std::sin(h.theta) * pt.w.imag());
                        },
                        [&](const ModulusRegion& m) {
                          return band_residual(log_modulus_ratio(pt, m.rho), safe_log(m.k_lo), safe_log(m.k_hi));
                        },
                        [&](const GenericTranslate& g) { return g.residual(pt); },
                    },
                    form);
}

TranslatedDomain translate_domain(const DomainSpec& spec, CPair anchor, const HopfParams& params) {
  require_nonzero(anchor, "translate_domain");
  auto constant = [](double r) { return GenericTranslate{[r](CPair) { return r; }}; };
  TranslatedDomain td{anchor, ProductHalfPlane{0.0}};

  if (is_level_family(spec)) {
    const double rho = params.rho();
    const double log_s = log_modulus_ratio(anchor, rho);
    if (std::isinf(log_s)) {
      // On a torus every translate is C* x C* or empty.
      td.form = constant(level_residual(spec, log_s) < 0.0 ? -1.0 : 1.0);
      return td;
    }
    const double s = std::exp(log_s);
    td.form = std::visit(overloaded{
                             [&](const LevelBand& b) { return ModulusRegion{b.k1 / s, b.k2 / s, rho}; },
                             [&](const SubLevel& b) { return ModulusRegion{0.0, b.k / s, rho}; },
                             [&](const SuperLevel& b) { return ModulusRegion{b.k / s, kInf, rho}; },
                             [&](const auto&) { return ModulusRegion{0.0, kInf, rho}; },
                         },
                         spec.kind);
    return td;
  }

  if (const auto* n = std::get_if<Nemirovskii>(&spec.kind)) {
    require_nemirovskii_params(params);
    if (anchor.w == 0.0) {
      td.form = constant(1.0);  // T_a lies on the boundary; the translate is empty
      return td;
    }
    // A Re(eta w) + B Im(eta w) < 0  <=>  Re(zeta eta) > 0 with zeta = -(A - iB) w.
    const cplx zeta = -cplx(n->A, -n->B) * anchor.w;
    td.form = ProductHalfPlane{std::arg(zeta)};
    return td;
  }

  td.form = GenericTranslate{[spec, anchor, params](CPair pt) {
    const CPair q{pt.z * anchor.z, pt.w * anchor.w};
    if (q.is_zero()) return kInf;
    return evaluate_domain(spec, q, params).residual;
  }};
  return td;
}

// ---------------------------------------------------------------------------

DistanceBracket distance_to_identity(const TranslatedDomain& td, const DistanceConfig& cfg) {
  const CPair e{1.0, 1.0};
  if (!td.contains(e)) fail(ErrorKind::Domain, "distance_to_identity: e = (1, 1) is not inside the translate");

  if (const auto* h = std::get_if<ProductHalfPlane>(&td.form)) {
    const double d = std::cos(h->theta);
    return {d, d};
  }
  if (const auto* m = std::get_if<ModulusRegion>(&td.form)) return modulus_region_distance(*m, e, 1e-8);

  const auto& g = std::get<GenericTranslate>(td.form);
  const double psi_e = g.residual(e);
  const double lower = cfg.lipschitz > 0.0 ? std::abs(psi_e) / cfg.lipschitz : 0.0;

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal;
  double upper = kInf;
  constexpr int kMarch = 400;
  for (int i = 0; i < cfg.directions; ++i) {
    double d[4];
    double len = 0.0;
    for (double& x : d) {
      x = normal(rng);
      len += x * x;
    }
    len = std::sqrt(len);
    auto at = [&](double t) {
      return CPair{{1.0 + t * d[0] / len, t * d[1] / len}, {1.0 + t * d[2] / len, t * d[3] / len}};
    };
    double prev = 0.0;
    for (int s = 1; s <= kMarch; ++s) {
      const double t = cfg.search_radius * s / kMarch;
      if (t >= upper) break;
      if (g.residual(at(t)) >= 0.0) {
        double lo = prev, hi = t;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (lo + hi);
          (g.residual(at(mid)) < 0.0 ? lo : hi) = mid;
        }
        upper = std::min(upper, hi);
        break;
      }
      prev = t;
    }
  }
  return {std::min(lower, upper), upper};
}

// ---------------------------------------------------------------------------

BoundarySamples sample_boundary(const DomainSpec& spec, const HopfParams& params, std::size_t n,
                                std::uint64_t seed, const BoundarySampling& opts) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto random_point = [&] {
    const double rz = opts.r_min + (params.abs_a() - opts.r_min) * uni(rng);
    const double rw = opts.r_min + (params.abs_b() - opts.r_min) * uni(rng);
    return CPair{std::polar(rz, kTwoPi * uni(rng)), std::polar(rw, kTwoPi * uni(rng))};
  };

  std::vector<CPair> inside, outside;
  for (std::size_t i = 0; i < n * opts.pool_factor; ++i) {
    const CPair p = random_point();
    const double r = local_residual(spec, p, params);
    if (!std::isfinite(r)) continue;
    (r < 0.0 ? inside : outside).push_back(p);
  }

  BoundarySamples out;
  out.interior = inside;
  if (inside.empty() || outside.empty()) {
    out.skipped = n;
    return out;
  }
  std::uniform_int_distribution<std::size_t> pick_in(0, inside.size() - 1), pick_out(0, outside.size() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const CPair a = inside[pick_in(rng)];
    const CPair b = outside[pick_out(rng)];
    auto at = [&](double t) { return CPair{a.z + t * (b.z - a.z), a.w + t * (b.w - a.w)}; };
    double lo = 0.0, hi = 1.0;
    CPair best = a;
    double best_r = kInf;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const CPair p = at(mid);
      const double r = local_residual(spec, p, params);
      if (std::abs(r) < best_r) {
        best_r = std::abs(r);
        best = p;
      }
      if (best_r <= opts.bisection_tol * 1e-3 || mid == lo || mid == hi) break;
      (r < 0.0 ? lo : hi) = mid;
    }
    if (best_r <= opts.bisection_tol) {
      out.boundary.push_back(best);
    } else {
      ++out.skipped;
    }
  }
  return out;
}

TangencyReport tangency_check(const DomainSpec& spec, const VectorField& X, std::size_t n_samples,
                              std::span<const cplx> t_grid, double tol, const HopfParams& params,
                              std::uint64_t seed) {
  // Level families and the Nemirovskii family have residuals that stay
  // meaningful off the fundamental domain; the rest are read on F.
  const bool local = is_level_family(spec) || std::holds_alternative<Nemirovskii>(spec.kind);
  auto residual = [&](CPair p) {
    return local ? local_residual(spec, p, params) : evaluate_domain(spec, p, params).residual;
  };

  BoundarySampling opts;
  opts.bisection_tol = std::min(opts.bisection_tol, tol);
  const BoundarySamples samples = sample_boundary(spec, params, n_samples, seed, opts);

  TangencyReport rep;
  rep.boundary_samples = samples.boundary.size();
  rep.skipped = samples.skipped;
  for (const CPair& p : samples.boundary) {
    for (const cplx& t : t_grid) rep.max_drift = std::max(rep.max_drift, std::abs(residual(flow_point(X, p, t))));
  }
  const std::size_t n_int = std::min(samples.interior.size(), n_samples);
  rep.interior_samples = n_int;
  for (std::size_t i = 0; i < n_int; ++i) {
    for (const cplx& t : t_grid) {
      if (!(residual(flow_point(X, samples.interior[i], t)) < 0.0)) {
        ++rep.escapes;
        break;
      }
    }
  }
  if (is_level_family(spec)) rep.symbolic_rate = std::abs(X.beta * params.log_abs_a() - X.alpha * params.log_abs_b());
  rep.tangential = rep.boundary_samples > 0 && rep.max_drift <= tol && rep.escapes == 0;
  return rep;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Theorem1Type t) {
  switch (t) {
    case Theorem1Type::A1: return "A1";
    case Theorem1Type::A2prime: return "A2prime";
    case Theorem1Type::A2doubleprime: return "A2doubleprime";
    case Theorem1Type::B2: return "B2";
    case Theorem1Type::SteinCandidate: return "SteinCandidate";
    case Theorem1Type::NemirovskiiStein: return "NemirovskiiStein";
  }
  return "?";
}

std::string_view to_string(SteinVerdict::Kind k) {
  switch (k) {
    case SteinVerdict::Kind::NotStein: return "NotStein";
    case SteinVerdict::Kind::Stein: return "Stein";
    case SteinVerdict::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

/// A modulus-c leaf as Sigma_c, or as the torus sigma_c in case B2.
LeafSpec leaf_with_modulus(double c, const InvariantSet& inv) {
  return inv.case_tag == CaseTag::CaseB2 ? LeafSpec::complex(c) : LeafSpec::modulus(c);
}

/// Grid point of delta with the most negative residual.
std::optional<LeafSpec> find_leaf_in_delta(const LeafFamily& fam) {
  constexpr int kRadii = 121, kAngles = 72;
  std::optional<cplx> best;
  double best_r = 0.0;
  for (int i = 0; i < kRadii; ++i) {
    const double r = std::pow(10.0, -3.0 + 6.0 * i / (kRadii - 1));
    for (int j = 0; j < kAngles; ++j) {
      const cplx c = std::polar(r, kTwoPi * j / kAngles);
      const double v = fam.delta_residual({c, false});
      if (v < best_r) best = c, best_r = v;
    }
  }
  if (best) return LeafSpec::complex(*best);
  if (fam.zero == PointRelation::Inside) return LeafSpec{LeafSpec::Kind::Ta, 0.0};
  if (fam.infinity == PointRelation::Inside) return LeafSpec{LeafSpec::Kind::Tb, 0.0};
  return std::nullopt;
}

std::string describe_delta(const LeafFamily& fam) {
  std::ostringstream os;
  os << fam.label << ": 0 " << to_string(fam.zero) << ", inf " << to_string(fam.infinity);
  if (fam.zero == PointRelation::Boundary && fam.infinity == PointRelation::Boundary) os << "; 0, inf in boundary of delta";
  return os.str();
}

}  // namespace

ClassificationResult classify_domain(const DomainSpec& spec, const InvariantSet& inv) {
  ClassificationResult res{Theorem1Type::SteinCandidate, "", {}, {}};
  auto not_stein = [&](LeafSpec leaf, std::string reason) {
    res.stein_verdict = {SteinVerdict::Kind::NotStein, leaf, std::move(reason)};
  };
  const bool b2 = inv.case_tag == CaseTag::CaseB2;

  std::visit(
      overloaded{
          [&](const LevelBand& s) {
            res.theorem1_type = Theorem1Type::A1;
            not_stein(leaf_with_modulus(std::sqrt(s.k1 * s.k2), inv), "contains a compact Levi-flat leaf");
            if (b2) res.notes.push_back("case B2: also a union of tori sigma_c over the annulus k1 < |c| < k2");
          },
          [&](const SubLevel& s) {
            res.theorem1_type = Theorem1Type::A2prime;
            not_stein(leaf_with_modulus(0.5 * s.k, inv), "contains a compact Levi-flat leaf");
            res.notes.push_back("contains T_a");
          },
          [&](const SuperLevel& s) {
            res.theorem1_type = Theorem1Type::A2doubleprime;
            not_stein(leaf_with_modulus(2.0 * s.k, inv), "contains a compact Levi-flat leaf");
            res.notes.push_back("contains T_b");
          },
          [&](const LeafFamily& s) {
            if (!b2) fail(ErrorKind::Case, "LeafFamily domains require case B2");
            res.theorem1_type = Theorem1Type::B2;
            res.delta_description = describe_delta(s);
            if (auto leaf = find_leaf_in_delta(s)) {
              not_stein(*leaf, "contains a compact complex curve");
            } else {
              res.stein_verdict = {SteinVerdict::Kind::Undetermined, std::nullopt,
                                   "no point of delta found on the search grid"};
            }
          },
          [&](const Nemirovskii&) {
            require_nemirovskii_params(inv.params);
            res.theorem1_type = Theorem1Type::NemirovskiiStein;
            res.stein_verdict = {SteinVerdict::Kind::Stein, std::nullopt,
                                 "Nemirovskii-type domain: Stein with Levi-flat boundary"};
          },
          [&](const Implicit& s) {
            res.theorem1_type = Theorem1Type::SteinCandidate;
            res.stein_verdict = {SteinVerdict::Kind::Undetermined, std::nullopt,
                                 "no verdict for implicit domains; see levi-scan and robin diagnostics"};
            if (s.boundary_contains_Ta && s.boundary_contains_Tb) {
              res.notes.push_back(
                  "both tori on the boundary: expected to be Stein or of type B2 with 0, inf in the boundary of "
                  "delta; neither alternative is verified");
            }
          },
      },
      spec.kind);
  return res;
}

// ---------------------------------------------------------------------------

bool in_nemirovskii_model(CPair pt, const HopfParams& params) {
  const double b = params.b().real();
  const double az = std::abs(pt.z), aw = std::abs(pt.w);
  if (!(pt.w.real() > 0.0) || !(aw < b) || !(az <= params.abs_a())) return false;
  return aw > 1.0 || az > 1.0;
}

namespace {

/// Smallest n with |x| <= base^(n + 1), i.e. the deck index of one coordinate.
int coordinate_index(cplx x, double log_base) {
  return static_cast<int>(std::ceil(std::log(std::abs(x)) / log_base)) - 1;
}

}  // namespace

NemirovskiiQuotientReport verify_nemirovskii_quotient(const HopfParams& params, std::size_t n_samples,
                                                      std::uint64_t seed) {
  require_nemirovskii_params(params);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  constexpr double pi = std::numbers::pi;
  auto log_uniform = [&] { return std::exp(-8.0 + 16.0 * uni(rng)); };

  NemirovskiiQuotientReport rep;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const CPair p{std::polar(log_uniform(), kTwoPi * uni(rng)), std::polar(log_uniform(), pi * (uni(rng) - 0.5))};
    if (!(p.w.real() > 0.0)) continue;
    ++rep.forward_samples;
    const int nz = coordinate_index(p.z, params.log_abs_a());
    const int nw = coordinate_index(p.w, params.log_abs_b());
    (nz >= nw ? rep.case1 : rep.case2) += 1;
    if (in_nemirovskii_model(reduce(p, params).rep, params)) ++rep.forward_pass;
  }

  std::uniform_int_distribution<int> deck(-5, 5);
  const double a_abs = params.abs_a(), b = params.b().real();
  for (std::size_t i = 0; i < n_samples; ++i) {
    CPair q;
    if (uni(rng) < 0.5) {
      q = {std::polar(a_abs * uni(rng), kTwoPi * uni(rng)), std::polar(1.0 + (b - 1.0) * uni(rng), pi * (uni(rng) - 0.5))};
    } else {
      q = {std::polar(1.0 + (a_abs - 1.0) * uni(rng), kTwoPi * uni(rng)), std::polar(b * uni(rng), pi * (uni(rng) - 0.5))};
    }
    if (!in_nemirovskii_model(q, params)) continue;
    ++rep.converse_samples;
    if (lift(q, deck(rng), params).w.real() > 0.0) ++rep.converse_pass;
  }

  for (std::size_t i = 0; i < n_samples; ++i) {
    const CPair p{std::polar(log_uniform(), kTwoPi * uni(rng)), std::polar(log_uniform(), pi * (uni(rng) + 0.5))};
    if (!(p.w.real() < 0.0)) continue;
    ++rep.negative_samples;
    if (!in_nemirovskii_model(reduce(p, params).rep, params)) ++rep.negative_rejected;
  }
  return rep;
}

}  // namespace hopf
