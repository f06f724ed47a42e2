#include "hopf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "hopf/errors.hpp"
#include "hopf/serialize.hpp"

namespace hopf::cli {

namespace {

struct Options {
  double a_re = 0, a_im = 0, b_re = 0, b_im = 0;
  double z_re = 1, z_im = 0, w_re = 1, w_im = 0;
  double alpha_re = 0, alpha_im = 0, beta_re = 0, beta_im = 0;
  std::string field = "custom";
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  std::string format = "json";

  // invariants
  std::string mode = "numeric";
  double tol = 1e-12;
  double max_den = 1e6;
  std::vector<std::int64_t> rho_frac, tau_frac;

  // flows
  double t0_re = 0, t0_im = 0, t1_re = 1, t1_im = 0;
  int steps = 101;
  double zp_re = 1.5, zp_im = 0;
  std::size_t count = 10'000;

  // domains
  std::string domain;
  double k1 = 0.5, k2 = 2.0, k = 1.0, A = -1.0, B = 0.0;
  double delta_lo = 0.5, delta_hi = 2.0, radius = 1.0;
  bool ta_boundary = false, tb_boundary = false;
  std::size_t samples = 100;
  double scan_tol = 1e-6;
  double t_max = 1.0;

  // boundary model
  std::string model;
  std::vector<std::string> p0_terms, p1_terms, p2_terms;
  double r1 = 0.5;

  // robin
  double theta = 0.0, distance = -1.0;
  std::uint64_t walks = 100'000;      // robin
  std::uint64_t exp_walks = 20'000;   // boundary-exp, psh-check
  std::size_t nem_samples = 10'000;
  double disk_radius = 0.25;
  double c_weight = 0.0, eps_shell = 1e-4, r_max_factor = 1e3;
  int shards = 1;
  bool serial = false;
  std::string config;
  std::string path = "none";
  std::vector<std::string> anchors;
  std::string direction = "0,0,1,0";
  int grid = 8;
  double lipschitz = 0.0;
};

void add_ab(CLI::App* sc, Options& o) {
  sc->add_option("--a,--a-re", o.a_re, "Re a")->required();
  sc->add_option("--a-im", o.a_im, "Im a");
  sc->add_option("--b,--b-re", o.b_re, "Re b")->required();
  sc->add_option("--b-im", o.b_im, "Im b");
}

void add_point(CLI::App* sc, Options& o) {
  sc->add_option("--z,--z-re", o.z_re, "Re z")->capture_default_str();
  sc->add_option("--z-im", o.z_im, "Im z")->capture_default_str();
  sc->add_option("--w,--w-re", o.w_re, "Re w")->capture_default_str();
  sc->add_option("--w-im", o.w_im, "Im w")->capture_default_str();
}

void add_field(CLI::App* sc, Options& o) {
  sc->add_option("--field", o.field, "ueda, deck or custom (uses --alpha/--beta)")
      ->check(CLI::IsMember({"ueda", "deck", "custom"}))
      ->capture_default_str();
  sc->add_option("--alpha,--alpha-re", o.alpha_re, "Re alpha");
  sc->add_option("--alpha-im", o.alpha_im, "Im alpha");
  sc->add_option("--beta,--beta-re", o.beta_re, "Re beta");
  sc->add_option("--beta-im", o.beta_im, "Im beta");
}

void add_common(CLI::App* sc, Options& o, bool csv) {
  sc->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  sc->add_option("-o,--output", o.output, "write to this file instead of stdout");
  if (csv) {
    sc->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  }
}

void add_domain(CLI::App* sc, Options& o) {
  sc->add_option("--domain", o.domain,
                 "level-band, sub-level, super-level, leaf-annulus, nemirovskii or implicit-ball")
      ->required()
      ->check(CLI::IsMember({"level-band", "sub-level", "super-level", "leaf-annulus", "nemirovskii", "implicit-ball"}));
  sc->add_option("--k1", o.k1, "level-band lower modulus")->capture_default_str();
  sc->add_option("--k2", o.k2, "level-band upper modulus")->capture_default_str();
  sc->add_option("--k", o.k, "sub-level / super-level modulus")->capture_default_str();
  sc->add_option("--A", o.A, "nemirovskii: A in {A u + B v < 0}")->capture_default_str();
  sc->add_option("--B", o.B, "nemirovskii: B in {A u + B v < 0}")->capture_default_str();
  sc->add_option("--delta-lo", o.delta_lo, "leaf-annulus: inner radius of delta (0 puts 0 inside)")
      ->capture_default_str();
  sc->add_option("--delta-hi", o.delta_hi, "leaf-annulus: outer radius of delta (inf puts inf inside)")
      ->capture_default_str();
  sc->add_option("--radius", o.radius, "implicit-ball: |z|^2 + |w|^2 < radius^2 on F")->capture_default_str();
  sc->add_flag("--ta-boundary", o.ta_boundary, "implicit-ball: declare T_a in the boundary");
  sc->add_flag("--tb-boundary", o.tb_boundary, "implicit-ball: declare T_b in the boundary");
}

void add_model(CLI::App* sc, Options& o) {
  sc->add_option("--model", o.model, "preset p0: re-z2, abs-z2, linear, zero")
      ->check(CLI::IsMember({"re-z2", "abs-z2", "linear", "zero"}));
  sc->add_option("--p0-term", o.p0_terms, "term Re(c z^p zbar^q) of p0 as c_re,c_im,p,q (repeatable)");
  sc->add_option("--p1-term", o.p1_terms, "term of p1, same format");
  sc->add_option("--p2-term", o.p2_terms, "term of p2, same format");
  sc->add_option("--r1", o.r1, "disk radius")->capture_default_str();
}

void add_wos(CLI::App* sc, Options& o, std::uint64_t& walks) {
  sc->add_option("--walks", walks, "walks per estimate")->capture_default_str();
  sc->add_option("--c-weight", o.c_weight, "screening constant c >= 0")->capture_default_str();
  sc->add_option("--eps", o.eps_shell, "epsilon shell")->capture_default_str();
  sc->add_option("--r-max-factor", o.r_max_factor, "escape radius over pole distance")->capture_default_str();
  sc->add_option("--shards", o.shards, "parallel shards (results do not depend on it)")->capture_default_str();
  sc->add_option("--config", o.config, "JSON with walks, eps_shell, r_max_factor, seed, shards");
  sc->add_option("--lipschitz", o.lipschitz, "Lipschitz bound for generic translates")->capture_default_str();
}

std::vector<double> split_numbers(const std::string& s, std::size_t n, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, std::string(what) + ": cannot parse '" + s + "'");
    }
  }
  if (out.size() != n) fail(ErrorKind::InvalidInput, std::string(what) + ": expected " + std::to_string(n) + " numbers");
  return out;
}

CPair parse_pair(const std::string& s, const char* what) {
  const auto v = split_numbers(s, 4, what);
  return {{v[0], v[1]}, {v[2], v[3]}};
}

RealPoly2 parse_poly(const std::vector<std::string>& terms) {
  RealPoly2 acc;
  for (const auto& t : terms) {
    const auto v = split_numbers(t, 4, "polynomial term");
    const int p = static_cast<int>(v[2]), q = static_cast<int>(v[3]);
    if (p != v[2] || q != v[3] || p < 0 || q < 0) fail(ErrorKind::InvalidInput, "polynomial powers must be integers >= 0");
    if (p + q > kMaxPolyDegree) fail(ErrorKind::InvalidInput, "polynomial term exceeds degree 16");
    acc = acc + RealPoly2::re_monomial({v[0], v[1]}, p, q);
  }
  return acc;
}

BoundaryModel build_model(const Options& o) {
  BoundaryModel m;
  RealPoly2 p0;
  if (o.model == "re-z2") p0 = RealPoly2::re_monomial(1.0, 2, 0);
  if (o.model == "abs-z2") p0 = RealPoly2::re_monomial(1.0, 1, 1);
  if (o.model == "linear") p0 = RealPoly2::re_monomial(1.0, 1, 0);
  if (o.model.empty() && o.p0_terms.empty()) fail(ErrorKind::InvalidInput, "give --model or --p0-term");
  m.p.push_back(p0 + parse_poly(o.p0_terms));
  if (!o.p1_terms.empty() || !o.p2_terms.empty()) m.p.push_back(parse_poly(o.p1_terms));
  if (!o.p2_terms.empty()) m.p.push_back(parse_poly(o.p2_terms));
  return m;
}

DomainSpec build_domain(const Options& o) {
  const std::string& d = o.domain;
  if (d == "level-band") return make_level_band(o.k1, o.k2);
  if (d == "sub-level") return make_sub_level(o.k);
  if (d == "super-level") return make_super_level(o.k);
  if (d == "nemirovskii") return make_nemirovskii(o.A, o.B);
  if (d == "leaf-annulus") {
    const double lo = o.delta_lo, hi = o.delta_hi;
    if (!(lo >= 0.0 && hi > lo)) fail(ErrorKind::InvalidInput, "leaf-annulus needs 0 <= delta-lo < delta-hi");
    LeafFamily fam;
    fam.delta_residual = [lo, hi](ProjectivePoint c) {
      if (c.infinite) return std::isinf(hi) ? -1.0 : 1.0;
      const double r = std::abs(c.value);
      return std::max(lo - r, r - hi);
    };
    fam.zero = lo == 0.0 ? PointRelation::Inside : PointRelation::Outside;
    fam.infinity = std::isinf(hi) ? PointRelation::Inside : PointRelation::Outside;
    std::ostringstream label;
    label << "annulus " << lo << " < |c| < " << hi;
    fam.label = label.str();
    return make_leaf_family(std::move(fam));
  }
  const double r2 = o.radius * o.radius;
  return make_implicit({[r2](CPair p) { return std::norm(p.z) + std::norm(p.w) - r2; }, "|z|^2 + |w|^2 - r^2",
                        o.ta_boundary, o.tb_boundary});
}

VectorField build_field(const Options& o, const HopfParams& params) {
  if (o.field == "ueda") return ueda_field(params);
  if (o.field == "deck") return deck_field(params);
  return {{o.alpha_re, o.alpha_im}, {o.beta_re, o.beta_im}};
}

std::vector<cplx> t_grid(const Options& o) {
  if (o.steps < 1) fail(ErrorKind::InvalidInput, "--steps must be >= 1");
  const cplx t0{o.t0_re, o.t0_im}, t1{o.t1_re, o.t1_im};
  std::vector<cplx> g;
  for (int i = 0; i < o.steps; ++i) g.push_back(o.steps == 1 ? t0 : t0 + (t1 - t0) * (double(i) / (o.steps - 1)));
  return g;
}

RobinBudget build_budget(const Options& o, std::uint64_t walks) {
  RobinBudget b;
  b.walks = walks;
  b.seed = o.seed;
  b.c_weight = o.c_weight;
  b.wos.eps_shell = o.eps_shell;
  b.wos.r_max_factor = o.r_max_factor;
  b.wos.shards = o.shards;
  b.lipschitz = o.lipschitz;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open config " + o.config);
    json j;
    try {
      j = json::parse(in);
    } catch (const std::exception& e) {
      fail(ErrorKind::InvalidInput, std::string("config is not valid JSON: ") + e.what());
    }
    apply_wos_json(j, b);
  }
  return b;
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : out_(out) {
    if (!o.output.empty()) {
      file_.open(o.output);
      if (!file_) fail(ErrorKind::InvalidInput, "cannot write " + o.output);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : out_; }
  void json_doc(std::string_view command, json body) { stream() << document(command, std::move(body)).dump(2) << '\n'; }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  Emitter em(o, out);
  auto params = [&] { return HopfParams({o.a_re, o.a_im}, {o.b_re, o.b_im}); };
  auto invariants = [&] {
    if (o.mode == "declared") {
      DeclaredMode dm;
      auto frac = [](const std::vector<std::int64_t>& v, const char* what) -> std::optional<Fraction> {
        if (v.empty()) return std::nullopt;
        if (v.size() != 2) fail(ErrorKind::InvalidInput, std::string(what) + " takes NUM DEN");
        return Fraction{v[0], v[1]};
      };
      dm.rho = frac(o.rho_frac, "--rho");
      dm.tau = frac(o.tau_frac, "--tau");
      return derive_invariants(params(), dm);
    }
    return derive_invariants(params(), NumericMode{o.tol, static_cast<std::int64_t>(o.max_den)});
  };
  const CPair pt{{o.z_re, o.z_im}, {o.w_re, o.w_im}};

  if (cmd == "invariants") {
    em.json_doc(cmd, to_json(invariants()));
  } else if (cmd == "reduce") {
    const HopfParams p = params();
    const HopfPoint hp = reduce(pt, p);
    json body{{"input", to_json(pt)}, {"rep", to_json(hp.rep)}, {"n", hp.lift_index}};
    body["on_Ta"] = hp.on_Ta;
    body["on_Tb"] = hp.on_Tb;
    body["u"] = (hp.on_Ta || hp.on_Tb) ? json(nullptr) : json(u_value(hp, p));
    em.json_doc(cmd, body);
  } else if (cmd == "flow") {
    const InvariantSet inv = invariants();
    const VectorField X = build_field(o, inv.params);
    const auto grid = t_grid(o);
    if (o.format == "csv") {
      write_orbit_csv(em.stream(), X, pt, grid, inv.params);
    } else {
      EvidenceConfig cfg;
      cfg.start = pt;
      cfg.seed = o.seed;
      json samples = json::array();
      const auto reps = orbit_reduce_samples(X, pt, grid, inv.params);
      for (std::size_t i = 0; i < grid.size(); ++i) samples.push_back({{"t", to_json(grid[i])}, {"point", to_json(reps[i])}});
      em.json_doc(cmd, {{"field", {{"alpha", to_json(X.alpha)}, {"beta", to_json(X.beta)}}},
                        {"closure", to_json(classify_orbit_closure(X, inv, cfg))},
                        {"samples", samples}});
    }
  } else if (cmd == "fiber") {
    const InvariantSet inv = invariants();
    const VectorField X = build_field(o, inv.params);
    FiberOptions fo;
    fo.start = pt;
    const FiberSet f = fiber_set(X, {o.zp_re, o.zp_im}, inv, o.count, fo);
    if (o.format == "csv") {
      write_fiber_csv(em.stream(), f);
    } else {
      em.json_doc(cmd, {{"fiber", to_json(f)}, {"case", to_string(inv.case_tag)}});
    }
  } else if (cmd == "classify") {
    const InvariantSet inv = invariants();
    const DomainSpec spec = build_domain(o);
    em.json_doc(cmd, {{"invariants", {{"rho", inv.rho}, {"case", to_string(inv.case_tag)}, {"nu", inv.nu}}},
                      {"domain", to_json(spec)},
                      {"classification", to_json(classify_domain(spec, inv))}});
  } else if (cmd == "tangency") {
    const HopfParams p = params();
    const DomainSpec spec = build_domain(o);
    std::vector<cplx> grid;
    for (int i = 0; i < o.steps; ++i) grid.push_back(o.steps == 1 ? o.t_max : o.t_max * (-1.0 + 2.0 * i / (o.steps - 1)));
    const TangencyReport r = tangency_check(spec, build_field(o, p), o.samples, grid, o.scan_tol, p, o.seed);
    em.json_doc(cmd, {{"domain", to_json(spec)}, {"report", to_json(r)}});
  } else if (cmd == "levi-scan") {
    const HopfParams p = params();
    const DomainSpec spec = build_domain(o);
    const LeviScanReport r = pseudoconvexity_scan(spec, o.samples, o.scan_tol, p, o.seed);
    if (o.format == "csv") {
      write_levi_csv(em.stream(), r.samples);
    } else {
      em.json_doc(cmd, {{"domain", to_json(spec)}, {"report", to_json(r)}});
    }
  } else if (cmd == "diamond") {
    em.json_doc(cmd, to_json(diamond_search(build_model(o), o.r1)));
  } else if (cmd == "sweep-cover") {
    em.json_doc(cmd, to_json(sweep_cover_check(build_model(o), o.r1, o.samples, o.seed)));
  } else if (cmd == "robin") {
    const RobinBudget b = build_budget(o, o.walks);
    SolvableDomain dom;
    Vec4 pole = kIdentity4;
    if (o.domain == "ball") {
      dom = Ball{{0, 0, 0, 0}, o.radius};
      pole = {0, 0, 0, 0};
    } else if (o.domain == "half-space") {
      const double d = o.distance < 0.0 ? std::cos(o.theta) : o.distance;
      dom = HalfSpace{{0.0, 0.0, std::cos(o.theta), -std::sin(o.theta)}, std::cos(o.theta) - d};
    } else {
      dom = ProductHalfPlaneR4{o.theta};
    }
    const RobinEstimate e = o.serial ? robin_constant_serial(dom, pole, b.c_weight, b.walks, b.seed, b.wos)
                                     : robin_constant(dom, pole, b.c_weight, b.walks, b.seed, b.wos);
    em.json_doc(cmd, {{"domain", o.domain}, {"estimate", to_json(e)}});
  } else if (cmd == "boundary-exp") {
    const HopfParams p = params();
    const DomainSpec spec = build_domain(o);
    std::vector<CPair> anchors;
    for (const auto& s : o.anchors) anchors.push_back(parse_pair(s, "--anchor"));
    constexpr double pi = std::numbers::pi;
    for (int k = 1; k <= o.steps && o.path != "none"; ++k) {
      if (o.path == "theta") anchors.push_back({1.0, std::polar(1.0, pi / 2 - std::ldexp(1.0, -k))});
      if (o.path == "torus") anchors.push_back({1.0, std::polar(std::ldexp(1.0, -k), o.theta)});
    }
    if (anchors.empty()) fail(ErrorKind::InvalidInput, "boundary-exp needs --anchor or --path");
    const auto rows = boundary_behavior_experiment(spec, anchors, p, build_budget(o, o.exp_walks));
    if (o.format == "csv") {
      write_boundary_csv(em.stream(), rows);
    } else {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      em.json_doc(cmd, {{"domain", to_json(spec)}, {"rows", arr}});
    }
  } else if (cmd == "psh-check") {
    const HopfParams p = params();
    const DomainSpec spec = build_domain(o);
    const PshReport r =
        psh_spot_check(spec, pt, parse_pair(o.direction, "--direction"), o.disk_radius, o.grid,
                       build_budget(o, o.exp_walks), p);
    em.json_doc(cmd, {{"domain", to_json(spec)}, {"report", to_json(r)}});
  } else if (cmd == "nemirovskii-verify") {
    em.json_doc(cmd, to_json(verify_nemirovskii_quotient(params(), o.nem_samples, o.seed)));
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hopf surface geometry toolkit", "hopf"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto* inv = app.add_subcommand("invariants", "rho, tau, nu, K and the case tag");
  add_ab(inv, o);
  inv->add_option("--mode", o.mode, "numeric or declared")->check(CLI::IsMember({"numeric", "declared"}))->capture_default_str();
  inv->add_option("--tol", o.tol, "numeric mode tolerance")->capture_default_str();
  inv->add_option("--max-den", o.max_den, "numeric mode denominator bound")->capture_default_str();
  inv->add_option("--rho", o.rho_frac, "declared rho as NUM DEN (omit for irrational)")->expected(2);
  inv->add_option("--tau", o.tau_frac, "declared tau as NUM DEN (omit for irrational)")->expected(2);
  add_common(inv, o, false);

  auto* red = app.add_subcommand("reduce", "reduce a point of C^2 \\ 0 into the fundamental domain");
  add_ab(red, o);
  add_point(red, o);
  add_common(red, o, false);

  auto* flow = app.add_subcommand("flow", "orbit samples and closure class of a vector field");
  add_ab(flow, o);
  add_point(flow, o);
  add_field(flow, o);
  flow->add_option("--t0-re", o.t0_re, "grid start, real part")->capture_default_str();
  flow->add_option("--t0-im", o.t0_im, "grid start, imaginary part")->capture_default_str();
  flow->add_option("--t1-re", o.t1_re, "grid end, real part")->capture_default_str();
  flow->add_option("--t1-im", o.t1_im, "grid end, imaginary part")->capture_default_str();
  flow->add_option("--steps", o.steps, "grid size")->capture_default_str();
  add_common(flow, o, true);

  auto* fib = app.add_subcommand("fiber", "saturated orbit intersected with {z = z'}");
  add_ab(fib, o);
  add_point(fib, o);
  add_field(fib, o);
  fib->add_option("--z-prime,--z-prime-re", o.zp_re, "Re z'")->capture_default_str();
  fib->add_option("--z-prime-im", o.zp_im, "Im z'")->capture_default_str();
  fib->add_option("--count", o.count, "number of distinct fiber values")->capture_default_str();
  add_common(fib, o, true);

  auto* cls = app.add_subcommand("classify", "domain type and Stein verdict");
  add_ab(cls, o);
  add_domain(cls, o);
  add_common(cls, o, false);

  auto* tan = app.add_subcommand("tangency", "is the field tangent to the boundary");
  add_ab(tan, o);
  add_domain(tan, o);
  add_field(tan, o);
  tan->add_option("--samples", o.samples, "boundary samples")->capture_default_str();
  tan->add_option("--t-max", o.t_max, "flow times in [-t-max, t-max]")->capture_default_str();
  tan->add_option("--steps", o.steps, "flow time grid size")->capture_default_str();
  tan->add_option("--tol", o.scan_tol, "drift tolerance")->capture_default_str();
  add_common(tan, o, false);

  auto* lev = app.add_subcommand("levi-scan", "Levi form at sampled boundary points");
  add_ab(lev, o);
  add_domain(lev, o);
  lev->add_option("--samples", o.samples, "boundary samples")->capture_default_str();
  lev->add_option("--tol", o.scan_tol, "violation threshold")->capture_default_str();
  add_common(lev, o, true);

  auto* dia = app.add_subcommand("diamond", "find z* near 0 with p0(z*) > 0");
  add_model(dia, o);
  add_common(dia, o, false);

  auto* swp = app.add_subcommand("sweep-cover", "certify a disk covered by the arcs over [0, z*]");
  add_model(swp, o);
  swp->add_option("--samples", o.samples, "sampled w values")->capture_default_str();
  add_common(swp, o, false);

  auto* rob = app.add_subcommand("robin", "walk-on-spheres Robin constant");
  rob->add_option("--domain", o.domain, "ball, half-space or product-half-plane")
      ->required()
      ->check(CLI::IsMember({"ball", "half-space", "product-half-plane"}));
  rob->add_option("--radius", o.radius, "ball radius (pole at the centre)")->capture_default_str();
  rob->add_option("--theta", o.theta, "half-plane angle (pole at e = (1, 1))")->capture_default_str();
  rob->add_option("--distance", o.distance, "half-space: distance from the pole (default cos theta)");
  rob->add_flag("--serial", o.serial, "use the single-threaded reference");
  add_wos(rob, o, o.walks);
  add_common(rob, o, false);

  auto* bex = app.add_subcommand("boundary-exp", "Robin constant of D[z, w] along a path of anchors");
  add_ab(bex, o);
  add_domain(bex, o);
  bex->add_option("--anchor", o.anchors, "anchor as z_re,z_im,w_re,w_im (repeatable)");
  bex->add_option("--path", o.path, "preset path: theta (angle to pi/2), torus (|w| -> 0 at --theta) or none")
      ->check(CLI::IsMember({"theta", "torus", "none"}))
      ->capture_default_str();
  bex->add_option("--steps", o.steps, "preset path length")->capture_default_str();
  bex->add_option("--theta", o.theta, "angle for the torus path")->capture_default_str();
  add_wos(bex, o, o.exp_walks);
  add_common(bex, o, true);

  auto* psh = app.add_subcommand("psh-check", "sub-mean-value test for -lambda on a complex disk");
  add_ab(psh, o);
  add_domain(psh, o);
  add_point(psh, o);
  psh->add_option("--direction", o.direction, "direction as z_re,z_im,w_re,w_im")->capture_default_str();
  psh->add_option("--disk-radius", o.disk_radius, "disk radius")->capture_default_str();
  psh->add_option("--grid", o.grid, "ring points")->capture_default_str();
  add_wos(psh, o, o.exp_walks);
  add_common(psh, o, false);

  auto* nem = app.add_subcommand("nemirovskii-verify", "check N / ~ = D for b real > 1");
  add_ab(nem, o);
  nem->add_option("--samples", o.nem_samples, "samples per check")->capture_default_str();
  add_common(nem, o, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto subs = app.get_subcommands();
  try {
    return dispatch(subs.front()->get_name(), o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.is_validation() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hopf::cli
