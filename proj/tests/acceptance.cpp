// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "hopf/boundary_model.hpp"
#include "hopf/cli.hpp"
#include "hopf/domains.hpp"
#include "hopf/flows.hpp"
#include "hopf/invariants.hpp"
#include "hopf/levi.hpp"
#include "hopf/quotient.hpp"
#include "hopf/robin.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

// Collects failed checks with a short description.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool ok() const { return !failed_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

bool within_3sigma(const RobinEstimate& e, double exact) {
  return std::abs(e.lambda_hat - exact) <= 3.0 * e.stderr_ + 1e-12;
}

void c1_invariants(Checks& c) {
  const auto b2 = derive_invariants(HopfParams(2.0, -4.0));
  c.expect(b2.rho == 2.0, "rho = " + fmt(b2.rho));
  c.expect(b2.tau && *b2.tau == -0.5, "tau != -1/2");
  c.expect(b2.nu == 2, "nu = " + std::to_string(b2.nu));
  c.expect(b2.K.size() == 2 && b2.K[0] == cplx(1.0) && b2.K[1] == cplx(-1.0), "K != {1, -1}");
  c.expect(b2.case_tag == CaseTag::CaseB2, "(2,-4) not B2");
  const auto a = derive_invariants(HopfParams(2.0, 3.0), NumericMode{1e-12, 1'000'000});
  c.expect(a.case_tag == CaseTag::CaseA, "(2,3) not CaseA");
}

void c2_quotient(Checks& c) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> lr(-4.0, 4.0), ang(0.0, kTwoPi);
  const HopfParams p(std::polar(1.7, 0.4), std::polar(3.1, 2.2));
  std::size_t bad_reduce = 0, bad_u = 0;
  for (int i = 0; i < 1000; ++i) {
    const CPair x{std::polar(std::exp(lr(rng)), ang(rng)), std::polar(std::exp(lr(rng)), ang(rng))};
    const HopfPoint h0 = reduce(x, p);
    const double u0 = u_value(x, p);
    for (int n = -10; n <= 10; ++n) {
      const CPair y = lift(x, n, p);
      const HopfPoint h = reduce(y, p);
      const double scale = std::max(std::abs(h0.rep.z), std::abs(h0.rep.w));
      const bool same = std::abs(h.rep.z - h0.rep.z) <= 1e-12 * scale && std::abs(h.rep.w - h0.rep.w) <= 1e-12 * scale;
      if (!same && !equivalent(y, x, p, 1e-12 * scale)) ++bad_reduce;
      if (std::abs(u_value(y, p) - u0) > 1e-12 * std::max(1.0, std::abs(u0))) ++bad_u;
    }
  }
  c.expect(bad_reduce == 0, std::to_string(bad_reduce) + " reduce mismatches");
  c.expect(bad_u == 0, std::to_string(bad_u) + " U mismatches");
}

void c3_flows(Checks& c) {
  const auto a = derive_invariants(HopfParams(2.0, 3.0));
  const CPair e{1.0, 1.0};
  c.expect(equivalent(flow_point(ueda_field(a.params), e, 1.0), e, a.params, 1e-9), "exp(X_u) not equivalent to e");
  const FiberSet fa = fiber_set(ueda_field(a.params), 1.5, a, 10'000);
  const double d = star_discrepancy(fa.arguments);
  c.expect(fa.samples.size() == 10'000 && d < 0.05, "CaseA discrepancy " + fmt(d));
  const auto b2 = derive_invariants(HopfParams(2.0, -4.0));
  const FiberSet fb = fiber_set(ueda_field(b2.params), 1.5, b2, 10'000);
  c.expect(fb.samples.size() == 2, "B2 fiber cardinality " + std::to_string(fb.samples.size()));
  const HopfParams p4(2.0, 4.0);
  std::vector<cplx> grid;
  for (int k = 0; k <= 40; ++k) grid.push_back(k * std::log(2.0));
  const auto reps = orbit_reduce_samples({1.0, 0.0}, e, grid, p4);
  c.expect(std::abs(reps.back().rep.w) < 1e-6, "|w| at k = 40 is " + fmt(std::abs(reps.back().rep.w)));
}

void c4_levi(Checks& c) {
  const HopfParams p(2.0, 4.0);
  const auto band = pseudoconvexity_scan(make_level_band(0.5, 2.0), 100, 1e-6, p, 401);
  c.expect(band.boundary_samples == 100 && band.max_abs_levi <= 1e-6, "level band |L| " + fmt(band.max_abs_levi));
  const auto nem = pseudoconvexity_scan(make_nemirovskii(0.6, 0.8), 100, 1e-6, p, 402);
  c.expect(nem.boundary_samples == 100 && nem.max_abs_levi <= 1e-6, "Nemirovskii |L| " + fmt(nem.max_abs_levi));

  const auto sphere = [](CPair q) { return std::norm(q.z) + std::norm(q.w) - 1.0; };
  const double s = 1.0 / std::sqrt(2.0);
  for (const CPair q : {CPair{1.0, 0.0}, CPair{0.0, 1.0}, CPair{s, cplx(0.0, s)}, CPair{0.6, cplx(0.0, 0.8)}}) {
    const double num = levi_form(numeric_jet(sphere, q, 1e-4));
    const double sym = oracle::levi(oracle::sphere_jet(q.z, q.w));
    c.expect(std::abs(num - 1.0) <= 1e-6 && std::abs(sym - 1.0) <= 1e-12, "sphere L = " + fmt(num));
  }

  std::mt19937_64 rng(403);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    Jet2 j;
    j.d_z = {u(rng), u(rng)};
    j.d_w = {u(rng), u(rng)};
    j.d_zzbar = u(rng);
    j.d_wwbar = u(rng);
    j.d_zwbar = {u(rng), u(rng)};
    for (double lam : {0.5, 2.0, 4.0}) {
      c.expect(levi_form(j.scaled(lam)) == lam * lam * lam * levi_form(j), "homogeneity not exact");
    }
  }
}

void c5_boundary_model(Checks& c) {
  const double r1 = 0.5;
  int found = 0;
  for (const auto& m : corpus::models(41)) {
    const auto res = diamond_search(m, r1);
    if (res.found && res.p0_value > 0.0 && std::abs(res.z_star) < r1) ++found;
  }
  c.expect(found == 50, std::to_string(found) + "/50 corpus models");
  const auto harm = sweep_cover_check(corpus::model_of(RealPoly2::re_monomial(1.0, 2, 0)), r1, 500, 501);
  c.expect(harm.certified && harm.r_prime > 0.0, "Re z^2 sweep not certified");
  const auto sub = sweep_cover_check(corpus::model_of(corpus::abs_pow(1.0, 1)), r1, 500, 502);
  c.expect(sub.certified && sub.r_prime > 0.0, "|z|^2 sweep not certified");
}

void c6_robin(Checks& c, std::vector<std::string>& notes) {
  constexpr Vec4 origin{0, 0, 0, 0};
  struct Case {
    std::string name;
    SolvableDomain dom;
    Vec4 pole;
    double exact;
  };
  const std::vector<Case> cases = {
      {"ball R=1", Ball{origin, 1.0}, origin, -1.0},
      {"ball R=2", Ball{origin, 2.0}, origin, -0.25},
      {"half-space d=1", HalfSpace{{0, 0, 1, 0}, -1.0}, origin, -0.25},
      {"product half-plane pi/3", ProductHalfPlaneR4{std::numbers::pi / 3}, kIdentity4, -1.0},
  };
  for (const auto& k : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto e = robin_constant(k.dom, k.pole, 0.0, 100'000, 6);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(within_3sigma(e, k.exact) && e.stderr_ <= 0.02 && secs < 60.0,
             k.name + ": " + fmt(e.lambda_hat) + " +- " + fmt(e.stderr_));
    notes.push_back(k.name + " " + fmt(e.lambda_hat) + " +- " + fmt(e.stderr_) + " in " + fmt(secs) + " s");
  }
  WosConfig cfg;
  const Vec4 pole{0.5, 0.1, -0.2, 0.0};
  const auto ref = robin_constant(Ball{origin, 1.0}, pole, 0.0, 20'000, 61, cfg);
  for (int shards : {2, 3, 4}) {
    cfg.shards = shards;
    const auto e = robin_constant(Ball{origin, 1.0}, pole, 0.0, 20'000, 61, cfg);
    c.expect(e.lambda_hat == ref.lambda_hat && e.stderr_ == ref.stderr_, "shards differ");
  }
  c.expect(robin_constant_serial(Ball{origin, 1.0}, pole, 0.0, 20'000, 61).lambda_hat == ref.lambda_hat,
           "serial differs");
}

void c7_boundary(Checks& c) {
  const HopfParams p(2.0, 4.0);
  const auto spec = make_nemirovskii(-1.0, 0.0);
  RobinBudget budget;
  budget.walks = 20'000;
  std::vector<CPair> path;
  for (int k = 1; k <= 5; ++k) path.push_back({1.0, std::polar(1.0, std::numbers::pi / 2 - std::ldexp(1.0, -k))});
  bool crossed = false;
  for (const auto& row : boundary_behavior_experiment(spec, path, p, budget)) {
    const double cs = std::cos(*row.theta);
    c.expect(row.dist.lower == cs && row.dist.upper == cs, "dist != cos theta");
    c.expect(within_3sigma(row.est, -1.0 / (4 * cs * cs)), "lambda off the image formula at cos " + fmt(cs));
    if (cs < 0.158) {
      crossed = true;
      c.expect(row.est.lambda_hat < -10.0, "lambda " + fmt(row.est.lambda_hat) + " at cos " + fmt(cs));
    }
  }
  c.expect(crossed, "path never reached cos theta < 0.158");

  for (double th : {-std::numbers::pi / 3, -0.5, 0.0, 0.5, std::numbers::pi / 3}) {
    std::vector<CPair> radial;
    for (int k = 0; k <= 20; k += 4) radial.push_back({1.0, std::polar(std::ldexp(1.0, -k), th)});
    for (const auto& row : boundary_behavior_experiment(spec, radial, p, budget)) {
      c.expect(row.est.lambda_hat >= -1.0 - 3.0 * row.est.stderr_, "lambda below -1 at theta " + fmt(th));
    }
  }
}

void c8_classification(Checks& c) {
  const auto a = derive_invariants(HopfParams(2.0, 3.0));
  const auto b2 = derive_invariants(HopfParams(2.0, -4.0));
  const auto n = derive_invariants(HopfParams(2.0, 4.0));
  LeafFamily fam;
  fam.delta_residual = [](ProjectivePoint q) { return q.infinite ? 1.0 : std::abs(std::abs(q.value) - 1.0) - 0.5; };
  fam.zero = fam.infinity = PointRelation::Boundary;
  struct Row {
    DomainSpec spec;
    const InvariantSet* inv;
    Theorem1Type type;
    SteinVerdict::Kind verdict;
  };
  const std::vector<Row> rows = {
      {make_level_band(0.5, 2.0), &a, Theorem1Type::A1, SteinVerdict::Kind::NotStein},
      {make_sub_level(1.0), &a, Theorem1Type::A2prime, SteinVerdict::Kind::NotStein},
      {make_super_level(1.0), &a, Theorem1Type::A2doubleprime, SteinVerdict::Kind::NotStein},
      {make_leaf_family(fam), &b2, Theorem1Type::B2, SteinVerdict::Kind::NotStein},
      {make_nemirovskii(1.0, 0.0), &n, Theorem1Type::NemirovskiiStein, SteinVerdict::Kind::Stein},
      {make_implicit({[](CPair q) { return std::norm(q.z) + std::norm(q.w) - 9.0; }, "ball", false, false}), &a,
       Theorem1Type::SteinCandidate, SteinVerdict::Kind::Undetermined},
  };
  for (const auto& r : rows) {
    const auto res = classify_domain(r.spec, *r.inv);
    const std::string name(r.spec.kind_name());
    c.expect(res.theorem1_type == r.type && res.stein_verdict.kind == r.verdict, name + " misclassified");
    c.expect((res.stein_verdict.kind == SteinVerdict::Kind::NotStein) == res.stein_verdict.witness.has_value(),
             name + " witness");
  }

  // Golden CLI output for each kind.
  const std::vector<std::pair<std::string, std::string>> goldens = {
      {"level-band", "--a 2 --b 3 --domain level-band --k1 0.5 --k2 2"},
      {"sub-level", "--a 2 --b 3 --domain sub-level --k 1"},
      {"super-level", "--a 2 --b 3 --domain super-level --k 1"},
      {"leaf-annulus", "--a 2 --b -4 --domain leaf-annulus --delta-lo 0.5 --delta-hi 2"},
      {"nemirovskii", "--a 2 --b 4 --domain nemirovskii --A 1 --B 0"},
      {"implicit-ball", "--a 2 --b 3 --domain implicit-ball --radius 3 --ta-boundary --tb-boundary"},
  };
  for (const auto& [name, flags] : goldens) {
    std::vector<std::string> args{"classify"};
    std::istringstream in(flags);
    for (std::string w; in >> w;) args.push_back(w);
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    std::ifstream g(std::filesystem::path(HOPF_GOLDEN_DIR) / ("classify_" + name + ".json"));
    std::stringstream expect;
    expect << g.rdbuf();
    c.expect(code == 0 && g.good() && expect.str() == out.str(), "golden mismatch for " + name);
  }

  // The witness leaf of the level band is invariant under X_u.
  const auto band = make_level_band(0.5, 2.0);
  std::vector<cplx> grid;
  for (int i = -8; i <= 8; ++i) grid.push_back(0.25 * i);
  const auto tan = tangency_check(band, ueda_field(a.params), 100, grid, 1e-9, a.params, 801);
  c.expect(tan.tangential && tan.symbolic_rate && *tan.symbolic_rate == 0.0, "X_u not tangent to the level band");
}

void c9_nemirovskii(Checks& c) {
  const auto rep = verify_nemirovskii_quotient(HopfParams(2.0, 4.0), 10'000, 901);
  c.expect(rep.forward_samples == 10'000 && rep.converse_samples == 10'000, "sample counts");
  c.expect(rep.all_pass(), "forward " + std::to_string(rep.forward_pass) + ", converse " +
                               std::to_string(rep.converse_pass) + ", negative " + std::to_string(rep.negative_rejected));
  c.expect(rep.case1 > 0 && rep.case2 > 0, "one proof case never exercised");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<void(Checks&, std::vector<std::string>&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "invariants", 1.0, [](Checks& c, auto&) { c1_invariants(c); }},
      {2, "quotient round trip", 60.0, [](Checks& c, auto&) { c2_quotient(c); }},
      {3, "flows", 10.0, [](Checks& c, auto&) { c3_flows(c); }},
      {4, "Levi form", 60.0, [](Checks& c, auto&) { c4_levi(c); }},
      {5, "boundary models", 30.0, [](Checks& c, auto&) { c5_boundary_model(c); }},
      {6, "Robin oracles", 240.0, [](Checks& c, auto& notes) { c6_robin(c, notes); }},
      {7, "boundary behavior", 300.0, [](Checks& c, auto&) { c7_boundary(c); }},
      {8, "classification", 60.0, [](Checks& c, auto&) { c8_classification(c); }},
      {9, "Nemirovskii quotient", 60.0, [](Checks& c, auto&) { c9_nemirovskii(c); }},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    std::vector<std::string> notes;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(checks, notes);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checks.expect(secs < cr.budget_s, "runtime " + fmt(secs) + " s over " + fmt(cr.budget_s) + " s");
    failed += !checks.ok();
    std::cout << (checks.ok() ? "[PASS] " : "[FAIL] ") << cr.id << " " << cr.name << " (" << std::fixed
              << std::setprecision(2) << secs << " s)" << std::defaultfloat;
    if (!checks.ok()) std::cout << ": " << checks.summary();
    std::cout << '\n';
    for (const auto& n : notes) std::cout << "       " << n << '\n';
  }
  return failed == 0 ? 0 : 1;
}
