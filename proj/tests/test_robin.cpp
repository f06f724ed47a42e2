#include <cmath>
#include <sstream>

#include "doctest.h"
#include "hopf/errors.hpp"
#include "hopf/robin.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

constexpr Vec4 kOrigin{0.0, 0.0, 0.0, 0.0};

HalfSpace half_space_at(double d) { return {{0.0, 0.0, 1.0, 0.0}, -d}; }  // {u > -d}, pole at 0

bool within_3sigma(const RobinEstimate& e, double exact) {
  return std::abs(e.lambda_hat - exact) <= 3.0 * e.stderr_ + 1e-12;
}

}  // namespace

TEST_SUITE("robin") {

TEST_CASE("kernel") {
  CHECK(kernel(1.0) == 1.0);
  CHECK(kernel(2.0) == 0.25);
  CHECK(kernel(0.5) == 4.0);
  CHECK_THROWS_AS(kernel(0.0), Error);
  CHECK_THROWS_AS(kernel(-1.0), Error);
}

TEST_CASE("ball and half-space oracles") {
  for (double R : {1.0, 2.0}) {
    const auto e = robin_constant(Ball{kOrigin, R}, kOrigin, 0.0, 100'000, 7);
    CHECK(within_3sigma(e, oracle::ball_robin(R, 0.0)));
    CHECK(e.stderr_ <= 0.02);
    CHECK(e.n_walks == 100'000);
  }
  for (double d : {1.0, 0.5}) {
    const auto e = robin_constant(half_space_at(d), kOrigin, 0.0, 100'000, 8);
    CHECK(within_3sigma(e, oracle::half_space_robin(d)));
    CHECK(e.stderr_ <= 0.02);
    CHECK(e.escape_bias_bound > 0.0);
  }
  const auto php = robin_constant(ProductHalfPlaneR4{M_PI / 3}, kIdentity4, 0.0, 100'000, 9);
  CHECK(within_3sigma(php, -1.0));
  CHECK(php.stderr_ <= 0.02);
}

TEST_CASE("off-centre ball") {
  const Vec4 pole{0.5, 0.0, 0.0, 0.0};
  const auto e = robin_constant(Ball{kOrigin, 1.0}, pole, 0.0, 50'000, 10);
  CHECK(within_3sigma(e, oracle::ball_robin(1.0, 0.5)));
  const Vec4 pole2{0.3, -0.4, 0.2, 0.6};
  const auto e2 = robin_constant(Ball{{0.1, 0.1, 0.1, 0.1}, 1.5}, pole2, 0.0, 50'000, 11);
  const double off = norm(pole2 - Vec4{0.1, 0.1, 0.1, 0.1});
  CHECK(within_3sigma(e2, oracle::ball_robin(1.5, off)));
}

TEST_CASE("screened ball against the radial ODE") {
  for (double c : {0.5, 2.0, 8.0}) {
    for (double R : {1.0, 2.0}) {
      const auto e = robin_constant(Ball{kOrigin, R}, kOrigin, c, 1000, 12);
      const double exact = -1.0 / (R * R * oracle::radial_screened(c, R));
      CHECK(std::abs(e.lambda_hat - exact) <= 1e-8 * std::abs(exact));
      CHECK_FALSE(e.qualitative);
    }
  }
  CHECK(robin_constant(half_space_at(1.0), kOrigin, 1.0, 200, 13).qualitative);
  // Screening only lowers the weight, so lambda rises toward 0.
  const auto c0 = robin_constant(Ball{kOrigin, 1.0}, {0.4, 0, 0, 0}, 0.0, 20'000, 14);
  const auto c1 = robin_constant(Ball{kOrigin, 1.0}, {0.4, 0, 0, 0}, 1.0, 20'000, 14);
  CHECK(c1.lambda_hat > c0.lambda_hat);
}

TEST_CASE("domain monotonicity and scaling") {
  const auto small = robin_constant(Ball{kOrigin, 1.0}, {0.2, 0, 0, 0}, 0.0, 20'000, 15);
  const auto big = robin_constant(Ball{kOrigin, 1.5}, {0.2, 0, 0, 0}, 0.0, 20'000, 16);
  CHECK(small.lambda_hat <= big.lambda_hat + 3.0 * std::hypot(small.stderr_, big.stderr_));

  const auto near = robin_constant(half_space_at(0.5), kOrigin, 0.0, 20'000, 17);
  const auto far = robin_constant(half_space_at(1.0), kOrigin, 0.0, 20'000, 18);
  CHECK(near.lambda_hat <= far.lambda_hat + 3.0 * std::hypot(near.stderr_, far.stderr_));

  // Centred balls: exact, so the scaling law holds to rounding.
  const double b1 = robin_constant(Ball{kOrigin, 1.0}, kOrigin, 0.0, 100, 19).lambda_hat;
  const double b4 = robin_constant(Ball{kOrigin, 4.0}, kOrigin, 0.0, 100, 19).lambda_hat;
  CHECK(b4 == doctest::Approx(b1 / 16.0).epsilon(1e-14));

  const auto h1 = robin_constant(half_space_at(1.0), kOrigin, 0.0, 40'000, 20);
  const auto h3 = robin_constant(half_space_at(3.0), kOrigin, 0.0, 40'000, 21);
  CHECK(std::abs(h3.lambda_hat - h1.lambda_hat / 9.0) <= 3.0 * std::hypot(h3.stderr_, h1.stderr_ / 9.0));
}

TEST_CASE("determinism across shards") {
  const Ball dom{kOrigin, 1.0};
  const Vec4 pole{0.5, 0.1, -0.2, 0.0};
  WosConfig cfg;
  cfg.block_size = 256;
  const auto ref = robin_constant_serial(dom, pole, 0.0, 5000, 99, cfg);
  for (int shards : {1, 2, 3, 4}) {
    cfg.shards = shards;
    const auto e = robin_constant(dom, pole, 0.0, 5000, 99, cfg);
    CHECK(e.lambda_hat == ref.lambda_hat);
    CHECK(e.stderr_ == ref.stderr_);
    CHECK(e.mean_steps == ref.mean_steps);
  }
  const auto again = robin_constant(dom, pole, 0.0, 5000, 99);
  CHECK(again.lambda_hat == robin_constant(dom, pole, 0.0, 5000, 99).lambda_hat);
  CHECK(again.lambda_hat != robin_constant(dom, pole, 0.0, 5000, 100).lambda_hat);

  CHECK_THROWS_AS(robin_constant(dom, {2.0, 0, 0, 0}, 0.0, 10, 1), Error);
  CHECK_THROWS_AS(robin_constant(dom, {1.0, 0, 0, 0}, 0.0, 10, 1), Error);
  CHECK_THROWS_AS(robin_constant(dom, kOrigin, -1.0, 10, 1), Error);
}

TEST_CASE("Nemirovskii path toward the boundary") {
  const HopfParams p(2.0, 4.0);
  const auto spec = make_nemirovskii(-1.0, 0.0);  // {Re w > 0}
  std::vector<CPair> anchors;
  for (int k = 1; k <= 4; ++k) anchors.push_back({1.0, std::polar(1.0, M_PI / 2 - std::ldexp(1.0, -k))});
  RobinBudget budget;
  budget.walks = 20'000;
  const auto rows = boundary_behavior_experiment(spec, anchors, p, budget);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    const double c = std::cos(*row.theta);
    CHECK(row.dist.lower == c);
    CHECK(row.dist.upper == c);
    CHECK(within_3sigma(row.est, -1.0 / (4.0 * c * c)));
    if (c < 0.158) CHECK(row.est.lambda_hat < -10.0);
  }
  CHECK(std::cos(*rows.back().theta) < 0.158);

  // Angular approach to T_a: the translate depends on theta only.
  std::vector<CPair> radial;
  for (int k = 0; k <= 10; k += 2) radial.push_back({1.0, std::polar(std::ldexp(1.0, -k), M_PI / 3)});
  const auto flat = boundary_behavior_experiment(spec, radial, p, budget);
  for (const auto& row : flat) {
    CHECK(row.est.lambda_hat == flat.front().est.lambda_hat);
    CHECK(row.est.lambda_hat >= -1.0 - 3.0 * row.est.stderr_);
  }

  std::ostringstream os;
  write_boundary_csv(os, rows);
  CHECK(os.str().rfind("z_re,z_im,w_re,w_im,theta,dist_lower,dist_upper,lambda_hat,stderr,n_walks,truncated_walks\n",
                       0) == 0);
}

TEST_CASE("level band anchors approaching a boundary leaf") {
  const HopfParams p(2.0, 4.0);
  std::vector<CPair> anchors;
  for (double c : {1.0, 0.7, 0.55, 0.51}) anchors.push_back({1.0, c});
  RobinBudget budget;
  budget.walks = 400;
  const auto rows = boundary_behavior_experiment(make_level_band(0.5, 2.0), anchors, p, budget);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].dist.upper < rows[i - 1].dist.lower);
    CHECK(rows[i].est.lambda_hat < rows[i - 1].est.lambda_hat);
  }
  CHECK(rows.back().est.lambda_hat < -10.0);
}

TEST_CASE("plurisubharmonicity spot checks") {
  const HopfParams p(2.0, 4.0);
  const auto spec = make_nemirovskii(-1.0, 0.0);
  RobinBudget budget;
  budget.walks = 4000;
  const auto along_z = psh_spot_check(spec, {1.0, cplx(1.0, 0.5)}, {1.0, 0.0}, 0.25, 8, budget, p);
  CHECK(along_z.residual == 0.0);
  CHECK(along_z.consistent);

  const auto along_w = psh_spot_check(spec, {1.0, cplx(1.0, 0.5)}, {0.0, 1.0}, 0.25, 8, budget, p);
  CHECK(along_w.consistent);
  CHECK(along_w.ring_values.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const cplx w = cplx(1.0, 0.5) + std::polar(0.25, kTwoPi * i / 8);
    const double c = std::cos(std::arg(w));
    CHECK(std::abs(along_w.ring_values[i] - 1.0 / (4 * c * c)) <= 0.1);
  }

  const auto control = psh_spot_check([](CPair) { return SolvableDomain{Ball{kIdentity4, 1.0}}; }, {1.0, 1.0},
                                      {1.0, 1.0}, 0.5, 6, budget);
  CHECK(control.residual == 0.0);

  CHECK_THROWS_AS(psh_spot_check(spec, {1.0, cplx(0.1, 0.0)}, {0.0, 1.0}, 0.25, 8, budget, p), Error);
}

}  // TEST_SUITE
