#pragma once
// Boundary models with levi2_residual >= 0 near 0, shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "hopf/boundary_model.hpp"

namespace corpus {

using hopf::BoundaryModel;
using hopf::cplx;
using hopf::kTwoPi;
using P = hopf::RealPoly2;

inline BoundaryModel model_of(P p0, double p2 = 0.0) {
  BoundaryModel m;
  m.p = {p0, P(0), P::re_monomial(p2, 0, 0)};
  return m;
}

inline P abs_pow(double a, int n) { return P::re_monomial(a, n, n); }  // a |z|^{2n}

// Models with p1 = 0, p2 >= 0 constant and subharmonic p0, so levi2_residual >= 0.
// Even-degree mixed terms obey |c| (n^2 - 1) <= a n^2.
inline std::vector<BoundaryModel> models(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0), pos(0.1, 1.0);
  auto rc = [&] { return cplx(u(rng), u(rng)); };
  std::vector<BoundaryModel> out;
  out.push_back(model_of(P::re_monomial(1.0, 2, 0)));  // Re z^2
  out.push_back(model_of(abs_pow(1.0, 1)));            // |z|^2
  out.push_back(model_of(P::re_monomial(1.0, 1, 0)));  // x
  for (int i = 0; i < 9; ++i) {
    cplx g = rc();
    if (std::abs(g) < 0.1) g += 0.5;
    out.push_back(model_of(P::re_monomial(g, 1, 0) + abs_pow(0.5 * (u(rng) + 1.0), 1) +
                               P::re_monomial(rc(), 2, 0) + P::re_monomial(rc(), 3, 0),
                           pos(rng)));
  }
  for (int i = 0; i < 10; ++i) {
    out.push_back(model_of(abs_pow(pos(rng), 1) + P::re_monomial(3.0 * rc(), 2, 0) + P::re_monomial(rc(), 3, 0) +
                           P::re_monomial(rc(), 4, 0)));
  }
  for (int i = 0; i < 9; ++i) {
    cplx a20 = rc();
    if (std::abs(a20) < 0.1) a20 += 0.5;
    out.push_back(model_of(P::re_monomial(a20, 2, 0) + P::re_monomial(rc(), 3, 0) + abs_pow(0.01, 2)));
  }
  for (int i = 0; i < 10; ++i) {
    const int d = 3 + 2 * (i % 3);
    cplx c = rc();
    if (std::abs(c) < 0.1) c += 0.5;
    out.push_back(model_of(P::re_monomial(c, d, 0) + abs_pow(pos(rng), (d + 1) / 2) +
                           P::re_monomial(rc(), d + 1, 0)));
  }
  for (int i = 0; i < 9; ++i) {
    const int n = 2 + i % 3;
    const double a = pos(rng);
    P p0 = abs_pow(a, n);
    if (i % 4 != 3) {
      const double bound = 0.9 * a * n * n / (n * n - 1.0);
      p0 = p0 + P::re_monomial(bound * std::polar(1.0, kTwoPi * pos(rng)), n + 1, n - 1) +
           P::re_monomial(rc(), 2 * n, 0);
    }
    out.push_back(model_of(p0, 0.5));
  }
  return out;
}


}  // namespace corpus
