// Serial reference vs OpenMP walk-on-spheres, plus the orbit reduction kernel.
#include <chrono>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "hopf/flows.hpp"
#include "hopf/robin.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t walks = argc > 1 ? std::stoull(argv[1]) : 200'000;
  const int threads = omp_get_max_threads();
  std::printf("threads available: %d\n", threads);
  std::printf("%-28s %10s %10s %10s %s\n", "kernel", "serial_s", "omp_s", "speedup", "bit_identical");

  const std::vector<std::pair<const char*, hopf::SolvableDomain>> domains{
      {"ball R=1 (pole centre)", hopf::Ball{{0, 0, 0, 0}, 1.0}},
      {"product half-plane pi/3", hopf::ProductHalfPlaneR4{1.0471975511965976}},
  };
  for (const auto& [name, dom] : domains) {
    const hopf::Vec4 pole = std::holds_alternative<hopf::Ball>(dom) ? hopf::Vec4{0, 0, 0, 0} : hopf::kIdentity4;
    hopf::WosConfig cfg;
    cfg.shards = threads;
    hopf::RobinEstimate s, p;
    const double ts = seconds([&] { s = hopf::robin_constant_serial(dom, pole, 0.0, walks, 12345, cfg); });
    const double tp = seconds([&] { p = hopf::robin_constant(dom, pole, 0.0, walks, 12345, cfg); });
    std::printf("%-28s %10.3f %10.3f %10.2f %s\n", name, ts, tp, ts / tp,
                s.lambda_hat == p.lambda_hat && s.stderr_ == p.stderr_ ? "yes" : "NO");
  }

  const hopf::HopfParams params(2.0, 3.0);
  std::vector<hopf::cplx> grid;
  for (int i = 0; i < 1'000'000; ++i) grid.push_back(hopf::cplx(-20.0 + 40.0 * i / 1e6, 7.0 * i / 1e6));
  const hopf::VectorField X{1.0, 0.3};
  double t1 = 0.0, tn = 0.0;
  std::vector<hopf::HopfPoint> a, b;
  omp_set_num_threads(1);
  t1 = seconds([&] { a = hopf::orbit_reduce_samples(X, {1.0, 1.0}, grid, params); });
  omp_set_num_threads(threads);
  tn = seconds([&] { b = hopf::orbit_reduce_samples(X, {1.0, 1.0}, grid, params); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].rep == b[i].rep && a[i].lift_index == b[i].lift_index;
  std::printf("%-28s %10.3f %10.3f %10.2f %s\n", "orbit reduce 1e6 samples", t1, tn, t1 / tn, same ? "yes" : "NO");
  return 0;
}
