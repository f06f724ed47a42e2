#include "hopf/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "hopf/errors.hpp"

namespace hopf {

RealPoly2::RealPoly2(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxPolyDegree) {
    fail(ErrorKind::InvalidInput, "polynomial degree must lie in [0, " + std::to_string(kMaxPolyDegree) + "]");
  }
  c_.assign(static_cast<std::size_t>((degree + 1) * (degree + 1)), 0.0);
}

double RealPoly2::coef(int i, int j) const {
  if (i < 0 || j < 0 || i > degree_ || j > degree_ || c_.empty()) return 0.0;
  return c_[static_cast<std::size_t>(i * (degree_ + 1) + j)];
}

void RealPoly2::set(int i, int j, double value) {
  if (i < 0 || j < 0 || i + j > degree_) fail(ErrorKind::InvalidInput, "monomial exceeds polynomial degree");
  c_[static_cast<std::size_t>(i * (degree_ + 1) + j)] = value;
}

void RealPoly2::add(int i, int j, double value) { set(i, j, coef(i, j) + value); }

double RealPoly2::eval(double x, double y) const {
  // Horner in x over Horner-in-y columns.
  double acc = 0.0;
  for (int i = degree_; i >= 0; --i) {
    double col = 0.0;
    for (int j = degree_ - i; j >= 0; --j) col = col * y + coef(i, j);
    acc = acc * x + col;
  }
  return acc;
}

RealPoly2 RealPoly2::dx() const {
  RealPoly2 out(std::max(degree_ - 1, 0));
  for (int i = 1; i <= degree_; ++i)
    for (int j = 0; i + j <= degree_; ++j) out.set(i - 1, j, i * coef(i, j));
  return out;
}

RealPoly2 RealPoly2::dy() const {
  RealPoly2 out(std::max(degree_ - 1, 0));
  for (int i = 0; i <= degree_; ++i)
    for (int j = 1; i + j <= degree_; ++j) out.set(i, j - 1, j * coef(i, j));
  return out;
}

cplx RealPoly2::d_z(cplx z) const { return 0.5 * cplx(dx().eval(z), -dy().eval(z)); }

double RealPoly2::d_zzbar(cplx z) const { return 0.25 * (dx().dx().eval(z) + dy().dy().eval(z)); }

std::vector<double> RealPoly2::homogeneous(int d) const {
  std::vector<double> b(static_cast<std::size_t>(d + 1), 0.0);
  for (int j = 0; j <= d; ++j) b[static_cast<std::size_t>(j)] = coef(d - j, j);
  return b;
}

int RealPoly2::lowest_degree(double tol) const {
  for (int d = 0; d <= degree_; ++d) {
    for (double v : homogeneous(d))
      if (std::abs(v) > tol) return d;
  }
  return -1;
}

RealPoly2 RealPoly2::operator+(const RealPoly2& o) const {
  RealPoly2 out(std::max(degree_, o.degree_));
  for (int i = 0; i <= out.degree_; ++i)
    for (int j = 0; i + j <= out.degree_; ++j) out.set(i, j, coef(i, j) + o.coef(i, j));
  return out;
}

RealPoly2 RealPoly2::operator*(double s) const {
  RealPoly2 out = *this;
  for (double& v : out.c_) v *= s;
  return out;
}

namespace {

/// Coefficients of (x + iy)^p (x - iy)^q indexed by the power of y.
std::vector<cplx> expand_zzbar(int p, int q) {
  std::vector<cplx> poly{1.0};
  auto mul = [&](cplx iy) {
    std::vector<cplx> next(poly.size() + 1, 0.0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] += poly[j] * iy;
    }
    poly = std::move(next);
  };
  for (int k = 0; k < p; ++k) mul({0.0, 1.0});
  for (int k = 0; k < q; ++k) mul({0.0, -1.0});
  return poly;
}

}  // namespace

RealPoly2 RealPoly2::re_monomial(cplx c, int p, int q) {
  if (p < 0 || q < 0) fail(ErrorKind::InvalidInput, "re_monomial needs nonnegative powers");
  const int d = p + q;
  RealPoly2 out(d);
  const std::vector<cplx> e = expand_zzbar(p, q);
  for (int j = 0; j <= d; ++j) out.set(d - j, j, (c * e[static_cast<std::size_t>(j)]).real());
  return out;
}

std::vector<cplx> complex_form(const RealPoly2& p, int d) {
  // x = (z + zbar)/2, y = (z - zbar)/(2i); track coefficients by the power of zbar.
  std::vector<cplx> e(static_cast<std::size_t>(d + 1), 0.0);
  const std::vector<double> b = p.homogeneous(d);
  const double scale = std::ldexp(1.0, -d);
  for (int j = 0; j <= d; ++j) {
    if (b[static_cast<std::size_t>(j)] == 0.0) continue;
    std::vector<cplx> poly{1.0};
    auto mul = [&](double sign) {
      std::vector<cplx> next(poly.size() + 1, 0.0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] += poly[k];
        next[k + 1] += sign * poly[k];
      }
      poly = std::move(next);
    };
    for (int k = 0; k < d - j; ++k) mul(1.0);
    for (int k = 0; k < j; ++k) mul(-1.0);
    cplx factor = b[static_cast<std::size_t>(j)] * scale;
    for (int k = 0; k < j; ++k) factor *= cplx(0.0, -1.0);  // 1/i = -i
    for (int k = 0; k <= d; ++k) e[static_cast<std::size_t>(k)] += factor * poly[static_cast<std::size_t>(k)];
  }
  return e;
}

}  // namespace hopf
