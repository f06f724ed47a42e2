#pragma once

#include <vector>

#include "hopf/params.hpp"

namespace hopf {

inline constexpr int kMaxPolyDegree = 16;

/// Real polynomial in x = Re z, y = Im z: sum of coef(i, j) x^i y^j.
class RealPoly2 {
 public:
  RealPoly2() = default;
  explicit RealPoly2(int degree);

  int degree() const { return degree_; }
  double coef(int i, int j) const;
  void set(int i, int j, double value);
  void add(int i, int j, double value);

  double eval(double x, double y) const;
  double eval(cplx z) const { return eval(z.real(), z.imag()); }

  RealPoly2 dx() const;
  RealPoly2 dy() const;

  /// d/dz = (d/dx - i d/dy) / 2.
  cplx d_z(cplx z) const;
  /// d^2/dz dzbar = Laplacian / 4.
  double d_zzbar(cplx z) const;

  /// Coefficients b_j of x^{d-j} y^j in the degree-d homogeneous part.
  std::vector<double> homogeneous(int d) const;
  /// Lowest degree with a coefficient above tol in magnitude; -1 if none.
  int lowest_degree(double tol = 0.0) const;
  bool is_zero(double tol = 0.0) const { return lowest_degree(tol) < 0; }

  RealPoly2 operator+(const RealPoly2& o) const;
  RealPoly2 operator*(double s) const;

  /// Re(c z^p zbar^q).
  static RealPoly2 re_monomial(cplx c, int p, int q);

 private:
  int degree_ = 0;
  std::vector<double> c_{0.0};  // (degree+1)^2 grid indexed i * (degree + 1) + j
};

/// The degree-d homogeneous part of p written as sum_k e_k z^{d-k} zbar^k,
/// k = 0..d, with e_{d-k} = conj(e_k).
std::vector<cplx> complex_form(const RealPoly2& p, int d);

}  // namespace hopf
