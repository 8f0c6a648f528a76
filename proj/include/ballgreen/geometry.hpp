#pragma once

#include <cstdint>
#include <vector>

namespace ballgreen::geom {

using Vec = std::vector<double>;

struct DimensionContext {
  int n;         // ambient dimension, n >= 3
  double omega;  // surface measure of S^{n-1} = 2 pi^{n/2} / Gamma(n/2)
  double c_n;    // 1 / ((n-2) omega)

  static DimensionContext make(int n);
};

// Surface measure of S^{n-1} for dimension d (free-standing; d >= 1).
double sphere_area_dim(int d);
double sphere_area(const DimensionContext& ctx);

double dot(const Vec& a, const Vec& b);
double norm_sq(const Vec& a);
double norm(const Vec& a);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, double s);
Vec axpy(double alpha, const Vec& x, const Vec& y);  // alpha*x + y

// Unit vector along e_axis (0-based) in dimension n.
Vec basis_vec(int n, int axis);

// [x,y] = | x|y| - y/|y| | computed as sqrt(|x|^2|y|^2 - 2<x,y> + 1);
// symmetric, equals 1 when either argument is 0, equals |x-y| when
// either argument lies on the unit sphere.
double bracket(const Vec& x, const Vec& y);
double bracket_sq(const Vec& x, const Vec& y);

// Moebius automorphism of the ball moving x to 0:
// T_x y = ((1-|x|^2)(y-x) - |y-x|^2 x) / [x,y]^2.
Vec moebius(const Vec& x, const Vec& y);

// | |T_x y| - |x-y|/[x,y] |; the norm identity holds exactly.
double moebius_norm_residual(const Vec& x, const Vec& y);

// Jacobian factor of the substitution y = T_{-x} z:
// ((1-|x|^2)/[z,-x]^2)^n.
double moebius_jacobian(const Vec& x, const Vec& z);

}  // namespace ballgreen::geom
