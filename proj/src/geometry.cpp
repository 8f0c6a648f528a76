#include "ballgreen/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "ballgreen/specfun.hpp"

namespace ballgreen::geom {

DimensionContext DimensionContext::make(int n) {
  if (n < 3) throw std::domain_error("DimensionContext requires n >= 3");
  DimensionContext ctx;
  ctx.n = n;
  ctx.omega = sphere_area_dim(n);
  ctx.c_n = 1.0 / ((n - 2) * ctx.omega);
  return ctx;
}

double sphere_area_dim(int d) {
  if (d < 1) throw std::domain_error("sphere_area_dim requires d >= 1");
  return 2.0 * std::pow(M_PI, 0.5 * d) / specfun::gamma_fn(0.5 * d);
}

double sphere_area(const DimensionContext& ctx) { return ctx.omega; }

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_sq(const Vec& a) { return dot(a, a); }

double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, double s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec axpy(double alpha, const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = alpha * x[i] + y[i];
  return r;
}

Vec basis_vec(int n, int axis) {
  if (axis < 0 || axis >= n) throw std::domain_error("basis_vec: axis out of range");
  Vec e(n, 0.0);
  e[axis] = 1.0;
  return e;
}

double bracket_sq(const Vec& x, const Vec& y) {
  return norm_sq(x) * norm_sq(y) - 2.0 * dot(x, y) + 1.0;
}

double bracket(const Vec& x, const Vec& y) {
  double b2 = bracket_sq(x, y);
  return b2 > 0.0 ? std::sqrt(b2) : 0.0;
}

Vec moebius(const Vec& x, const Vec& y) {
  Vec d = sub(y, x);
  double b2 = bracket_sq(x, y);
  double one_m_x2 = 1.0 - norm_sq(x);
  Vec r(x.size());
  double d2 = norm_sq(d);
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = (one_m_x2 * d[i] - d2 * x[i]) / b2;
  return r;
}

double moebius_norm_residual(const Vec& x, const Vec& y) {
  double lhs = norm(moebius(x, y));
  double rhs = norm(sub(x, y)) / bracket(x, y);
  return std::abs(lhs - rhs);
}

double moebius_jacobian(const Vec& x, const Vec& z) {
  int n = static_cast<int>(x.size());
  Vec mx = scale(x, -1.0);
  double b2 = bracket_sq(z, mx);
  return std::pow((1.0 - norm_sq(x)) / b2, n);
}

}  // namespace ballgreen::geom
