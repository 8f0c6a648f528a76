#include "ballgreen/kernels.hpp"

#include <cmath>

#include "ballgreen/errors.hpp"

namespace ballgreen::kernels {

namespace {

constexpr double kDiagonalGuard = 1e-12;

void guard_diagonal(const Vec& x, const Vec& y) {
  if (geom::norm(geom::sub(x, y)) < kDiagonalGuard)
    throw SingularityError("kernel evaluated on the diagonal x = y");
}

}  // namespace

double green(const Vec& x, const Vec& y, const DimensionContext& ctx) {
  guard_diagonal(x, y);
  double d = geom::norm(geom::sub(x, y));
  double b = geom::bracket(x, y);
  int n = ctx.n;
  return ctx.c_n * (std::pow(d, 2 - n) - std::pow(b, 2 - n));
}

double green(const KernelPair& p) { return green(p.x, p.y, p.ctx); }

Vec green_gradient(const Vec& x, const Vec& y, const DimensionContext& ctx) {
  guard_diagonal(x, y);
  int n = ctx.n;
  Vec d = geom::sub(x, y);
  double dn = std::pow(geom::norm(d), n);
  double bn = std::pow(geom::bracket(x, y), n);
  double y2 = geom::norm_sq(y);
  double pref = ctx.c_n * (2.0 - n);
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    g[i] = pref * (d[i] / dn - (y2 * x[i] - y[i]) / bn);
  return g;
}

Vec green_gradient(const KernelPair& p) { return green_gradient(p.x, p.y, p.ctx); }

double n_kernel_mag(const Vec& x, const Vec& y, const DimensionContext& ctx) {
  guard_diagonal(x, y);
  int n = ctx.n;
  Vec d = geom::sub(x, y);
  double dn = std::pow(geom::norm(d), n);
  double bn = std::pow(geom::bracket(x, y), n);
  double y2 = geom::norm_sq(y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double c = d[i] / dn - (y2 * x[i] - y[i]) / bn;
    s += c * c;
  }
  return std::sqrt(s);
}

double n_kernel_mag(const KernelPair& p) { return n_kernel_mag(p.x, p.y, p.ctx); }

double h_kernel_mag(const Vec& x, const Vec& y, const DimensionContext& ctx) {
  return n_kernel_mag(y, x, ctx);
}

double poisson_kernel(const Vec& x, const Vec& eta, const DimensionContext& ctx) {
  double x2 = geom::norm_sq(x);
  if (!(x2 < 1.0)) throw std::domain_error("poisson_kernel: |x| < 1 required");
  if (std::abs(geom::norm(eta) - 1.0) > 1e-12)
    throw std::domain_error("poisson_kernel: |eta| = 1 required");
  double d = geom::norm(geom::sub(x, eta));
  return (1.0 - x2) / std::pow(d, ctx.n);
}

ChartVec n_kernel_chart(double x_radius, double s, double u, const DimensionContext& ctx) {
  int n = ctx.n;
  double y_par = x_radius + s * u;
  double y_perp = s * std::sqrt(std::max(0.0, 1.0 - u * u));
  double y2 = y_par * y_par + y_perp * y_perp;
  double b2 = x_radius * x_radius * y2 - 2.0 * x_radius * y_par + 1.0;
  double bn = std::pow(b2, 0.5 * n);
  double spow = std::pow(s, n - 1);
  double sig_perp = std::sqrt(std::max(0.0, 1.0 - u * u));
  ChartVec k;
  k.par = -u - spow * (y2 * x_radius - y_par) / bn;
  k.perp = -sig_perp + spow * y_perp / bn;
  return k;
}

ChartVec h_kernel_chart(double x_radius, double s, double u, const DimensionContext& ctx) {
  int n = ctx.n;
  double y_par = x_radius + s * u;
  double y_perp = s * std::sqrt(std::max(0.0, 1.0 - u * u));
  double y2 = y_par * y_par + y_perp * y_perp;
  double b2 = x_radius * x_radius * y2 - 2.0 * x_radius * y_par + 1.0;
  double bn = std::pow(b2, 0.5 * n);
  double spow = std::pow(s, n - 1);
  double sig_perp = std::sqrt(std::max(0.0, 1.0 - u * u));
  double x2 = x_radius * x_radius;
  ChartVec h;
  h.par = u - spow * (x2 * y_par - x_radius) / bn;
  h.perp = sig_perp - spow * (x2 * y_perp) / bn;
  return h;
}

double green_chart(double x_radius, double s, double u, const DimensionContext& ctx) {
  int n = ctx.n;
  double y_par = x_radius + s * u;
  double y_perp = s * std::sqrt(std::max(0.0, 1.0 - u * u));
  double y2 = y_par * y_par + y_perp * y_perp;
  double b2 = x_radius * x_radius * y2 - 2.0 * x_radius * y_par + 1.0;
  double spow = std::pow(s, n - 1);
  return ctx.c_n * (s - spow * std::pow(b2, 0.5 * (2 - n)));
}

double identity_chain_rhs(const Vec& x, const Vec& z, const DimensionContext& ctx) {
  int n = ctx.n;
  double zn = geom::norm(z);
  if (zn < kDiagonalGuard)
    throw SingularityError("identity_chain_rhs: z = 0 corresponds to y = x");
  Vec mx = geom::scale(x, -1.0);
  double br = geom::bracket(z, mx);
  double x2 = geom::norm_sq(x);
  double zpow = std::pow(zn, n - 1);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double c = zpow * (z[i] + x[i]) - (x[i] * zn + z[i] / zn);
    s += c * c;
  }
  return std::pow(br, n - 2) * std::pow(1.0 - x2, 1 - n) * std::pow(zn, 1 - n) *
         std::sqrt(s);
}

}  // namespace ballgreen::kernels
