#include "ballgreen/normcalc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ballgreen/errors.hpp"
#include "ballgreen/kernels.hpp"
#include "ballgreen/specfun.hpp"

namespace ballgreen::norms {

KMethod kmethod_from_name(const std::string& name) {
  if (name == "direct") return KMethod::Direct;
  if (name == "moebius-reduced") return KMethod::MoebiusReduced;
  throw std::invalid_argument("unknown kernel-integral method: " + name);
}

std::string kmethod_name(KMethod m) {
  return m == KMethod::Direct ? "direct" : "moebius-reduced";
}

namespace {

// Reduced integrands after the Moebius substitution y = T_{-x} z, z = r xi.
// Both live on (r, u) in [0,1] x [-1,1] with the angular weight
// omega_{n-2} (1-u^2)^{(n-3)/2}; |r x + xi|^2 = r^2|x|^2 + 2 r |x| u + 1.
double k_reduced_integrand(int n, double xr, double r, double u) {
  double A = xr * r * (std::pow(r, n - 2) - 1.0);  // along x-hat
  double B = std::pow(r, n) - 1.0;                 // along xi
  double su = std::sqrt(std::max(0.0, 1.0 - u * u));
  double num = std::hypot(A + B * u, B * su);
  double den2 = r * r * xr * xr + 2.0 * r * xr * u + 1.0;
  return num / std::pow(den2, 0.5 * (n + 2));
}

double kswap_reduced_integrand(int n, double xr, double r, double u) {
  double su = std::sqrt(std::max(0.0, 1.0 - u * u));
  double rpow = std::pow(r, n - 1);
  double vpar = u + r * xr + rpow * xr * (r * xr * u + 1.0);
  double vperp = su * (1.0 - std::pow(r, n) * xr * xr);
  double num = std::hypot(vpar, vperp);
  double den2 = r * r * xr * xr + 2.0 * r * xr * u + 1.0;
  return num / std::pow(den2, 0.5 * (n + 2));
}

double moebius_reduced_integral(double xr, const QuadratureSpec& spec,
                                const DimensionContext& ctx, bool swapped) {
  const quad::GaussRule& rr = quad::gauss_legendre(spec.radial_nodes);
  // kinked absolute value: 4x angular nodes
  quad::ZonalRule ang = quad::zonal_angular_rule(ctx.n, 4 * spec.angular_nodes);
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  std::vector<double> terms;
  terms.reserve(rr.nodes.size() * ang.u.size());
  for (std::size_t i = 0; i < rr.nodes.size(); ++i) {
    double r = 0.5 * (rr.nodes[i] + 1.0);
    double wr = 0.5 * rr.weights[i];
    for (std::size_t j = 0; j < ang.u.size(); ++j) {
      double v = swapped ? kswap_reduced_integrand(ctx.n, xr, r, ang.u[j])
                         : k_reduced_integrand(ctx.n, xr, r, ang.u[j]);
      terms.push_back(wr * ang.w[j] * v);
    }
  }
  return (1.0 - xr * xr) * om2 * quad::pairwise_sum(terms);
}

double direct_chart_integral(double xr, const QuadratureSpec& spec,
                             const DimensionContext& ctx, bool swapped) {
  return quad::polar_chart_integrate(
      xr,
      [&](const quad::ChartPoint& cp) {
        kernels::ChartVec k = swapped ? kernels::h_kernel_chart(xr, cp.s, cp.u, ctx)
                                      : kernels::n_kernel_chart(xr, cp.s, cp.u, ctx);
        return std::hypot(k.par, k.perp);
      },
      spec, ctx, /*split_at_radius=*/false);
}

}  // namespace

double kernel_integral_K(double x_radius, KMethod method, const QuadratureSpec& spec,
                         const DimensionContext& ctx) {
  if (!(x_radius >= 0.0 && x_radius < 1.0))
    throw std::domain_error("kernel_integral_K: radius in [0, 1)");
  spec.validate();
  return method == KMethod::Direct
             ? direct_chart_integral(x_radius, spec, ctx, false)
             : moebius_reduced_integral(x_radius, spec, ctx, false);
}

double kernel_integral_Kswap(double x_radius, KMethod method, const QuadratureSpec& spec,
                             const DimensionContext& ctx) {
  if (!(x_radius >= 0.0 && x_radius < 1.0))
    throw std::domain_error("kernel_integral_Kswap: radius in [0, 1)");
  spec.validate();
  return method == KMethod::Direct
             ? direct_chart_integral(x_radius, spec, ctx, true)
             : moebius_reduced_integral(x_radius, spec, ctx, true);
}

double kernel_integral_K_at(const Vec& x, const QuadratureSpec& spec,
                            const DimensionContext& ctx) {
  return quad::polar_chart_integrate_full3(
      x, [&](const Vec& y) { return kernels::n_kernel_mag(x, y, ctx); }, spec, ctx);
}

double sphere_integral_reduced(double a_exponent, double r, double x_radius,
                               const DimensionContext& ctx) {
  double rho = r * x_radius;
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::domain_error("sphere_integral_reduced: r*|x| must lie in [0, 1)");
  double n = ctx.n;
  double cn = 2.0 * std::pow(M_PI, 0.5 * n) / specfun::gamma_fn(0.5 * n);
  return cn * specfun::gauss_2f1(0.5 * a_exponent, 1.0 - 0.5 * n + 0.5 * a_exponent,
                                 0.5 * n, rho * rho);
}

double sphere_integral_direct(double a_exponent, double rho, const DimensionContext& ctx,
                              double tol) {
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  return om2 * quad::integrate_adaptive(
                   [&](double t) {
                     double den = 1.0 + rho * rho + 2.0 * rho * std::cos(t);
                     return std::pow(std::sin(t), ctx.n - 2) *
                            std::pow(den, -0.5 * a_exponent);
                   },
                   0.0, M_PI, tol);
}

// ---------------------------------------------------------------------------

namespace {
double lg(double x) { return specfun::lgamma_fn(x); }
}  // namespace

double series_a0(int n) {
  return 2.0 * n * std::pow(M_PI, 0.5 * n) / ((n + 1.0) * specfun::gamma_fn(0.5 * n));
}

double coefficient_a(int n, int m) {
  if (m < 1) throw std::domain_error("coefficient_a: m >= 1");
  double nn = n, mm = m;
  double t1 = (2.0 * (nn - 3.0) * nn + 4.0 * (nn - 2.0) * mm) /
              (nn * (nn - 3.0 + 2.0 * mm) * (nn - 1.0 + 2.0 * mm) * (1.0 + nn + 2.0 * mm));
  double logt2 = lg(0.5 * nn) + lg(mm - 0.5) + lg(0.5 * (nn - 3.0) + mm) -
                 lg(0.5 * (1.0 + nn)) - lg(1.0 + mm) - lg(0.5 * nn + mm);
  double t2 = (nn - 2.0) * (nn - 3.0 + 4.0 * mm) / (8.0 * std::sqrt(M_PI)) *
              std::exp(logt2);
  double cn = 2.0 * std::pow(M_PI, 0.5 * nn) / specfun::gamma_fn(0.5 * nn);
  return cn * (t1 - t2);
}

double coefficient_b(int n, int m) {
  if (m < 1) throw std::domain_error("coefficient_b: m >= 1");
  double nn = n, mm = m;
  double rational = 2.0 * ((nn - 3.0) * nn + 2.0 * (nn - 2.0) * mm) /
                    ((nn - 2.0) * nn * (nn - 3.0 + 4.0 * mm));
  double logpart = 0.5 * std::log(M_PI) + lg(mm + 1.0) + lg(0.5 * (1.0 + nn)) +
                   lg(0.5 * nn + mm) - lg(0.5 * nn) - lg(mm - 0.5) -
                   lg(0.5 * (3.0 + nn) + mm);
  return rational * std::exp(logpart);
}

double majorant_c(int n, int m) {
  if (m < 1) throw std::domain_error("majorant_c: m >= 1");
  double nn = n, mm = m;
  return 2.0 * mm * ((nn - 3.0) * nn + 2.0 * (nn - 2.0) * mm) * std::sqrt(M_PI) *
         specfun::gamma_fn(0.5 * (1.0 + nn)) /
         ((nn - 2.0) * (nn + 2.0 * mm) * (nn - 3.0 + 4.0 * mm) *
          specfun::gamma_fn(1.0 + 0.5 * nn));
}

double majorant_c_limit(int n) {
  return std::sqrt(M_PI) * specfun::gamma_fn(0.5 * (1.0 + n)) /
         (2.0 * specfun::gamma_fn(1.0 + 0.5 * n));
}

double coefficient_e(int n, int m) {
  if (m < 1) throw std::domain_error("coefficient_e: m >= 1");
  double nn = n, mm = m;
  double rational = nn * (8.0 * mm * mm + (nn - 1.0) * (nn - 1.0) + 2.0 * mm * (3.0 * nn - 5.0)) /
                    ((2.0 * mm + nn - 1.0) * (2.0 * mm + nn - 1.0) *
                     (2.0 * mm + nn + 1.0) * (2.0 * mm + nn + 1.0));
  double logpart = lg(mm - 0.5) + lg(1.5 + mm + 0.5 * nn) + lg(0.5 * nn) -
                   0.5 * std::log(M_PI) - lg(1.0 + mm) - lg(mm + 0.5 * nn) -
                   lg(0.5 * (1.0 + nn));
  return rational * std::exp(logpart);
}

SeriesCoefficients SeriesCoefficients::compute(int n, int m_max) {
  if (m_max < 1) throw std::domain_error("SeriesCoefficients: m_max >= 1");
  SeriesCoefficients sc;
  sc.n = n;
  sc.m_max = m_max;
  sc.a0 = series_a0(n);
  sc.c_limit = majorant_c_limit(n);
  sc.a.resize(m_max);
  sc.e.resize(m_max);
  sc.b.resize(m_max);
  sc.c.resize(m_max);
  for (int m = 1; m <= m_max; ++m) {
    sc.a[m - 1] = coefficient_a(n, m);
    sc.e[m - 1] = coefficient_e(n, m);
    sc.b[m - 1] = coefficient_b(n, m);
    sc.c[m - 1] = majorant_c(n, m);
  }
  return sc;
}

double series_J_theorem(double x_radius, int m_max, const DimensionContext& ctx) {
  if (m_max < 50) throw std::domain_error("series_J_theorem: m_max >= 50");
  double x2 = x_radius * x_radius;
  double s = series_a0(ctx.n);
  double xp = 1.0;
  for (int m = 1; m <= m_max; ++m) {
    xp *= x2;
    s += coefficient_a(ctx.n, m) * xp;
  }
  return s;
}

double series_J_theorem_integral(double x_radius, const DimensionContext& ctx,
                                 double tol) {
  int n = ctx.n;
  double x2 = x_radius * x_radius;
  double cn = 2.0 * std::pow(M_PI, 0.5 * n) / specfun::gamma_fn(0.5 * n);
  double integral = quad::integrate_adaptive(
      [&](double r) {
        double t = r * r * x2;
        double f1 = (1.0 - std::pow(r, n - 2)) *
                    specfun::gauss_2f1(1.5, 0.5 * (1.0 + n), 0.5 * n, t);
        double f2 = (std::pow(r, n - 2) - std::pow(r, n)) *
                    (n - (n - 4.0) * t) / (n * std::pow(1.0 - t, 3));
        return f1 + f2;
      },
      0.0, 1.0, tol);
  return cn * (1.0 - x2) * integral;
}

double series_J_lemma(double x_radius, int m_max, const DimensionContext& ctx) {
  if (m_max < 50) throw std::domain_error("series_J_lemma: m_max >= 50");
  double x2 = x_radius * x_radius;
  double s = ctx.n / (ctx.n + 1.0);
  double xp = 1.0;
  for (int m = 1; m <= m_max; ++m) {
    xp *= x2;
    s -= coefficient_e(ctx.n, m) * xp;
  }
  return s;
}

double series_J_lemma_integral(double x_radius, const DimensionContext& ctx, double tol) {
  int n = ctx.n;
  double x2 = x_radius * x_radius;
  double integral = quad::integrate_adaptive(
      [&](double r) {
        return (1.0 - std::pow(r, n)) *
               specfun::gauss_2f1(1.5, 0.5 * (1.0 + n), 0.5 * n, r * r * x2);
      },
      0.0, 1.0, tol);
  return (1.0 - x2) * integral;
}

double L_closed_form(double x_radius, const DimensionContext& ctx) {
  double x2 = x_radius * x_radius;
  double cnp = ctx.omega / (ctx.n + 1.0);
  return cnp * (1.0 - x2) *
         specfun::gauss_2f1(1.0, 0.5 * (1.0 + ctx.n), 0.5 * (3.0 + ctx.n), x2);
}

double L_series(double x_radius, int m_max, const DimensionContext& ctx) {
  double x2 = x_radius * x_radius;
  double nn = ctx.n;
  double s = 1.0;
  double xp = 1.0;
  for (int m = 1; m <= m_max; ++m) {
    xp *= x2;
    s -= 2.0 * (1.0 + nn) / (-1.0 + 4.0 * m * m + 4.0 * m * nn + nn * nn) * xp;
  }
  return ctx.omega / (nn + 1.0) * s;
}

double L_quadrature(double x_radius, const QuadratureSpec& spec,
                    const DimensionContext& ctx) {
  // int_B |y| (1-|x|^2)/[x,y]^n dy about the axis of x
  double x2 = x_radius * x_radius;
  return quad::reduced_polar_integrate(
      [&](double r, double u) {
        double b2 = x2 * r * r - 2.0 * x_radius * r * u + 1.0;
        return r * (1.0 - x2) / std::pow(b2, 0.5 * ctx.n);
      },
      spec, ctx);
}

// ---------------------------------------------------------------------------

std::vector<double> default_radii_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 19; ++i) g.push_back(0.05 * i);
  g.push_back(0.99);
  return g;
}

namespace {

NormReport scan_norm(const DimensionContext& ctx, const QuadratureSpec& spec,
                     NormConvention convention, const std::vector<double>& radii,
                     bool swapped) {
  if (radii.empty()) throw std::invalid_argument("norm scan: empty radii grid");
  if (std::find(radii.begin(), radii.end(), 0.0) == radii.end())
    throw std::invalid_argument("norm scan: radii grid must include 0");
  NormReport rep;
  rep.op = swapped ? "norm-l1" : "norm-inf";
  rep.convention = convention;
  rep.prefactor = ops::convention_prefactor(convention, ctx);
  rep.method = "quadrature-direct";
  rep.radii = radii;
  rep.values.reserve(radii.size());
  double best = -1.0, best_r = 0.0;
  for (double r : radii) {
    double k = swapped ? kernel_integral_Kswap(r, KMethod::Direct, spec, ctx)
                       : kernel_integral_K(r, KMethod::Direct, spec, ctx);
    double v = rep.prefactor * k;
    rep.values.push_back(v);
    if (v > best) {
      best = v;
      best_r = r;
    }
  }
  rep.value = best;
  rep.argmax_radius = best_r;
  double closed = swapped ? ctx.omega : ctx.omega * ctx.n / (ctx.n + 1.0);
  rep.closed_form_target = rep.prefactor * closed;
  rep.normalization_note =
      "operator norms depend on the kernel prefactor convention (unit, sigma "
      "= 1/omega, green = 1/((n-2) omega)); values are reported as "
      "(value, convention) pairs";
  return rep;
}

}  // namespace

NormReport norm_inf_estimate(const DimensionContext& ctx, const QuadratureSpec& spec,
                             NormConvention convention,
                             const std::vector<double>& radii) {
  return scan_norm(ctx, spec, convention, radii, false);
}

NormReport norm_l1_estimate(const DimensionContext& ctx, const QuadratureSpec& spec,
                            NormConvention convention, const std::vector<double>& radii,
                            bool with_matrix) {
  NormReport rep = scan_norm(ctx, spec, convention, radii, true);
  if (with_matrix && ctx.n == 3) {
    DiscretizationResult d = discretized_operator_norms(ctx, 17, convention);
    rep.has_matrix = true;
    rep.matrix_norm1 = d.norm1_B;
    rep.matrix_norminf_of_transpose = d.norminf_of_B_transpose;
    rep.matrix_norminf = d.norminf_M;
    rep.matrix_spectral_sym = d.spectral_sym;
    rep.matrix_cells = d.cells;
  }
  return rep;
}

double interpolation_bound(double p, const DimensionContext& ctx,
                           const QuadratureSpec& spec, NormConvention convention) {
  if (std::isnan(p) || p < 1.0)
    throw std::domain_error("interpolation_bound: p must lie in [1, +infinity]");
  double pref = ops::convention_prefactor(convention, ctx);
  double n1 = pref * kernel_integral_Kswap(0.0, KMethod::Direct, spec, ctx);
  double ninf = pref * kernel_integral_K(0.0, KMethod::Direct, spec, ctx);
  if (std::isinf(p)) return ninf;
  if (p == 1.0) return n1;
  return std::pow(n1, 1.0 / p) * std::pow(ninf, (p - 1.0) / p);
}

// ---------------------------------------------------------------------------
// Cube-cell Nystrom discretization (n = 3).

namespace {

// int over the unit cube at integer offset `o` of |u|^{-2} du. The o = 0
// case integrates exactly in polar form: int_{S^2} R_cube(sigma) dsigma
// with R_cube = 0.5/max|sigma_k|.
double cube_geometry_factor(const std::array<int, 3>& o) {
  if (o[0] == 0 && o[1] == 0 && o[2] == 0) {
    int nu = 128, nphi = 256;
    const quad::GaussRule& ru = quad::gauss_legendre(nu);
    double tot = 0.0;
    for (int j = 0; j < nu; ++j) {
      double u = ru.nodes[j];
      double su = std::sqrt(std::max(0.0, 1.0 - u * u));
      double row = 0.0;
      for (int k = 0; k < nphi; ++k) {
        double phi = 2.0 * M_PI * (k + 0.5) / nphi;
        double sx = std::abs(su * std::cos(phi));
        double sy = std::abs(su * std::sin(phi));
        double sz = std::abs(u);
        row += 0.5 / std::max({sx, sy, sz});
      }
      tot += ru.weights[j] * row * (2.0 * M_PI / nphi);
    }
    return tot;
  }
  int sub = 20;
  double tot = 0.0;
  for (int a = 0; a < sub; ++a)
    for (int b = 0; b < sub; ++b)
      for (int c = 0; c < sub; ++c) {
        double ux = o[0] + (a + 0.5) / sub - 0.5;
        double uy = o[1] + (b + 0.5) / sub - 0.5;
        double uz = o[2] + (c + 0.5) / sub - 0.5;
        tot += 1.0 / (ux * ux + uy * uy + uz * uz);
      }
  return tot / (sub * sub * sub);
}

const std::map<std::array<int, 3>, double>& offset_table() {
  static const std::map<std::array<int, 3>, double> table = [] {
    std::map<std::array<int, 3>, double> t;
    for (int a = 0; a <= 2; ++a)
      for (int b = a; b <= 2; ++b)
        for (int c = b; c <= 2; ++c) t[{a, b, c}] = cube_geometry_factor({a, b, c});
    return t;
  }();
  return table;
}

double lookup_offset(int dx, int dy, int dz) {
  std::array<int, 3> key = {std::abs(dx), std::abs(dy), std::abs(dz)};
  std::sort(key.begin(), key.end());
  return offset_table().at(key);
}

}  // namespace

DiscretizationResult discretized_operator_norms(const DimensionContext& ctx,
                                                int cells_per_axis,
                                                NormConvention convention) {
  if (ctx.n != 3)
    throw SchemeMismatchError("discretized_operator_norms is implemented for n = 3");
  if (cells_per_axis < 5 || cells_per_axis > 40)
    throw std::invalid_argument("discretized_operator_norms: cells_per_axis in [5, 40]");
  const int nc = cells_per_axis;
  const double h = 2.0 / nc;
  const double pref = ops::convention_prefactor(convention, ctx);

  struct Cell {
    Vec x;
    double vol;
    int ix, iy, iz;
  };
  std::vector<Cell> cells;
  std::map<std::array<int, 3>, int> index;
  const int sub = 5;
  for (int ix = 0; ix < nc; ++ix)
    for (int iy = 0; iy < nc; ++iy)
      for (int iz = 0; iz < nc; ++iz) {
        Vec c = {-1.0 + h * (ix + 0.5), -1.0 + h * (iy + 0.5), -1.0 + h * (iz + 0.5)};
        if (geom::norm(c) >= 1.0 + 0.87 * h) continue;
        int inside = 0;
        for (int a = 0; a < sub; ++a)
          for (int b = 0; b < sub; ++b)
            for (int d = 0; d < sub; ++d) {
              Vec y = {c[0] + ((a + 0.5) / sub - 0.5) * h,
                       c[1] + ((b + 0.5) / sub - 0.5) * h,
                       c[2] + ((d + 0.5) / sub - 0.5) * h};
              if (geom::norm_sq(y) < 1.0) ++inside;
            }
        if (inside == 0) continue;
        double frac = static_cast<double>(inside) / (sub * sub * sub);
        index[{ix, iy, iz}] = static_cast<int>(cells.size());
        cells.push_back({c, frac * h * h * h, ix, iy, iz});
      }

  const int N = static_cast<int>(cells.size());
  std::vector<double> M(static_cast<std::size_t>(N) * N, 0.0);

  for (int i = 0; i < N; ++i) {
    const Vec& xi = cells[i].x;
    for (int j = 0; j < N; ++j) {
      if (j == i) continue;
      double km = kernels::n_kernel_mag(xi, cells[j].x, ctx);
      M[static_cast<std::size_t>(i) * N + j] = pref * km * cells[j].vol;
    }
    // near field: replace the point rule by the exact cell integral of the
    // |x-y|^{1-n} factor, modulated by the smooth residual kappa
    for (int dx = -2; dx <= 2; ++dx)
      for (int dy = -2; dy <= 2; ++dy)
        for (int dz = -2; dz <= 2; ++dz) {
          auto it = index.find({cells[i].ix + dx, cells[i].iy + dy, cells[i].iz + dz});
          if (it == index.end()) continue;
          int j = it->second;
          double G = lookup_offset(dx, dy, dz);
          double kappa = 1.0;
          if (j != i) {
            double dist = geom::norm(geom::sub(xi, cells[j].x));
            kappa = kernels::n_kernel_mag(xi, cells[j].x, ctx) *
                    std::pow(dist, ctx.n - 1);
          }
          M[static_cast<std::size_t>(i) * N + j] =
              pref * kappa * G * h * (cells[j].vol / (h * h * h));
        }
  }

  DiscretizationResult out;
  out.cells = N;
  out.cell_size = h;

  double rowmax = 0.0;
  for (int i = 0; i < N; ++i) {
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += std::abs(M[static_cast<std::size_t>(i) * N + j]);
    rowmax = std::max(rowmax, s);
  }
  out.norminf_M = rowmax;

  // B = D M D^{-1}. Column sums of B and row sums of B^T are assembled by
  // two separate loops over the same term order; their agreement is the
  // finite-dimensional adjoint identity.
  double colmax = 0.0;
  for (int jc = 0; jc < N; ++jc) {
    double s = 0.0;
    for (int j = 0; j < N; ++j)
      s += std::abs(cells[j].vol * M[static_cast<std::size_t>(j) * N + jc] /
                    cells[jc].vol);
    colmax = std::max(colmax, s);
  }
  out.norm1_B = colmax;
  double rowmax_bt = 0.0;
  for (int i = 0; i < N; ++i) {
    double s = 0.0;
    for (int j = 0; j < N; ++j)  // row i of B^T collects B[j][i]
      s += std::abs(cells[j].vol * M[static_cast<std::size_t>(j) * N + i] /
                    cells[i].vol);
    rowmax_bt = std::max(rowmax_bt, s);
  }
  out.norminf_of_B_transpose = rowmax_bt;

  // symmetrized L^2 representative: S = (C + C^T)/2, C = D^{1/2} M D^{-1/2};
  // power iteration via two M matvecs per step
  std::vector<double> sqv(N);
  for (int i = 0; i < N; ++i) sqv[i] = std::sqrt(cells[i].vol);
  std::vector<double> v(N, 1.0 / std::sqrt(static_cast<double>(N)));
  std::vector<double> p(N), q(N), t(N), s2(N), w(N);
  double lambda = 0.0;
  for (int iter = 0; iter < 150; ++iter) {
    for (int i = 0; i < N; ++i) p[i] = v[i] / sqv[i];
    for (int i = 0; i < N; ++i) {
      double acc = 0.0;
      const double* row = &M[static_cast<std::size_t>(i) * N];
      for (int j = 0; j < N; ++j) acc += row[j] * p[j];
      q[i] = acc * sqv[i];  // (C v)_i
    }
    for (int i = 0; i < N; ++i) t[i] = v[i] * sqv[i];
    std::fill(s2.begin(), s2.end(), 0.0);
    for (int i = 0; i < N; ++i) {
      const double* row = &M[static_cast<std::size_t>(i) * N];
      double ti = t[i];
      for (int j = 0; j < N; ++j) s2[j] += row[j] * ti;  // M^T t
    }
    for (int i = 0; i < N; ++i) w[i] = 0.5 * (q[i] + s2[i] / sqv[i]);
    double nw = 0.0;
    for (double z : w) nw += z * z;
    nw = std::sqrt(nw);
    if (nw == 0.0) break;
    for (int i = 0; i < N; ++i) v[i] = w[i] / nw;
    if (iter > 20 && std::abs(nw - lambda) < 1e-12 * std::max(1.0, nw)) {
      lambda = nw;
      break;
    }
    lambda = nw;
  }
  out.spectral_sym = lambda;
  return out;
}

}  // namespace ballgreen::norms
