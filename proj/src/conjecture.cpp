#include "ballgreen/conjecture.hpp"

#include <cmath>
#include <stdexcept>

#include "ballgreen/errors.hpp"
#include "ballgreen/kernels.hpp"
#include "ballgreen/specfun.hpp"

namespace ballgreen::conj {

void ConjectureParams::validate() const {
  if (n < 3) throw std::domain_error("ConjectureParams: n >= 3");
  if (!(p > n)) throw std::domain_error("ConjectureParams: p > n required");
}

double conjecture_Ap_closed(const ConjectureParams& prm, const DimensionContext& ctx) {
  prm.validate();
  double q = prm.q();
  double n = ctx.n;
  double inner = std::exp(specfun::lgamma_fn(1.0 + q) +
                          specfun::lgamma_fn(1.0 + (-1.0 + 1.0 / n) * q) -
                          specfun::lgamma_fn(2.0 + q / n)) /
                 n;
  return std::pow(ctx.omega, -1.0 / prm.p) * std::pow(inner, 1.0 / q);
}

namespace {

// int_0^1 r^{(1-n)q + n - 1} (1-r^n)^q dr with the algebraic singularity at
// r = 0 flattened by the substitution r = u^10
double conjecture_radial_integral(double n, double q, double tol) {
  return quad::integrate_adaptive(
      [&](double u) {
        if (u <= 0.0 || u >= 1.0) return 0.0;
        double r = std::pow(u, 10.0);
        double g = std::pow(r, (1.0 - n) * q + n - 1.0) *
                   std::pow(1.0 - std::pow(r, n), q);
        return 10.0 * std::pow(u, 9.0) * g;
      },
      0.0, 1.0, tol);
}

}  // namespace

double conjecture_Ap_integral(const ConjectureParams& prm, const DimensionContext& ctx,
                              double tol) {
  prm.validate();
  double q = prm.q();
  double radial = conjecture_radial_integral(ctx.n, q, tol);
  return std::pow(ctx.omega * radial, 1.0 / q) / ctx.omega;
}

double conjecture_Bp_closed(const ConjectureParams& prm, const DimensionContext& ctx) {
  prm.validate();
  double q = prm.q();
  double n = ctx.n;
  double log_inner = specfun::lgamma_fn(0.5 * n) + specfun::lgamma_fn(1.0 + q) +
                     specfun::lgamma_fn(0.5 * (-1.0 + n + q)) +
                     specfun::lgamma_fn(1.0 + (-1.0 + 1.0 / n) * q) -
                     specfun::lgamma_fn(0.5 * (-1.0 + n)) -
                     specfun::lgamma_fn(0.5 * (n + q)) -
                     specfun::lgamma_fn(2.0 + q / n) - std::log(n);
  return std::pow(ctx.omega, -1.0 / prm.p) * std::exp(log_inner / q);
}

double conjecture_Bp_closed_corrected(const ConjectureParams& prm,
                                      const DimensionContext& ctx) {
  prm.validate();
  double q = prm.q();
  double n = ctx.n;
  // angular factor Gamma((q+1)/2)/Gamma(1/2) in place of the displayed
  // Gamma((n+q-1)/2)/Gamma((n-1)/2); agrees with the x = 0 integral
  double log_inner = specfun::lgamma_fn(0.5 * n) + specfun::lgamma_fn(1.0 + q) +
                     specfun::lgamma_fn(0.5 * (q + 1.0)) +
                     specfun::lgamma_fn(1.0 + (-1.0 + 1.0 / n) * q) -
                     0.5 * std::log(M_PI) - specfun::lgamma_fn(0.5 * (n + q)) -
                     specfun::lgamma_fn(2.0 + q / n) - std::log(n);
  return std::pow(ctx.omega, -1.0 / prm.p) * std::exp(log_inner / q);
}

double conjecture_Bp_integral(const ConjectureParams& prm, const DimensionContext& ctx,
                              double tol) {
  prm.validate();
  double q = prm.q();
  double n = ctx.n;
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  double ang_exp = 0.5 * (ctx.n - 3);
  // angular: int_{-1}^{1} |u|^q (1-u^2)^{(n-3)/2} du, kinked at 0
  auto ang_f = [&](double u) {
    double w = ang_exp == 0.0 ? 1.0 : std::pow(1.0 - u * u, ang_exp);
    return std::pow(std::abs(u), q) * w;
  };
  double angular = om2 * (quad::integrate_adaptive(ang_f, -1.0, 0.0, 0.5 * tol) +
                          quad::integrate_adaptive(ang_f, 0.0, 1.0, 0.5 * tol));
  // r^q (r^{-n}-1)^q r^{n-1} = r^{(1-n)q + n - 1} (1-r^n)^q
  double radial = conjecture_radial_integral(n, q, tol);
  return std::pow(angular * radial, 1.0 / q) / ctx.omega;
}

double conjecture_Bp_integral_eta(const ConjectureParams& prm, const Vec& eta,
                                  const DimensionContext& ctx, double tol) {
  prm.validate();
  if (ctx.n != 3)
    throw SchemeMismatchError("conjecture_Bp_integral_eta is implemented for n = 3");
  double q = prm.q();
  double n = ctx.n;
  double en = geom::norm(eta);
  if (std::abs(en - 1.0) > 1e-12)
    throw std::domain_error("conjecture_Bp_integral_eta: |eta| = 1 required");

  // the radial profile separates from the direction factor |<sigma, eta>|^q;
  // the sphere quadrature runs in the fixed frame so the eta dependence is a
  // genuine numerical check of rotation invariance. For fixed u the
  // azimuthal integrand is |A cos(phi - phi0) + c|^q, kinked where the
  // argument vanishes; the arc endpoints are computed analytically and each
  // smooth arc gets its own Gauss panel.
  double radial = conjecture_radial_integral(n, q, tol);
  double phi0 = std::atan2(eta[1], eta[0]);
  double eperp = std::hypot(eta[0], eta[1]);
  auto azimuthal = [&](double u) {
    double su = std::sqrt(std::max(0.0, 1.0 - u * u));
    double A = su * eperp;
    double c = u * eta[2];
    auto arc = [&](double p0, double p1) {
      return quad::integrate_gl(
          [&](double psi) { return std::pow(std::abs(A * std::cos(psi) + c), q); },
          p0, p1, 48);
    };
    if (A < 1e-300) return 2.0 * M_PI * std::pow(std::abs(c), q);
    double ratio = -c / A;
    if (ratio <= -1.0 || ratio >= 1.0) return arc(0.0, 2.0 * M_PI);
    double psik = std::acos(ratio);
    return arc(0.0, psik) + arc(psik, 2.0 * M_PI - psik) +
           arc(2.0 * M_PI - psik, 2.0 * M_PI);
  };
  (void)phi0;  // shift-invariant over a full period
  double angular = quad::integrate_adaptive(azimuthal, -1.0, 1.0, tol);
  return std::pow(angular * radial, 1.0 / q) / ctx.omega;
}

ConjectureScan conjecture_scan(const ConjectureParams& prm,
                               const std::vector<double>& radii,
                               const QuadratureSpec& spec, const DimensionContext& ctx,
                               int eta_samples) {
  prm.validate();
  spec.validate();
  if (radii.empty()) throw std::invalid_argument("conjecture_scan: empty radii grid");
  double q = prm.q();
  ConjectureScan scan;
  scan.params = prm;
  scan.radii = radii;
  scan.phi_a.reserve(radii.size());
  quad::ZonalRule ang = quad::zonal_angular_rule(ctx.n, spec.angular_nodes);
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  for (double xr : radii) {
    if (!(xr >= 0.0 && xr < 1.0))
      throw std::domain_error("conjecture_scan: radii in [0, 1)");
    std::vector<double> terms(ang.u.size());
    for (std::size_t j = 0; j < ang.u.size(); ++j) {
      double u = ang.u[j];
      double R = quad::chart_exit_radius(xr, u);
      // |kernel|^q s^{n-1} = mag^q s^{(n-1)(1-q)} with mag smooth; the
      // endpoint power is flattened by s = R v^10
      auto radial = [&](double v) {
        if (v <= 0.0) return 0.0;
        double s = R * std::pow(v, 10.0);
        kernels::ChartVec k = kernels::n_kernel_chart(xr, s, u, ctx);
        double mag = std::hypot(k.par, k.perp);
        double g = std::pow(mag, q) * std::pow(s, (ctx.n - 1.0) * (1.0 - q));
        return g * 10.0 * R * std::pow(v, 9.0);
      };
      terms[j] = ang.w[j] * quad::integrate_adaptive(radial, 0.0, 1.0,
                                                     0.1 * spec.target_tol);
    }
    double integral = om2 * quad::pairwise_sum(terms);
    scan.phi_a.push_back(std::pow(integral, 1.0 / q));
  }
  std::size_t arg = 0;
  bool noninc = true;
  for (std::size_t i = 1; i < scan.phi_a.size(); ++i) {
    if (scan.phi_a[i] > scan.phi_a[arg]) arg = i;
    if (scan.phi_a[i] > scan.phi_a[i - 1] + 1e-7 * std::abs(scan.phi_a[i - 1]))
      noninc = false;
  }
  scan.grid_argmax_at_zero = radii[arg] == 0.0;
  scan.nonincreasing_on_grid = noninc;
  scan.ap_closed = conjecture_Ap_closed(prm, ctx);
  scan.ap_integral = conjecture_Ap_integral(prm, ctx);
  scan.bp_closed = conjecture_Bp_closed(prm, ctx);
  scan.bp_closed_corrected = conjecture_Bp_closed_corrected(prm, ctx);
  scan.bp_integral = conjecture_Bp_integral(prm, ctx);
  if (eta_samples > 0 && ctx.n == 3) {
    auto etas = quad::sphere_sample(eta_samples, spec.seed + 11, ctx);
    for (const auto& e : etas)
      scan.eta_values.push_back(conjecture_Bp_integral_eta(prm, e, ctx));
  }
  return scan;
}

}  // namespace ballgreen::conj
