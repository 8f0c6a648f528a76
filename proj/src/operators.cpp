#include "ballgreen/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ballgreen/errors.hpp"
#include "ballgreen/kernels.hpp"

namespace ballgreen::ops {

double convention_prefactor(NormConvention c, const DimensionContext& ctx) {
  switch (c) {
    case NormConvention::Unit: return 1.0;
    case NormConvention::Sigma: return 1.0 / ctx.omega;
    case NormConvention::Green: return 1.0 / ((ctx.n - 2) * ctx.omega);
  }
  return 1.0;
}

std::string convention_name(NormConvention c) {
  switch (c) {
    case NormConvention::Unit: return "unit";
    case NormConvention::Sigma: return "sigma";
    case NormConvention::Green: return "green";
  }
  return "?";
}

NormConvention convention_from_name(const std::string& name) {
  if (name == "unit") return NormConvention::Unit;
  if (name == "sigma") return NormConvention::Sigma;
  if (name == "green") return NormConvention::Green;
  throw std::invalid_argument("unknown norm convention: " + name);
}

namespace {

// Alignment of a field's symmetry axis with the chart axis x-hat.
// Returns the sign with which the chart parallel coordinate maps onto the
// field's axis coordinate, or nullopt when the field cannot be expressed in
// the chart's axisymmetric coordinates.
std::optional<double> chart_alignment(const ScalarField& f, const Vec& x) {
  if (f.kind() == ScalarField::Kind::Tabulated) return std::nullopt;
  if (f.radial()) return 1.0;
  int axis = *f.symmetry_axis();
  double xr = geom::norm(x);
  if (xr == 0.0) return std::nullopt;  // chart axis is e1 by convention
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (i != axis && x[i] != 0.0) return std::nullopt;
  if (x[axis] == 0.0) return std::nullopt;
  return x[axis] > 0.0 ? 1.0 : -1.0;
}

// Field value at a chart point. `align` is the sign from chart_alignment;
// radial fields ignore it.
double field_at_chart(const ScalarField& f, const quad::ChartPoint& cp, double align) {
  double r = std::hypot(cp.y_par, cp.y_perp);
  if (f.radial()) return f.eval_axisym(r, 0.0);
  double u = r > 0.0 ? align * cp.y_par / r : 0.0;
  return f.eval_axisym(r, u);
}

enum class KernelKind { Green, NAbs, HAbs };

double bare_kernel(KernelKind kind, const Vec& x, const Vec& y,
                   const DimensionContext& ctx) {
  switch (kind) {
    case KernelKind::Green: return kernels::green(x, y, ctx);
    case KernelKind::NAbs: return kernels::n_kernel_mag(x, y, ctx);
    case KernelKind::HAbs: return kernels::h_kernel_mag(x, y, ctx);
  }
  return 0.0;
}

double chart_scalar_kernel(KernelKind kind, double xr, const quad::ChartPoint& cp,
                           const DimensionContext& ctx) {
  switch (kind) {
    case KernelKind::Green: return kernels::green_chart(xr, cp.s, cp.u, ctx);
    case KernelKind::NAbs: {
      kernels::ChartVec k = kernels::n_kernel_chart(xr, cp.s, cp.u, ctx);
      return std::hypot(k.par, k.perp);
    }
    case KernelKind::HAbs: {
      kernels::ChartVec h = kernels::h_kernel_chart(xr, cp.s, cp.u, ctx);
      return std::hypot(h.par, h.perp);
    }
  }
  return 0.0;
}

// Deterministic evaluation of int_B kernel(x,y) f(y) dy for scalar kernels.
// Aligned fields run through the 2-D axisymmetric chart (with an error
// estimate from a coarser rule); non-aligned fields use the full 3-D chart.
ValueWithError integrate_kernel_field(KernelKind kind, const ScalarField& f,
                                      const Vec& x, const QuadratureSpec& spec,
                                      const DimensionContext& ctx) {
  spec.validate();
  double xr = geom::norm(x);
  if (!(xr < 1.0)) throw std::domain_error("operator evaluation requires |x| < 1");
  auto align = chart_alignment(f, x);

  if (spec.scheme == quad::Scheme::MonteCarlo) {
    // split: inner polar panel (deterministic) + Monte Carlo outside
    double cut = std::min(spec.split_radius, 0.5 * (1.0 - xr));
    double inner = 0.0;
    if (align.has_value()) {
      QuadratureSpec inner_spec = spec;
      inner_spec.scheme = quad::Scheme::ReducedPolar;
      inner = quad::polar_chart_integrate(
          xr,
          [&](const quad::ChartPoint& cp) {
            if (cp.s > cut) return 0.0;
            return chart_scalar_kernel(kind, xr, cp, ctx) * field_at_chart(f, cp, *align);
          },
          inner_spec, ctx, /*split_at_radius=*/false);
    } else {
      if (ctx.n != 3)
        throw SchemeMismatchError("non-axisymmetric operator evaluation needs n = 3");
      inner = quad::polar_chart_integrate_full3(
          x,
          [&](const Vec& y) {
            double s = geom::norm(geom::sub(y, x));
            if (s > cut || s == 0.0) return 0.0;
            return bare_kernel(kind, x, y, ctx) * f(y);
          },
          spec, ctx);
    }
    auto pts = quad::ball_sample(spec.mc_samples, spec.seed, ctx);
    std::vector<double> vals;
    vals.reserve(pts.size());
    for (const auto& y : pts) {
      double s = geom::norm(geom::sub(y, x));
      if (s < cut) {
        vals.push_back(0.0);
        continue;
      }
      vals.push_back(bare_kernel(kind, x, y, ctx) * f(y));
    }
    double volume = ctx.omega / ctx.n;
    double mean = quad::pairwise_sum(vals) / static_cast<double>(vals.size());
    double ss = 0.0;
    for (double v : vals) ss += (v - mean) * (v - mean);
    double se = volume * std::sqrt(ss / (static_cast<double>(vals.size()) - 1.0) /
                                   static_cast<double>(vals.size()));
    return {inner + volume * mean, 3.0 * se};
  }

  bool split = spec.scheme == quad::Scheme::SingularitySplit;
  if (align.has_value()) {
    auto run = [&](const QuadratureSpec& s) {
      return quad::polar_chart_integrate(
          xr,
          [&](const quad::ChartPoint& cp) {
            return chart_scalar_kernel(kind, xr, cp, ctx) * field_at_chart(f, cp, *align);
          },
          s, ctx, split);
    };
    double full = run(spec);
    double coarse = run(spec.scaled_nodes(2.0 / 3.0));
    return {full, std::abs(full - coarse)};
  }
  if (ctx.n != 3)
    throw SchemeMismatchError("non-axisymmetric operator evaluation needs n = 3");
  auto run = [&](const QuadratureSpec& s) {
    return quad::polar_chart_integrate_full3(
        x, [&](const Vec& y) { return bare_kernel(kind, x, y, ctx) * f(y); }, s, ctx);
  };
  double full = run(spec);
  double coarse = run(spec.scaled_nodes(2.0 / 3.0));
  return {full, std::abs(full - coarse)};
}

}  // namespace

ValueWithError green_potential(const ScalarField& g, const Vec& x,
                               const QuadratureSpec& spec, const DimensionContext& ctx) {
  QuadratureSpec s = spec;
  if (s.scheme == quad::Scheme::ReducedPolar) s.scheme = quad::Scheme::SingularitySplit;
  return integrate_kernel_field(KernelKind::Green, g, x, s, ctx);
}

VectorResult grad_operator(const ScalarField& g, const Vec& x,
                           const QuadratureSpec& spec, const DimensionContext& ctx) {
  spec.validate();
  double xr = geom::norm(x);
  if (!(xr < 1.0)) throw std::domain_error("grad_operator requires |x| < 1");
  auto align = chart_alignment(g, x);
  double pref = 1.0 / ctx.omega;
  if (align.has_value()) {
    // by symmetry the result points along x-hat; integrate that component
    auto run = [&](const QuadratureSpec& s) {
      return quad::polar_chart_integrate(
          xr,
          [&](const quad::ChartPoint& cp) {
            kernels::ChartVec k = kernels::n_kernel_chart(xr, cp.s, cp.u, ctx);
            return k.par * field_at_chart(g, cp, *align);
          },
          s, ctx, spec.scheme == quad::Scheme::SingularitySplit);
    };
    double comp = run(spec);
    double coarse = run(spec.scaled_nodes(2.0 / 3.0));
    Vec dir = xr > 0.0 ? geom::scale(x, 1.0 / xr) : geom::basis_vec(ctx.n, 0);
    return {geom::scale(dir, pref * comp), pref * std::abs(comp - coarse)};
  }
  if (ctx.n != 3)
    throw SchemeMismatchError("grad_operator on a non-aligned field needs n = 3");
  Vec out(ctx.n, 0.0);
  double err = 0.0;
  for (int comp = 0; comp < ctx.n; ++comp) {
    auto run = [&](const QuadratureSpec& s) {
      return quad::polar_chart_integrate_full3(
          x,
          [&](const Vec& y) {
            Vec grad = kernels::green_gradient(x, y, ctx);
            // bare kernel component = grad / (c_n (2-n))
            double bare = grad[comp] / (ctx.c_n * (2.0 - ctx.n));
            return bare * g(y);
          },
          s, ctx);
    };
    double full = run(spec);
    double coarse = run(spec.scaled_nodes(2.0 / 3.0));
    out[comp] = pref * full;
    err = std::max(err, pref * std::abs(full - coarse));
  }
  return {out, err};
}

ValueWithError abs_operator(const ScalarField& f, const Vec& x,
                            const QuadratureSpec& spec, const DimensionContext& ctx,
                            NormConvention convention) {
  ValueWithError v = integrate_kernel_field(KernelKind::NAbs, f, x, spec, ctx);
  double pref = convention_prefactor(convention, ctx);
  return {pref * v.value, pref * v.estimated_error};
}

ValueWithError h_operator(const ScalarField& f, const Vec& x,
                          const QuadratureSpec& spec, const DimensionContext& ctx) {
  ValueWithError v = integrate_kernel_field(KernelKind::HAbs, f, x, spec, ctx);
  double pref = 1.0 / ((ctx.n - 2) * ctx.omega);
  return {pref * v.value, pref * v.estimated_error};
}

namespace {

// 1-D reduced forms for the Riesz potential of constant and coordinate
// fields: with beta = n(mu-1) and R(u) the chart exit radius,
//   V_mu[1](x)    = omega_{n-2}/(beta+n)   * int u-weighted R^{beta+n}
//   int |x-y|^beta (y-x) dy = x-hat * omega_{n-2}/(beta+n+1) * int u R^{beta+n+1}
double riesz_const_integral(double xr, double beta, const QuadratureSpec& spec,
                            const DimensionContext& ctx) {
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  double p = beta + ctx.n;
  quad::ZonalRule ang = quad::zonal_angular_rule(ctx.n, std::max(64, spec.angular_nodes));
  double s = 0.0;
  for (std::size_t j = 0; j < ang.u.size(); ++j)
    s += ang.w[j] * std::pow(quad::chart_exit_radius(xr, ang.u[j]), p);
  return om2 / p * s;
}

double riesz_moment_integral(double xr, double beta, const QuadratureSpec& spec,
                             const DimensionContext& ctx) {
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  double p = beta + ctx.n + 1.0;
  quad::ZonalRule ang = quad::zonal_angular_rule(ctx.n, std::max(64, spec.angular_nodes));
  double s = 0.0;
  for (std::size_t j = 0; j < ang.u.size(); ++j)
    s += ang.w[j] * ang.u[j] * std::pow(quad::chart_exit_radius(xr, ang.u[j]), p);
  return om2 / p * s;
}

double riesz_eval(const ScalarField& f, double mu, const Vec& x,
                  const QuadratureSpec& spec, const DimensionContext& ctx) {
  double xr = geom::norm(x);
  double beta = ctx.n * (mu - 1.0);
  using Form = ScalarField::Form;
  if (f.kind() == ScalarField::Kind::Named &&
      (f.form() == Form::Constant || f.form() == Form::Coordinate ||
       f.form() == Form::Affine)) {
    double a = 0.0, b = 0.0;
    int axis = 0;
    switch (f.form()) {
      case Form::Constant: a = f.const_value(); break;
      case Form::Coordinate: b = 1.0; axis = *f.symmetry_axis(); break;
      case Form::Affine:
        a = f.const_value();
        axis = *f.symmetry_axis();
        b = f.eval_axisym(1.0, 1.0) - a;  // slope
        break;
      default: break;
    }
    double v1 = riesz_const_integral(xr, beta, spec, ctx);
    if (b == 0.0) return a * v1;
    double w = riesz_moment_integral(xr, beta, spec, ctx);
    double xhat_axis = xr > 0.0 ? x[axis] / xr : 0.0;
    return (a + b * x[axis]) * v1 + b * xhat_axis * w;
  }
  auto align = chart_alignment(f, x);
  if (!align.has_value())
    throw SchemeMismatchError("riesz_potential: field not reducible at this x");
  QuadratureSpec rspec = spec;
  rspec.angular_nodes = std::min(spec.angular_nodes, 128);
  return quad::polar_chart_integrate_adaptive(
      xr,
      [&](const quad::ChartPoint& cp) {
        return std::pow(cp.s, beta + ctx.n - 1) * field_at_chart(f, cp, *align);
      },
      rspec, ctx, spec.target_tol);
}

}  // namespace

ValueWithError riesz_potential(const ScalarField& f, double mu, const Vec& x,
                               const QuadratureSpec& spec, const DimensionContext& ctx) {
  if (!(mu > 0.0 && mu <= 1.0))
    throw std::domain_error("riesz_potential requires mu in (0, 1]");
  spec.validate();
  double v = riesz_eval(f, mu, x, spec, ctx);
  return {v, spec.target_tol};
}

double RieszParams::delta() const {
  double invq = std::isinf(q) ? 0.0 : 1.0 / q;
  return 1.0 / p - invq;
}

void RieszParams::validate() const {
  if (!(mu > 0.0 && mu <= 1.0)) throw std::domain_error("RieszParams: mu in (0, 1]");
  if (!(p >= 1.0)) throw std::domain_error("RieszParams: p >= 1");
  if (!(q >= 1.0)) throw std::domain_error("RieszParams: q >= 1 (or infinity)");
  double d = delta();
  if (!(d >= 0.0 && d < mu))
    throw std::domain_error("RieszParams: need 0 <= 1/p - 1/q < mu");
}

RieszBoundOutcome riesz_bound_check(const ScalarField& f, const RieszParams& params,
                                    const QuadratureSpec& spec,
                                    const DimensionContext& ctx) {
  params.validate();
  spec.validate();
  double volume = ctx.omega / ctx.n;
  double fp = field_lp_norm(f, params.p, spec, ctx);
  double d = params.delta();
  double rhs = std::pow(1.0 / (params.mu - d), 1.0 - d) *
               std::pow(ctx.omega / ctx.n, 1.0 - params.mu) *
               std::pow(volume, params.mu - d) * fp;

  RieszBoundOutcome out;
  out.f_norm_p = fp;
  if (f.radial()) {
    // V_mu f is rotation invariant: evaluate a radial profile once and take
    // the q-norm by 1-D quadrature (deterministic, zero sampling error)
    const int nr = 48;
    const quad::GaussRule& gr = quad::gauss_legendre(nr);
    std::vector<double> rad(nr), val(nr);
    for (int i = 0; i < nr; ++i) {
      rad[i] = 0.5 * (gr.nodes[i] + 1.0);
      Vec x(ctx.n, 0.0);
      x[0] = rad[i];
      val[i] = riesz_eval(f, params.mu, x, spec, ctx);
    }
    if (std::isinf(params.q)) {
      double mx = 0.0;
      for (double v : val) mx = std::max(mx, std::abs(v));
      Vec origin(ctx.n, 0.0);
      mx = std::max(mx, std::abs(riesz_eval(f, params.mu, origin, spec, ctx)));
      out.lhs = mx;
    } else {
      std::vector<double> terms(nr);
      for (int i = 0; i < nr; ++i)
        terms[i] = 0.5 * gr.weights[i] * std::pow(std::abs(val[i]), params.q) *
                   std::pow(rad[i], ctx.n - 1);
      double integral = ctx.omega * quad::pairwise_sum(terms);
      out.lhs = std::pow(integral, 1.0 / params.q);
    }
    out.lhs_std_error = 0.0;
  } else if (std::isinf(params.q)) {
    long m = std::max(256L, spec.mc_samples / 400);
    auto xs = quad::ball_sample(m, spec.seed + 7, ctx);
    double mx = 0.0;
    for (const auto& x : xs)
      mx = std::max(mx, std::abs(riesz_eval(f, params.mu, x, spec, ctx)));
    out.lhs = mx;
    out.lhs_std_error = 0.0;
  } else {
    long m = std::max(256L, spec.mc_samples / 400);
    auto xs = quad::ball_sample(m, spec.seed + 7, ctx);
    std::vector<double> vq(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      vq[i] = std::pow(std::abs(riesz_eval(f, params.mu, xs[i], spec, ctx)), params.q);
    double mean = quad::pairwise_sum(vq) / static_cast<double>(vq.size());
    double ss = 0.0;
    for (double v : vq) ss += (v - mean) * (v - mean);
    double se_mean = std::sqrt(ss / (static_cast<double>(vq.size()) - 1.0) /
                               static_cast<double>(vq.size()));
    double integral = volume * mean;
    double se_integral = volume * se_mean;
    out.lhs = std::pow(integral, 1.0 / params.q);
    out.lhs_std_error = integral > 0.0
                            ? out.lhs / (params.q * integral) * se_integral
                            : 0.0;
  }
  out.rhs = rhs;
  // the bound is attained with equality at mu = 1, p = q; the margin must
  // cover the quadrature tolerance of both sides
  double margin = 100.0 * spec.target_tol;
  out.passed = out.lhs <= rhs * (1.0 + margin) + 3.0 * out.lhs_std_error + 1e-12;
  return out;
}

ValueWithError poisson_extension(const ScalarField& fb, const Vec& x,
                                 const QuadratureSpec& spec, const DimensionContext& ctx) {
  spec.validate();
  double xr = geom::norm(x);
  if (!(xr < 1.0)) throw std::domain_error("poisson_extension requires |x| < 1");

  if (spec.scheme == quad::Scheme::MonteCarlo) {
    auto pts = quad::sphere_sample(spec.mc_samples, spec.seed, ctx);
    std::vector<double> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      vals[i] = kernels::poisson_kernel(x, pts[i], ctx) * fb(pts[i]);
    double mean = quad::pairwise_sum(vals) / static_cast<double>(vals.size());
    double ss = 0.0;
    for (double v : vals) ss += (v - mean) * (v - mean);
    double se = std::sqrt(ss / (static_cast<double>(vals.size()) - 1.0) /
                          static_cast<double>(vals.size()));
    return {mean, 3.0 * se};
  }

  auto align = chart_alignment(fb, x);
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  if (align.has_value()) {
    // 1-D reduction about x-hat: |x - eta|^2 = 1 + |x|^2 - 2 |x| u
    auto run = [&](int nodes) {
      quad::ZonalRule ang = quad::zonal_angular_rule(ctx.n, nodes);
      double s = 0.0;
      for (std::size_t j = 0; j < ang.u.size(); ++j) {
        double u = ang.u[j];
        double d2 = 1.0 + xr * xr - 2.0 * xr * u;
        double pk = (1.0 - xr * xr) / std::pow(d2, 0.5 * ctx.n);
        s += ang.w[j] * pk * fb.eval_axisym(1.0, *align * u);
      }
      return om2 / ctx.omega * s;
    };
    double full = run(std::max(128, spec.angular_nodes));
    double coarse = run(std::max(96, 2 * spec.angular_nodes / 3));
    return {full, std::abs(full - coarse)};
  }
  if (ctx.n != 3)
    throw SchemeMismatchError("poisson_extension on non-aligned data needs n = 3");
  auto run = [&](int nu, int nphi) {
    const quad::GaussRule& ru = quad::gauss_legendre(nu);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(nu) * nphi);
    Vec eta(3);
    for (int j = 0; j < nu; ++j) {
      double u = ru.nodes[j];
      double su = std::sqrt(std::max(0.0, 1.0 - u * u));
      for (int k = 0; k < nphi; ++k) {
        double phi = 2.0 * M_PI * (k + 0.5) / nphi;
        eta[0] = su * std::cos(phi);
        eta[1] = su * std::sin(phi);
        eta[2] = u;
        terms.push_back(ru.weights[j] * (2.0 * M_PI / nphi) *
                        kernels::poisson_kernel(x, eta, ctx) * fb(eta));
      }
    }
    return quad::pairwise_sum(terms) / ctx.omega;
  };
  double full = run(std::max(64, spec.angular_nodes), std::max(64, spec.angular_nodes));
  double coarse = run(std::max(48, 2 * spec.angular_nodes / 3),
                      std::max(48, 2 * spec.angular_nodes / 3));
  return {full, std::abs(full - coarse)};
}

}  // namespace ballgreen::ops
