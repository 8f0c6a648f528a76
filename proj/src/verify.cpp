#include "ballgreen/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "ballgreen/conjecture.hpp"
#include "ballgreen/errors.hpp"
#include "ballgreen/fields.hpp"
#include "ballgreen/geometry.hpp"
#include "ballgreen/kernels.hpp"
#include "ballgreen/normcalc.hpp"
#include "ballgreen/operators.hpp"
#include "ballgreen/specfun.hpp"

namespace ballgreen::checks {

using geom::DimensionContext;
using geom::Vec;
using quad::QuadratureSpec;

Profile profile_from_name(const std::string& name) {
  if (name == "fast") return Profile::Fast;
  if (name == "thorough") return Profile::Thorough;
  throw std::invalid_argument("unknown profile: " + name);
}

std::string profile_name(Profile p) { return p == Profile::Fast ? "fast" : "thorough"; }

namespace {

std::uint64_t check_seed(const QuadratureSpec& spec, const std::string& name, int dim) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return spec.seed ^ h ^ (static_cast<std::uint64_t>(dim) << 32);
}

QuadratureSpec profile_spec(const QuadratureSpec& spec, Profile p) {
  return p == Profile::Thorough ? spec.scaled_nodes(4.0) : spec;
}

struct ResultBuilder {
  std::string name;
  int dim;
  QuadratureSpec spec;
  std::vector<CheckResult> out;

  void value_check(const std::string& sub, double computed, double expected, double tol,
                   const std::string& metric, const std::string& provenance,
                   const std::string& detail = "") {
    CheckResult r;
    r.name = sub.empty() ? name : name + "/" + sub;
    r.dimension = dim;
    r.computed = computed;
    r.expected = expected;
    r.provenance = provenance;
    r.abs_error = std::abs(computed - expected);
    r.rel_error = expected != 0.0 ? r.abs_error / std::abs(expected) : r.abs_error;
    r.tolerance = tol;
    r.metric = metric;
    r.spec_echo = spec;
    r.detail = detail;
    if (metric == "rel")
      r.passed = r.rel_error <= tol;
    else if (metric == "abs")
      r.passed = r.abs_error <= tol;
    else  // count: computed violations vs expected 0
      r.passed = computed <= expected + tol;
    out.push_back(std::move(r));
  }

  void bound_check(const std::string& sub, double computed, double bound,
                   const std::string& provenance, const std::string& detail = "") {
    CheckResult r;
    r.name = sub.empty() ? name : name + "/" + sub;
    r.dimension = dim;
    r.computed = computed;
    r.expected = bound;
    r.provenance = provenance;
    r.abs_error = std::max(0.0, computed - bound);
    r.rel_error = bound != 0.0 ? r.abs_error / std::abs(bound) : r.abs_error;
    r.tolerance = 0.0;
    r.metric = "bound";
    r.spec_echo = spec;
    r.detail = detail;
    r.passed = computed <= bound;
    out.push_back(std::move(r));
  }
};

Vec random_ball_point(quad::CounterRng& rng, int n, double rmax) {
  Vec v(n);
  double nv = 0.0;
  do {
    for (int i = 0; i < n; ++i) v[i] = rng.next_normal();
    nv = geom::norm(v);
  } while (nv < 1e-12);
  double r = rmax * std::pow(rng.next_u01(), 1.0 / n);
  return geom::scale(v, r / nv);
}

Vec random_direction(quad::CounterRng& rng, int n) {
  Vec v(n);
  double nv = 0.0;
  do {
    for (int i = 0; i < n; ++i) v[i] = rng.next_normal();
    nv = geom::norm(v);
  } while (nv < 1e-12);
  return geom::scale(v, 1.0 / nv);
}

double det_small(std::vector<std::vector<double>> a) {
  int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// ---------------------------------------------------------------- checks ---

std::vector<CheckResult> check_gamma_inequality(int, const QuadratureSpec& spec0,
                                                Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  ResultBuilder rb{"gamma-inequality", 0, spec, {}};
  long violations = 0;
  long cases = 0;
  const int g = 20;
  for (int im = 0; im < g; ++im) {
    double m = 0.15 + (5.85 - 0.15) * im / (g - 1);
    for (int ip = 0; ip < g; ++ip) {
      double p = 0.2 + (7.8 - 0.2) * ip / (g - 1);
      for (int ik = 0; ik < g; ++ik) {
        double k = -m + (ik + 0.5) / g * (p + m);
        specfun::GammaInequalityCase c{m, p, k};
        auto res = specfun::gamma_inequality_holds(c);
        ++cases;
        double slack = 1e-12 * (std::abs(res.log_lhs) + std::abs(res.log_rhs) + 1.0);
        if (res.sign_nonneg && res.log_lhs < res.log_rhs - slack) ++violations;
        if (!res.sign_nonneg && res.log_lhs > res.log_rhs + slack) ++violations;
      }
    }
  }
  rb.value_check("implication-grid", static_cast<double>(violations), 0.0, 0.0, "count",
                 "sign of k(p-m-k) determines the Gamma product ordering",
                 std::to_string(cases) + " admissible cases");
  // pinned examples
  auto r1 = specfun::gamma_inequality_holds({1.5, 4.5, 0.5});
  rb.value_check("positive-sign-case", r1.product_ge ? 1.0 : 0.0, 1.0, 0.0, "count",
                 "derived oracle: Gamma(4.5)Gamma(1.5) >= Gamma(4)Gamma(2)");
  auto r2 = specfun::gamma_inequality_holds({2.0, 3.0, 2.0});
  rb.value_check("negative-sign-case", (!r2.sign_nonneg && !r2.product_ge) ? 1.0 : 0.0,
                 1.0, 0.0, "count", "derived oracle: 2 <= 6");
  return rb.out;
}

std::vector<CheckResult> check_hyp_identity(int dim, const QuadratureSpec& spec0,
                                            Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"hyp-identity", dim, spec, {}};
  double worst = 0.0;
  int cases = 0;
  for (double mu : {2.0, 3.0, 4.0, 5.0}) {
    for (double nu : {1.0, 1.5, 2.0, 0.5 * (dim + 1)}) {
      for (int ir = 0; ir <= 9; ++ir) {
        double r = 0.1 * ir;
        double rhs = specfun::angular_integral({mu, nu, r});
        double lhs = quad::integrate_adaptive(
            [&](double t) {
              return std::pow(std::sin(t), mu - 1.0) *
                     std::pow(1.0 + r * r - 2.0 * r * std::cos(t), -nu);
            },
            0.0, M_PI, 1e-12);
        worst = std::max(worst, std::abs(lhs - rhs));
        ++cases;
      }
    }
  }
  rb.value_check("grid-residual", worst, 0.0, 1e-8, "abs",
                 "independent adaptive quadrature of the angular integral",
                 std::to_string(cases) + " parameter combinations");
  // pinned closed forms
  rb.value_check("elementary-log-case", specfun::angular_integral({2.0, 1.0, 0.5}),
                 std::log(9.0), 1e-12, "rel", "antiderivative log(1.25 - cos t)");
  rb.value_check("r-zero-case", specfun::angular_integral({2.0, 1.0, 0.0}), 2.0, 1e-13,
                 "rel", "trivial: integral of sin on (0, pi)");
  return rb.out;
}

std::vector<CheckResult> check_sphere_reduction(int dim, const QuadratureSpec& spec0,
                                                Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"sphere-reduction", dim, spec, {}};
  double worst = 0.0;
  for (double a : {dim + 1.0, dim + 2.0}) {
    for (double rho : {0.0, 0.2, 0.4, 0.6, 0.8, 0.9}) {
      double red = norms::sphere_integral_reduced(a, rho, 1.0, ctx);
      double dir = norms::sphere_integral_direct(a, rho, ctx, 1e-12);
      worst = std::max(worst, std::abs(red - dir));
    }
  }
  rb.value_check("hypergeometric-route", worst, 0.0, 1e-7, "abs",
                 "independent 1-D angular quadrature, incl. rho = 0.9 stress");
  rb.value_check("rho-zero", norms::sphere_integral_reduced(dim + 1.0, 0.0, 0.5, ctx),
                 ctx.omega, 1e-13, "rel", "trivial: F(...;0) = 1");
  return rb.out;
}

std::vector<CheckResult> check_moebius_identities(int dim, const QuadratureSpec& spec0,
                                                  Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"moebius-identities", dim, spec, {}};
  quad::CounterRng rng(check_seed(spec, "moebius-identities", dim));

  double worst_norm = 0.0, worst_inv = 0.0, worst_sym = 0.0, worst_bdry = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Vec x = random_ball_point(rng, dim, 0.95);
    Vec y = random_ball_point(rng, dim, 0.95);
    worst_norm = std::max(worst_norm, geom::moebius_norm_residual(x, y));
  }
  for (int i = 0; i < 1000; ++i) {
    Vec x = random_ball_point(rng, dim, 0.9);
    Vec y = random_ball_point(rng, dim, 0.9);
    Vec z = geom::moebius(x, y);
    Vec back = geom::moebius(geom::scale(x, -1.0), z);
    worst_inv = std::max(worst_inv, geom::norm(geom::sub(back, y)));
  }
  for (int i = 0; i < 10000; ++i) {
    Vec x = random_ball_point(rng, dim, 0.999);
    Vec y = random_ball_point(rng, dim, 0.999);
    worst_sym = std::max(worst_sym, std::abs(geom::bracket(x, y) - geom::bracket(y, x)));
  }
  for (int i = 0; i < 1000; ++i) {
    Vec x = random_ball_point(rng, dim, 0.999);
    Vec y = random_direction(rng, dim);
    worst_bdry =
        std::max(worst_bdry, std::abs(geom::bracket(x, y) - geom::norm(geom::sub(x, y))));
  }
  rb.value_check("norm-identity", worst_norm, 0.0, 1e-12, "abs",
                 "|T_x y| vs |x-y|/[x,y], both sides direct");
  rb.value_check("involution", worst_inv, 0.0, 1e-10, "abs",
                 "T_{-x}(T_x y) returns y");
  rb.value_check("bracket-symmetry", worst_sym, 0.0, 1e-14, "abs",
                 "trivial identity: both argument orders");
  rb.value_check("bracket-boundary-collapse", worst_bdry, 0.0, 1e-13, "abs",
                 "trivial identity: [x,y] = |x-y| for |y| = 1");

  // Jacobian factor vs finite-difference determinant of z -> T_{-x} z
  double worst_jac = 0.0;
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    Vec x = random_ball_point(rng, dim, 0.7);
    Vec z = random_ball_point(rng, dim, 0.7);
    Vec mx = geom::scale(x, -1.0);
    std::vector<std::vector<double>> jac(dim, std::vector<double>(dim));
    for (int c = 0; c < dim; ++c) {
      Vec zp = z, zm = z;
      zp[c] += h;
      zm[c] -= h;
      Vec fp = geom::moebius(mx, zp);
      Vec fm = geom::moebius(mx, zm);
      for (int r = 0; r < dim; ++r) jac[r][c] = (fp[r] - fm[r]) / (2.0 * h);
    }
    double fd = std::abs(det_small(jac));
    double an = geom::moebius_jacobian(x, z);
    worst_jac = std::max(worst_jac, std::abs(fd - an) / an);
  }
  rb.value_check("jacobian-fd", worst_jac, 0.0, 1e-6, "abs",
                 "central-difference Jacobian determinant, step 1e-5");

  // change of variables in integral form, x along e1, smooth test field
  {
    fields::ScalarField probe = fields::ScalarField::affine(1.0, 0.5, 1);
    auto smooth = [&](const Vec& y) { return std::exp(-geom::norm_sq(y)) * probe(y); };
    for (double xr : {0.45, 0.6}) {
      Vec x(dim, 0.0);
      x[0] = xr;
      Vec mx = geom::scale(x, -1.0);
      double direct = quad::reduced_polar_integrate(
          [&](double r, double u) {
            Vec y(dim, 0.0);
            y[0] = r * u;
            y[1] = r * std::sqrt(std::max(0.0, 1.0 - u * u));
            return smooth(y);
          },
          spec, ctx);
      double transformed = quad::reduced_polar_integrate(
          [&](double r, double u) {
            Vec z(dim, 0.0);
            z[0] = r * u;
            z[1] = r * std::sqrt(std::max(0.0, 1.0 - u * u));
            return smooth(geom::moebius(mx, z)) * geom::moebius_jacobian(x, z);
          },
          spec, ctx);
      rb.value_check("change-of-variables-x" + std::to_string(xr), transformed, direct,
                     1e-6, "rel", "substitution y = T_{-x} z against the direct integral");
    }
  }
  return rb.out;
}

std::vector<CheckResult> check_kernel_gradient(int dim, const QuadratureSpec& spec0,
                                               Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"kernel-gradient", dim, spec, {}};
  quad::CounterRng rng(check_seed(spec, "kernel-gradient", dim));

  double worst_fd = 0.0;
  const double h = 1e-5;
  int accepted = 0;
  while (accepted < 100) {
    Vec x = random_ball_point(rng, dim, 0.9);
    Vec y = random_ball_point(rng, dim, 0.9);
    if (geom::norm(geom::sub(x, y)) < 0.1) continue;
    ++accepted;
    Vec grad = kernels::green_gradient(x, y, ctx);
    double gnorm = geom::norm(grad);
    for (int c = 0; c < dim; ++c) {
      Vec xp = x, xm = x;
      xp[c] += h;
      xm[c] -= h;
      double fd = (kernels::green(xp, y, ctx) - kernels::green(xm, y, ctx)) / (2.0 * h);
      worst_fd = std::max(worst_fd, std::abs(fd - grad[c]) / gnorm);
    }
  }
  rb.value_check("gradient-fd", worst_fd, 0.0, 1e-6, "abs",
                 "central differences of the Green function, step 1e-5, "
                 "well-separated pairs");

  double worst_scale = 0.0, worst_gsym = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Vec x = random_ball_point(rng, dim, 0.95);
    Vec y = random_ball_point(rng, dim, 0.95);
    if (geom::norm(geom::sub(x, y)) < 1e-3) continue;
    double gmag = geom::norm(kernels::green_gradient(x, y, ctx));
    double kmag = kernels::n_kernel_mag(x, y, ctx);
    worst_scale = std::max(worst_scale, std::abs(gmag - kmag / ctx.omega) /
                                            std::max(1e-300, kmag / ctx.omega));
    double g1 = kernels::green(x, y, ctx);
    double g2 = kernels::green(y, x, ctx);
    worst_gsym = std::max(worst_gsym, std::abs(g1 - g2) / std::abs(g1));
  }
  rb.value_check("scaling-consistency", worst_scale, 0.0, 1e-13, "abs",
                 "(n-2) c_n omega = 1 links |grad G| and the kernel magnitude");
  rb.value_check("green-symmetry", worst_gsym, 0.0, 1e-13, "abs",
                 "derived: both argument orders evaluated");

  if (dim == 3) {
    Vec y(3, 0.0);
    y[1] = 0.5;
    rb.value_check("green-origin-value", kernels::green(Vec(3, 0.0), y, ctx),
                   1.0 / (4.0 * M_PI), 1e-13, "rel",
                   "derived: c_3 (1/|y| - 1) at |y| = 1/2");
    Vec y2 = {0.5, 0.0, 0.0};
    Vec g = kernels::green_gradient(Vec(3, 0.0), y2, ctx);
    rb.value_check("gradient-origin-value", g[0], 3.5 / (4.0 * M_PI), 1e-13, "rel",
                   "derived: hand evaluation at x = 0, y = e1/2");
    rb.value_check("n-kernel-origin", kernels::n_kernel_mag(Vec(3, 0.0), y2, ctx), 3.5,
                   1e-13, "rel", "derived: |y|^{1-n} - |y| at |y| = 1/2");
  }

  // boundary vanishing along random rays: kernel magnitude ~ C (1 - |y|)
  double worst_ray = 0.0;
  for (int i = 0; i < 20; ++i) {
    Vec x = random_ball_point(rng, dim, 0.6);
    Vec d = random_direction(rng, dim);
    double ratio6 = 0.0;
    std::vector<double> ratios;
    for (int k = 3; k <= 6; ++k) {
      double eps = std::pow(10.0, -k);
      Vec y = geom::scale(d, 1.0 - eps);
      double mag = kernels::n_kernel_mag(x, y, ctx);
      ratios.push_back(mag / eps);
      if (k == 6) ratio6 = mag / eps;
    }
    for (double r : ratios)
      worst_ray = std::max(worst_ray, std::abs(r / ratio6 - 1.0));
  }
  rb.value_check("boundary-vanishing-linear", worst_ray, 0.0, 5e-2, "abs",
                 "kernel magnitude / (1-|y|) stabilizes along rays, k = 3..6");
  return rb.out;
}

std::vector<CheckResult> check_identity_chain(int dim, const QuadratureSpec& spec0,
                                              Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"identity-chain", dim, spec, {}};
  quad::CounterRng rng(check_seed(spec, "identity-chain", dim));
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Vec x = random_ball_point(rng, dim, 0.8);
    Vec z = random_ball_point(rng, dim, 1.0);
    double zn = geom::norm(z);
    if (zn < 0.05 || zn > 0.95) continue;
    Vec y = geom::moebius(geom::scale(x, -1.0), z);
    double lhs = kernels::n_kernel_mag(x, y, ctx);
    double rhs = kernels::identity_chain_rhs(x, z, ctx);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  rb.value_check("substituted-kernel", worst, 0.0, 1e-10, "abs",
                 "final line of the Moebius substitution chain, both sides direct");
  return rb.out;
}

std::vector<CheckResult> check_green_solution(int dim, const QuadratureSpec& spec0,
                                              Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"green-solution", dim, spec, {}};
  quad::CounterRng rng(check_seed(spec, "green-solution", dim));
  auto one = fields::ScalarField::constant(1.0);

  // G[1](x) = (1-|x|^2)/(2n): manufactured solution of the Dirichlet problem
  double worst_pot = 0.0, worst_grad = 0.0;
  for (int i = 0; i < 20; ++i) {
    double r = 0.95 * i / 19.0;
    Vec x(dim, 0.0);
    x[0] = r;
    double got = ops::green_potential(one, x, spec, ctx).value;
    worst_pot = std::max(worst_pot, std::abs(got - (1.0 - r * r) / (2.0 * dim)));
    auto g = ops::grad_operator(one, x, spec, ctx);
    Vec expect = geom::scale(x, 1.0 / dim);
    worst_grad = std::max(worst_grad, geom::norm(geom::sub(g.value, expect)));
  }
  rb.value_check("potential-manufactured", worst_pot, 0.0, 1e-6, "abs",
                 "derived: explicit solution with zero boundary data, 20 radii");
  rb.value_check("gradient-manufactured", worst_grad, 0.0, 5e-4, "abs",
                 "derived: gradient x/n of the manufactured solution");

  // D[g] matches central differences of -G[g]
  std::vector<fields::ScalarField> gs = {fields::ScalarField::constant(1.0),
                                         fields::ScalarField::radial_power(2.0)};
  if (dim == 3) gs.push_back(fields::ScalarField::coordinate(1));
  double worst_fd = 0.0;
  const double h = 1e-4;
  int pts = profile == Profile::Thorough ? 10 : (dim == 3 ? 10 : 4);
  for (const auto& g : gs) {
    for (int i = 0; i < pts; ++i) {
      Vec x = random_ball_point(rng, dim, 0.7);
      if (g.form() == fields::ScalarField::Form::Coordinate && dim != 3) continue;
      auto dv = ops::grad_operator(g, x, spec, ctx);
      for (int c = 0; c < dim; ++c) {
        Vec xp = x, xm = x;
        xp[c] += h;
        xm[c] -= h;
        double fp = -ops::green_potential(g, xp, spec, ctx).value;
        double fm = -ops::green_potential(g, xm, spec, ctx).value;
        double fd = (fp - fm) / (2.0 * h);
        worst_fd = std::max(worst_fd, std::abs(fd - dv.value[c]));
      }
    }
  }
  rb.value_check("gradient-vs-potential-fd", worst_fd, 0.0, 5e-4, "abs",
                 "derived: central differences of the potential, step 1e-4");

  // zero operand
  Vec x0(dim, 0.0);
  rb.value_check("zero-field",
                 ops::green_potential(fields::ScalarField::constant(0.0), x0, spec, ctx).value,
                 0.0, 1e-15, "abs", "trivial");
  // scaled manufactured solution at x = e1/2
  if (dim == 3) {
    Vec xh = {0.5, 0.0, 0.0};
    auto g2n = fields::ScalarField::constant(2.0 * dim);
    rb.value_check("scaled-potential",
                   ops::green_potential(g2n, xh, spec, ctx).value, 0.75, 1e-6, "rel",
                   "derived: 2n times the manufactured solution");
  }
  return rb.out;
}

std::vector<CheckResult> check_poisson_kernel(int dim, const QuadratureSpec& spec0,
                                              Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"poisson-kernel", dim, spec, {}};
  auto one = fields::ScalarField::constant(1.0);

  Vec eta = geom::basis_vec(dim, 0);
  rb.value_check("center-normalization", kernels::poisson_kernel(Vec(dim, 0.0), eta, ctx),
                 1.0, 1e-15, "rel", "trivial: P(0, .) = 1");
  if (dim == 3) {
    Vec xh = {0.5, 0.0, 0.0};
    rb.value_check("axis-value", kernels::poisson_kernel(xh, eta, ctx), 6.0, 1e-13, "rel",
                   "derived: 0.75/0.125");
  }
  double worst_mv = 0.0;
  for (double r : {0.3, 0.6, 0.9}) {
    Vec x(dim, 0.0);
    x[0] = r;
    worst_mv = std::max(worst_mv,
                        std::abs(ops::poisson_extension(one, x, spec, ctx).value - 1.0));
  }
  rb.value_check("mean-value-property", worst_mv, 0.0, 1e-6, "abs",
                 "derived: reduced quadrature of the kernel over the sphere");

  // harmonic extension of a degree-1 boundary function
  Vec x4(dim, 0.0);
  x4[0] = 0.4;
  auto lin = fields::ScalarField::coordinate(1);
  rb.value_check("linear-extension",
                 ops::poisson_extension(lin, x4, spec, ctx).value, 0.4, 1e-4, "abs",
                 "derived: harmonic extension of a coordinate function");
  if (dim == 3) {
    QuadratureSpec mc = spec;
    mc.scheme = quad::Scheme::MonteCarlo;
    mc.seed = check_seed(spec, "poisson-kernel-mc", dim);
    auto est = ops::poisson_extension(lin, x4, mc, ctx);
    rb.value_check("linear-extension-mc", est.value, 0.4,
                   std::max(1e-3, est.estimated_error), "abs",
                   "derived: Monte Carlo cross-check, 3 standard errors");
  }
  return rb.out;
}

std::vector<CheckResult> check_theorem_inf_norm(int dim, const QuadratureSpec& spec0,
                                                Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"theorem-inf-norm", dim, spec, {}};
  double k0 = norms::kernel_integral_K(0.0, norms::KMethod::Direct, spec, ctx);
  double target = norms::series_a0(dim);
  rb.value_check("constant", k0, target, 1e-6, "rel",
                 "closed-form constant 2 n pi^{n/2}/((n+1) Gamma(n/2))");
  double k0r = norms::kernel_integral_K(0.0, norms::KMethod::MoebiusReduced, spec, ctx);
  rb.value_check("method-agreement", k0r, k0, 1e-7, "rel",
                 "derived: substituted form against the direct chart");
  return rb.out;
}

std::vector<CheckResult> check_sup_location(int dim, const QuadratureSpec& spec0,
                                            Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"sup-location", dim, spec, {}};
  auto radii = norms::default_radii_grid();
  double k0 = norms::kernel_integral_K(0.0, norms::KMethod::Direct, spec, ctx);
  double worst_ratio = 0.0;
  double max_val = k0;
  double argmax = 0.0;
  for (double r : radii) {
    if (r == 0.0) continue;
    double k = norms::kernel_integral_K(r, norms::KMethod::Direct, spec, ctx);
    worst_ratio = std::max(worst_ratio, k / k0);
    if (k > max_val) {
      max_val = k;
      argmax = r;
    }
  }
  rb.value_check("grid-bound", worst_ratio, 1.0, 1e-5, "bound-ratio",
                 "K(r)/K(0) over the radius grid incl. 0.99");
  rb.out.back().passed = worst_ratio <= 1.0 + 1e-5;
  rb.value_check("argmax-at-zero", argmax, 0.0, 0.0, "abs",
                 "grid argmax of the kernel integral");
  if (dim == 3) {
    quad::CounterRng rng(check_seed(spec, "sup-location", dim));
    double ref = norms::kernel_integral_K(0.5, norms::KMethod::Direct, spec, ctx);
    double worst_dir = 0.0;
    for (int i = 0; i < 5; ++i) {
      Vec d = random_direction(rng, 3);
      double v = norms::kernel_integral_K_at(geom::scale(d, 0.5), spec, ctx);
      worst_dir = std::max(worst_dir, std::abs(v - ref) / ref);
    }
    rb.value_check("direction-independence", worst_dir, 0.0, 1e-6, "abs",
                   "full-chart evaluation along 5 random directions at radius 0.5");
  }
  return rb.out;
}

std::vector<CheckResult> check_corollary_grad_bound(int dim, const QuadratureSpec& spec0,
                                                    Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"corollary-grad-bound", dim, spec, {}};
  quad::CounterRng rng(check_seed(spec, "corollary-grad-bound", dim));

  // pointwise domination |D[g](x)| <= N[|g|](x) under the sigma convention
  std::vector<fields::ScalarField> gs = {fields::ScalarField::constant(1.0),
                                         fields::ScalarField::radial_power(2.0)};
  if (dim == 3) gs.push_back(fields::ScalarField::coordinate(1));
  double worst_gap = -1e300;
  for (const auto& g : gs) {
    fields::ScalarField absg = g;  // |g| for these fields: constant/radial are
    // nonnegative; the coordinate field needs |y_1| <= |y| <= 1 majorant
    bool coord = g.form() == fields::ScalarField::Form::Coordinate;
    for (int i = 0; i < 3; ++i) {
      Vec x = random_ball_point(rng, dim, 0.7);
      auto dv = ops::grad_operator(g, x, spec, ctx);
      double lhs = geom::norm(dv.value);
      double rhs;
      if (coord) {
        // |y_1| <= |y|: compare against N[|y|]
        rhs = ops::abs_operator(fields::ScalarField::radial_power(1.0), x, spec, ctx,
                                ops::NormConvention::Sigma)
                  .value;
      } else {
        rhs = ops::abs_operator(absg, x, spec, ctx, ops::NormConvention::Sigma).value;
      }
      worst_gap = std::max(worst_gap, lhs - rhs * (1.0 + 1e-9));
    }
  }
  rb.bound_check("pointwise-domination", worst_gap, 1e-8,
                 "triangle inequality inside the kernel integral");

  // sup-norm bound: |D[1](x)| = |x|/n <= sup-norm constant (sigma convention)
  double sup_const = norms::series_a0(dim) / ctx.omega;
  Vec xb(dim, 0.0);
  xb[0] = 0.9;
  double dnorm = geom::norm(ops::grad_operator(fields::ScalarField::constant(1.0), xb,
                                               spec, ctx)
                                .value);
  rb.bound_check("gradient-sup-bound", dnorm, sup_const,
                 "operator-norm constant bounds the gradient of the solution");
  return rb.out;
}

std::vector<CheckResult> check_series_theorem(int dim, const QuadratureSpec& spec0,
                                              Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"series-theorem", dim, spec, {}};

  std::vector<int> ns = {dim};
  if (profile == Profile::Thorough) {
    ns.clear();
    for (int n = 3; n <= 10; ++n) ns.push_back(n);
  }
  long violations = 0;
  for (int n : ns) {
    auto sc = norms::SeriesCoefficients::compute(n, 200);
    double prev_c = 0.0;
    for (int m = 1; m <= 200; ++m) {
      double a = sc.a[m - 1], b = sc.b[m - 1], c = sc.c[m - 1];
      if (!(a < 0.0)) ++violations;
      if ((a < 0.0) != (b < 1.0)) ++violations;
      if (b > c * (1.0 + 1e-12)) ++violations;
      if (c < prev_c * (1.0 - 1e-12)) ++violations;
      if (c > sc.c_limit * (1.0 + 1e-12)) ++violations;
      prev_c = c;
    }
    if (!(sc.c_limit < 1.0)) ++violations;
  }
  rb.value_check("coefficient-sweep", static_cast<double>(violations), 0.0, 0.0, "count",
                 "signs and majorant chain a_m < 0, b_m <= c(m) <= c_lim < 1, m in [1,200]",
                 "dimensions " + std::to_string(ns.front()) + ".." +
                     std::to_string(ns.back()));
  if (dim == 3)
    rb.value_check("c-limit-n3", norms::majorant_c_limit(3), 2.0 / 3.0, 1e-12, "rel",
                   "derived: sqrt(pi) Gamma(2) / (2 Gamma(5/2))");
  if (dim == 4)
    rb.value_check("c-limit-n4", norms::majorant_c_limit(4), 3.0 * M_PI / 16.0, 1e-12,
                   "rel", "derived: sqrt(pi) Gamma(5/2) / (2 Gamma(3))");

  double worst_si = 0.0;
  for (double r : {0.0, 0.25, 0.5, 0.75, 0.9}) {
    double s = norms::series_J_theorem(r, 200, ctx);
    double integral = norms::series_J_theorem_integral(r, ctx, 1e-10);
    worst_si = std::max(worst_si, std::abs(s - integral) / std::abs(integral));
  }
  rb.value_check("series-vs-integral", worst_si, 0.0, 1e-6, "abs",
                 "independent adaptive quadrature of the defining integral");

  // majorant ordering: K(r) <= series(r) within tolerance
  double worst_gap = -1e300;
  for (double r : {0.0, 0.2, 0.4, 0.6, 0.8, 0.9}) {
    double k = norms::kernel_integral_K(r, norms::KMethod::Direct, spec, ctx);
    double maj = norms::series_J_theorem(r, 200, ctx);
    worst_gap = std::max(worst_gap, k - maj * (1.0 + 1e-6));
  }
  rb.bound_check("majorant-ordering", worst_gap, 1e-9,
                 "kernel integral stays below its hypergeometric majorant");
  rb.value_check("a0-value", norms::series_a0(dim),
                 2.0 * dim * std::pow(M_PI, 0.5 * dim) /
                     ((dim + 1.0) * specfun::gamma_fn(0.5 * dim)),
                 1e-12, "rel", "closed-form leading coefficient");
  return rb.out;
}

std::vector<CheckResult> check_lemma_h_norm(int dim, const QuadratureSpec& spec0,
                                            Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"lemma-h-norm", dim, spec, {}};
  double ks0 = norms::kernel_integral_Kswap(0.0, norms::KMethod::Direct, spec, ctx);
  rb.value_check("kswap-at-zero", ks0, ctx.omega, 1e-6, "rel",
                 "closed form: the swapped kernel integrates to omega at 0");
  auto one = fields::ScalarField::constant(1.0);
  Vec x0(dim, 0.0);
  rb.value_check("h-operator-at-zero", ops::h_operator(one, x0, spec, ctx).value,
                 1.0 / (dim - 2.0), 1e-6, "rel",
                 "closed form 1/(n-2) for the swapped operator at the origin");
  double worst = 0.0;
  for (double r : norms::default_radii_grid()) {
    if (r == 0.0) continue;
    double ks = norms::kernel_integral_Kswap(r, norms::KMethod::Direct, spec, ctx);
    worst = std::max(worst, ks / ctx.omega);
  }
  rb.value_check("grid-bound", worst, 1.0, 1e-5, "bound-ratio",
                 "Kswap(r)/omega over the radius grid");
  rb.out.back().passed = worst <= 1.0 + 1e-5;
  double ks0r = norms::kernel_integral_Kswap(0.0, norms::KMethod::MoebiusReduced, spec, ctx);
  rb.value_check("method-agreement", ks0r, ks0, 1e-7, "rel",
                 "derived: substituted form against the direct chart");

  // adjoint relation between the two kernels on random pairs
  quad::CounterRng rng(check_seed(spec, "lemma-h-norm", dim));
  double worst_swap = 0.0, worst_split = -1e300;
  for (int i = 0; i < 10000; ++i) {
    Vec x = random_ball_point(rng, dim, 0.95);
    Vec y = random_ball_point(rng, dim, 0.95);
    if (geom::norm(geom::sub(x, y)) < 1e-3) continue;
    double h = kernels::h_kernel_mag(x, y, ctx);
    double k = kernels::n_kernel_mag(y, x, ctx);
    worst_swap = std::max(worst_swap, std::abs(h - k) / std::max(1e-300, k));
    // split upper bound |H| <= K + L
    double d = geom::norm(geom::sub(x, y));
    double br = geom::bracket(x, y);
    double Kxy = d * (std::pow(d, -ctx.n) - std::pow(br, -ctx.n));
    double Lxy = geom::norm(y) * (1.0 - geom::norm_sq(x)) / std::pow(br, ctx.n);
    worst_split = std::max(worst_split, h - (Kxy + Lxy) * (1.0 + 1e-13));
  }
  rb.value_check("adjoint-kernel-swap", worst_swap, 0.0, 1e-13, "abs",
                 "trivial identity: swap and compare");
  rb.bound_check("split-upper-bound", worst_split, 1e-13,
                 "|H| <= K + L pointwise decomposition");
  if (dim == 3) {
    Vec yh = {0.0, 0.5, 0.0};
    rb.value_check("h-kernel-origin", kernels::h_kernel_mag(Vec(3, 0.0), yh, ctx), 4.0,
                   1e-13, "rel", "derived: |y|^{1-n} at |y| = 1/2");
  }
  return rb.out;
}

std::vector<CheckResult> check_series_lemma(int dim, const QuadratureSpec& spec0,
                                            Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"series-lemma", dim, spec, {}};

  std::vector<int> ns = {dim};
  if (profile == Profile::Thorough) {
    ns.clear();
    for (int n = 3; n <= 10; ++n) ns.push_back(n);
  }
  long violations = 0;
  for (int n : ns)
    for (int m = 1; m <= 200; ++m)
      if (!(norms::coefficient_e(n, m) >= 0.0)) ++violations;
  rb.value_check("e-sign-sweep", static_cast<double>(violations), 0.0, 0.0, "count",
                 "e_m >= 0 for m in [1, 200]");

  double j0 = static_cast<double>(dim) / (dim + 1.0);
  double l0 = norms::L_closed_form(0.0, ctx);
  rb.value_check("norm-split-identity", ctx.omega * j0 + l0, ctx.omega, 1e-12, "rel",
                 "omega J(0) + L(0) = omega");
  rb.value_check("l-at-zero", l0, ctx.omega / (dim + 1.0), 1e-12, "rel",
                 "closed form: integral of |y| over the ball");

  double worst_j = 0.0, worst_l = 0.0;
  for (double r : {0.0, 0.3, 0.5, 0.7, 0.9}) {
    double s = norms::series_J_lemma(r, 200, ctx);
    double integral = norms::series_J_lemma_integral(r, ctx, 1e-10);
    worst_j = std::max(worst_j, std::abs(s - integral) / std::abs(integral));
    double lc = norms::L_closed_form(r, ctx);
    double ls = norms::L_series(r, 400, ctx);
    double lq = norms::L_quadrature(r, spec, ctx);
    worst_l = std::max({worst_l, std::abs(lc - ls) / lc, std::abs(lc - lq) / lc});
  }
  rb.value_check("j-series-vs-integral", worst_j, 0.0, 1e-6, "abs",
                 "independent adaptive quadrature of the defining integral");
  rb.value_check("l-three-routes", worst_l, 0.0, 1e-6, "abs",
                 "closed form vs series vs 2-D quadrature");

  double worst_dec = -1e300;
  for (double r : {0.2, 0.4, 0.6, 0.8}) {
    worst_dec = std::max(worst_dec, norms::series_J_lemma(r, 200, ctx) - j0);
    worst_dec = std::max(worst_dec, norms::L_closed_form(r, ctx) - l0);
  }
  rb.bound_check("maximum-at-zero", worst_dec, 1e-12,
                 "J and L are largest at the origin");
  return rb.out;
}

std::vector<CheckResult> check_l1_norm(int dim, const QuadratureSpec& spec0,
                                       Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"l1-norm", dim, spec, {}};
  auto rep = norms::norm_l1_estimate(ctx, spec, ops::NormConvention::Green,
                                     norms::default_radii_grid(), /*with_matrix=*/false);
  rb.value_check("green-convention-value", rep.value, 1.0 / (dim - 2.0), 1e-6, "rel",
                 "closed-form norm 1/(n-2) via the adjoint argument");
  rb.value_check("argmax-at-zero", rep.argmax_radius, 0.0, 0.0, "abs",
                 "supremum of the swapped kernel integral sits at 0");
  auto rep_unit = norms::norm_inf_estimate(ctx, spec, ops::NormConvention::Unit,
                                           {0.0, 0.3, 0.6});
  auto rep_sigma = norms::norm_inf_estimate(ctx, spec, ops::NormConvention::Sigma,
                                            {0.0, 0.3, 0.6});
  rb.value_check("convention-rescaling", rep_unit.value / rep_sigma.value, ctx.omega,
                 1e-10, "rel", "conventions rescale values, never move the argmax");
  return rb.out;
}

std::vector<CheckResult> check_riesz_bound(int dim, const QuadratureSpec& spec0,
                                           Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"riesz-bound", dim, spec, {}};
  auto one = fields::ScalarField::constant(1.0);
  Vec x0(dim, 0.0);

  rb.value_check("mu-one-volume", ops::riesz_potential(one, 1.0, x0, spec, ctx).value,
                 ctx.omega / dim, 1e-10, "rel", "trivial: exponent zero, ball volume");
  rb.value_check("mu-half-origin",
                 ops::riesz_potential(one, 0.5, x0, spec, ctx).value,
                 ctx.omega / (0.5 * dim), 1e-8, "rel",
                 "derived: radial closed form omega/(n mu)");

  std::vector<fields::ScalarField> fs = {one, fields::ScalarField::radial_power(1.0),
                                         fields::ScalarField::affine(1.0, 1.0, 1)};
  long violations = 0;
  double worst_margin = -1e300;
  int cases = 0;
  for (double mu : {0.5, 0.75, 1.0}) {
    for (double p : {1.0, 2.0, 4.0}) {
      for (double frac : {0.0, 0.45, 0.9}) {
        double dtarget = frac * mu * 0.999;
        double invq = 1.0 / p - dtarget;
        double q = invq <= 1e-12 ? std::numeric_limits<double>::infinity() : 1.0 / invq;
        if (q < 1.0) q = 1.0;
        ops::RieszParams prm{mu, p, q};
        if (prm.delta() >= mu) continue;
        for (const auto& f : fs) {
          auto outc = ops::riesz_bound_check(f, prm, spec, ctx);
          ++cases;
          if (!outc.passed) ++violations;
          worst_margin = std::max(
              worst_margin, (outc.lhs - outc.rhs - 3.0 * outc.lhs_std_error) /
                                std::max(1e-300, outc.rhs));
        }
      }
    }
  }
  rb.value_check("bound-grid", static_cast<double>(violations), 0.0, 0.0, "count",
                 "norm inequality over the (mu, p, q) grid and three test fields",
                 std::to_string(cases) + " cases, worst margin " +
                     std::to_string(worst_margin));
  return rb.out;
}

std::vector<CheckResult> check_duality_interpolation(int dim, const QuadratureSpec& spec0,
                                                     Profile profile) {
  QuadratureSpec spec = profile_spec(spec0, profile);
  DimensionContext ctx = DimensionContext::make(dim);
  ResultBuilder rb{"duality-interpolation", dim, spec, {}};
  int cells = profile == Profile::Thorough ? 21 : 15;
  auto d = norms::discretized_operator_norms(ctx, cells, ops::NormConvention::Sigma);

  rb.value_check("matrix-duality-exact", d.norm1_B, d.norminf_of_B_transpose, 0.0, "abs",
                 "finite-dimensional adjoint identity, bitwise",
                 std::to_string(d.cells) + " cells");
  double ninf_target = static_cast<double>(dim) / (dim + 1.0);
  rb.value_check("matrix-inf-norm", d.norminf_M, ninf_target, 0.05, "rel",
                 "row sums approximate the kernel integral at the center");
  rb.value_check("matrix-l1-norm", d.norm1_B, 1.0, 0.05, "rel",
                 "column sums approximate the swapped kernel integral");
  double p2_bound = norms::interpolation_bound(2.0, ctx, spec, ops::NormConvention::Sigma);
  rb.value_check("interpolation-p2", p2_bound, std::sqrt(0.75), 1e-6, "rel",
                 "geometric mean of the endpoint norms, sigma convention");
  rb.bound_check("spectral-vs-interpolation", d.spectral_sym, p2_bound * 1.05,
                 "power iteration on the symmetrized discretization");
  double n1 = norms::interpolation_bound(1.0, ctx, spec, ops::NormConvention::Sigma);
  double ninf = norms::interpolation_bound(std::numeric_limits<double>::infinity(), ctx,
                                           spec, ops::NormConvention::Sigma);
  rb.value_check("interpolation-p1-endpoint", n1, 1.0, 1e-6, "rel",
                 "limit p -> 1 recovers the first endpoint");
  rb.value_check("interpolation-pinf-endpoint", ninf, ninf_target, 1e-6, "rel",
                 "limit p -> infinity recovers the second endpoint");
  return rb.out;
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"gamma-inequality", false, 0, check_gamma_inequality},
      {"hyp-identity", true, 0, check_hyp_identity},
      {"sphere-reduction", true, 0, check_sphere_reduction},
      {"moebius-identities", true, 0, check_moebius_identities},
      {"kernel-gradient", true, 0, check_kernel_gradient},
      {"identity-chain", true, 0, check_identity_chain},
      {"green-solution", true, 0, check_green_solution},
      {"poisson-kernel", true, 0, check_poisson_kernel},
      {"theorem-inf-norm", true, 0, check_theorem_inf_norm},
      {"sup-location", true, 0, check_sup_location},
      {"corollary-grad-bound", true, 0, check_corollary_grad_bound},
      {"series-theorem", true, 0, check_series_theorem},
      {"lemma-h-norm", true, 0, check_lemma_h_norm},
      {"series-lemma", true, 0, check_series_lemma},
      {"l1-norm", true, 0, check_l1_norm},
      {"riesz-bound", true, 0, check_riesz_bound},
      {"duality-interpolation", true, 3, check_duality_interpolation},
  };
  return defs;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& d : registry()) names.push_back(d.name);
  return names;
}

const std::map<std::string, std::vector<std::string>>& statement_manifest() {
  static const std::map<std::string, std::vector<std::string>> manifest = {
      {"green-function-and-solution", {"green-solution", "kernel-gradient"}},
      {"poisson-kernel-extension", {"poisson-kernel"}},
      {"gradient-operator-definition", {"green-solution", "corollary-grad-bound"}},
      {"abs-operator-definition", {"theorem-inf-norm", "sup-location"}},
      {"hypergeometric-angular-identity", {"hyp-identity"}},
      {"gamma-product-inequality", {"gamma-inequality"}},
      {"moebius-transform-identities", {"moebius-identities"}},
      {"linf-norm-theorem", {"theorem-inf-norm", "sup-location"}},
      {"kernel-substitution-chain", {"identity-chain"}},
      {"sphere-integral-reduction", {"sphere-reduction"}},
      {"majorant-series-coefficients", {"series-theorem"}},
      {"gradient-sup-bound-corollary", {"corollary-grad-bound"}},
      {"riesz-potential-lemma", {"riesz-bound"}},
      {"l1-norm-theorem", {"l1-norm"}},
      {"swapped-kernel-lemma", {"lemma-h-norm", "series-lemma"}},
      {"adjoint-duality", {"duality-interpolation", "lemma-h-norm"}},
      {"interpolation-corollary", {"duality-interpolation"}},
  };
  return manifest;
}

namespace {

std::vector<CheckResult> run_one(const CheckDef& def, const std::vector<int>& dims,
                                 const QuadratureSpec& spec, Profile profile) {
  std::vector<CheckResult> out;
  auto run_dim = [&](int dim) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> rs;
    try {
      rs = def.run(dim, spec, profile);
    } catch (const std::exception& e) {
      CheckResult r;
      r.name = def.name + "/exception";
      r.dimension = dim;
      r.passed = false;
      r.metric = "count";
      r.computed = 1.0;
      r.tolerance = 0.0;
      r.provenance = "check aborted";
      r.detail = e.what();
      r.spec_echo = spec;
      rs.push_back(std::move(r));
    }
    auto t1 = std::chrono::steady_clock::now();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    for (auto& r : rs) r.runtime_ms = ms;
    out.insert(out.end(), rs.begin(), rs.end());
  };
  if (!def.per_dimension) {
    run_dim(0);
  } else {
    for (int dim : dims) {
      if (def.only_dimension != 0 && dim != def.only_dimension) continue;
      run_dim(dim);
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_check(const std::string& name, const std::vector<int>& dims,
                                   const QuadratureSpec& spec, Profile profile) {
  if (dims.empty()) throw std::invalid_argument("run_check: empty dimension list");
  for (const auto& def : registry())
    if (def.name == name) return run_one(def, dims, spec, profile);
  throw UnknownCheckError("unknown check: " + name);
}

RunReport run_all(const std::vector<int>& dims, Profile profile,
                  const QuadratureSpec& spec, int workers) {
  if (dims.empty()) throw std::invalid_argument("run_all: empty dimension list");
  for (int d : dims)
    if (d < 3) throw std::domain_error("run_all: dimensions must be >= 3");
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.dims = dims;
  rep.profile = profile;
  rep.spec = spec;
  rep.workers = std::max(1, workers);

  const auto& defs = registry();
  std::vector<std::future<std::vector<CheckResult>>> futures(defs.size());
  std::size_t next = 0;
  std::size_t active = 0;
  std::vector<bool> launched(defs.size(), false), collected(defs.size(), false);
  std::vector<std::vector<CheckResult>> results(defs.size());
  // simple bounded-parallelism scheduler preserving registry order on output
  while (next < defs.size() || active > 0) {
    while (next < defs.size() && active < static_cast<std::size_t>(rep.workers)) {
      futures[next] = std::async(std::launch::async, [&, i = next]() {
        return run_one(defs[i], dims, spec, profile);
      });
      launched[next] = true;
      ++active;
      ++next;
    }
    for (std::size_t i = 0; i < defs.size(); ++i) {
      if (launched[i] && !collected[i] &&
          futures[i].wait_for(std::chrono::milliseconds(5)) == std::future_status::ready) {
        results[i] = futures[i].get();
        collected[i] = true;
        --active;
      }
    }
  }
  for (auto& rs : results)
    rep.results.insert(rep.results.end(), rs.begin(), rs.end());

  auto t1 = std::chrono::steady_clock::now();
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  rep.total = static_cast<int>(rep.results.size());
  for (const auto& r : rep.results)
    r.passed ? ++rep.passed_count : ++rep.failed_count;
  return rep;
}

}  // namespace ballgreen::checks
