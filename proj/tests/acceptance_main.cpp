// Acceptance suite: runs the toolkit's headline criteria end to end and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.
//
//   ballgreen_acceptance            run every criterion
//   ballgreen_acceptance 3 7 12     run a subset

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "ballgreen/cli.hpp"
#include "ballgreen/conjecture.hpp"
#include "ballgreen/fields.hpp"
#include "ballgreen/kernels.hpp"
#include "ballgreen/normcalc.hpp"
#include "ballgreen/operators.hpp"
#include "ballgreen/quadrature.hpp"
#include "ballgreen/specfun.hpp"
#include "ballgreen/verify.hpp"

using namespace ballgreen;
using geom::DimensionContext;
using geom::Vec;

namespace {

const quad::QuadratureSpec kSpec;

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

Vec rand_pt(quad::CounterRng& rng, int n, double rmax) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.next_normal();
  double r = rmax * std::pow(rng.next_u01(), 1.0 / n);
  return geom::scale(v, r / geom::norm(v));
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// 1. sup-norm constant at the origin
bool criterion_1(std::string& msg) {
  bool ok = true;
  std::ostringstream os;
  const double targets[] = {3.0 * M_PI, 8.0 * M_PI * M_PI / 5.0,
                            20.0 * M_PI * M_PI / 9.0};
  for (int i = 0; i < 3; ++i) {
    int n = 3 + i;
    auto ctx = DimensionContext::make(n);
    double t0 = now_s();
    double k0 = norms::kernel_integral_K(0.0, norms::KMethod::Direct, kSpec, ctx);
    double secs = now_s() - t0;
    double rel = std::abs(k0 - targets[i]) / targets[i];
    bool pass = rel <= 1e-6 && secs < 5.0;
    ok = ok && pass;
    os << " n=" << n << ": K(0)=" << fmt(k0) << " rel=" << fmt(rel) << " time="
       << fmt(secs) << "s;";
  }
  msg = os.str();
  return ok;
}

// 2. supremum at the origin + rotation invariance
bool criterion_2(std::string& msg) {
  bool ok = true;
  std::ostringstream os;
  for (int n : {3, 4, 5}) {
    auto ctx = DimensionContext::make(n);
    double k0 = norms::kernel_integral_K(0.0, norms::KMethod::Direct, kSpec, ctx);
    double worst = 0.0, argmax = 0.0, maxval = k0;
    for (double r : norms::default_radii_grid()) {
      if (r == 0.0) continue;
      double k = norms::kernel_integral_K(r, norms::KMethod::Direct, kSpec, ctx);
      worst = std::max(worst, k / k0);
      if (k > maxval) {
        maxval = k;
        argmax = r;
      }
    }
    bool pass = worst <= 1.0 + 1e-5 && argmax == 0.0;
    ok = ok && pass;
    os << " n=" << n << ": max K(r)/K(0)=" << fmt(worst) << " argmax=" << fmt(argmax)
       << ";";
  }
  {
    auto ctx = DimensionContext::make(3);
    quad::CounterRng rng(2718281828ULL);
    double ref = norms::kernel_integral_K(0.5, norms::KMethod::Direct, kSpec, ctx);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      Vec d(3);
      for (int k = 0; k < 3; ++k) d[k] = rng.next_normal();
      d = geom::scale(d, 0.5 / geom::norm(d));
      double v = norms::kernel_integral_K_at(d, kSpec, ctx);
      worst = std::max(worst, std::abs(v - ref) / ref);
    }
    ok = ok && worst <= 1e-6;
    os << " direction-independence rel=" << fmt(worst);
  }
  msg = os.str();
  return ok;
}

// 3. L1 theorem and swapped-kernel bound
bool criterion_3(std::string& msg) {
  bool ok = true;
  std::ostringstream os;
  for (int n : {3, 4, 5}) {
    auto ctx = DimensionContext::make(n);
    double ks0 = norms::kernel_integral_Kswap(0.0, norms::KMethod::Direct, kSpec, ctx);
    double rel0 = std::abs(ks0 - ctx.omega) / ctx.omega;
    auto rep = norms::norm_l1_estimate(ctx, kSpec, ops::NormConvention::Green,
                                       norms::default_radii_grid(), false);
    double target = 1.0 / (n - 2.0);
    double rel1 = std::abs(rep.value - target) / target;
    double worst = 0.0;
    for (double v : rep.values) worst = std::max(worst, v / rep.prefactor / ctx.omega);
    bool pass = rel0 <= 1e-6 && rel1 <= 1e-6 && worst <= 1.0 + 1e-5;
    ok = ok && pass;
    os << " n=" << n << ": Kswap(0) rel=" << fmt(rel0) << " L1=" << fmt(rep.value)
       << " grid-max/omega=" << fmt(worst) << ";";
  }
  msg = os.str();
  return ok;
}

// 4. angular identity + sphere-integral reduction
bool criterion_4(std::string& msg) {
  double worst_id = 0.0;
  for (double mu : {2.0, 3.0, 4.0, 5.0}) {
    for (double nu : {1.0, 1.5, 2.0}) {
      for (int ir = 0; ir <= 9; ++ir) {
        double r = 0.1 * ir;
        double rhs = specfun::angular_integral({mu, nu, r});
        double lhs = quad::integrate_adaptive(
            [&](double t) {
              return std::pow(std::sin(t), mu - 1.0) *
                     std::pow(1.0 + r * r - 2.0 * r * std::cos(t), -nu);
            },
            0.0, M_PI, 1e-12);
        worst_id = std::max(worst_id, std::abs(lhs - rhs));
      }
    }
  }
  // the (n+1)/2 family rides on each dimension
  for (int n : {3, 4, 5}) {
    double nu = 0.5 * (n + 1);
    for (double r : {0.3, 0.6, 0.9}) {
      double rhs = specfun::angular_integral({static_cast<double>(n - 1), nu, r});
      double lhs = quad::integrate_adaptive(
          [&](double t) {
            return std::pow(std::sin(t), n - 2.0) *
                   std::pow(1.0 + r * r - 2.0 * r * std::cos(t), -nu);
          },
          0.0, M_PI, 1e-12);
      worst_id = std::max(worst_id, std::abs(lhs - rhs));
    }
  }
  double worst_sp = 0.0;
  for (int n : {3, 4, 5}) {
    auto ctx = DimensionContext::make(n);
    for (double a : {n + 1.0, n + 2.0}) {
      for (double rho : {0.0, 0.3, 0.6, 0.9}) {
        double red = norms::sphere_integral_reduced(a, rho, 1.0, ctx);
        double dir = norms::sphere_integral_direct(a, rho, ctx, 1e-12);
        worst_sp = std::max(worst_sp, std::abs(red - dir));
      }
    }
  }
  msg = " identity residual=" + fmt(worst_id) + " reduction residual=" + fmt(worst_sp);
  return worst_id < 1e-8 && worst_sp < 1e-7;
}

// 5. series audit
bool criterion_5(std::string& msg) {
  double t0 = now_s();
  long violations = 0;
  for (int n = 3; n <= 10; ++n) {
    auto sc = norms::SeriesCoefficients::compute(n, 200);
    double prev = 0.0;
    for (int m = 1; m <= 200; ++m) {
      if (!(sc.a[m - 1] < 0.0)) ++violations;
      if (!(sc.e[m - 1] >= 0.0)) ++violations;
      if (sc.b[m - 1] > sc.c[m - 1] * (1.0 + 1e-12)) ++violations;
      if (sc.c[m - 1] < prev * (1.0 - 1e-12)) ++violations;
      if (sc.c[m - 1] > sc.c_limit * (1.0 + 1e-12)) ++violations;
      prev = sc.c[m - 1];
    }
    if (!(sc.c_limit < 1.0)) ++violations;
  }
  double climit_rel = std::abs(norms::majorant_c_limit(3) - 2.0 / 3.0) / (2.0 / 3.0);
  double worst_series = 0.0;
  for (int n : {3, 4, 5}) {
    auto ctx = DimensionContext::make(n);
    for (double r : {0.0, 0.45, 0.9}) {
      double sj = norms::series_J_theorem(r, 300, ctx);
      double ij = norms::series_J_theorem_integral(r, ctx, 1e-10);
      worst_series = std::max(worst_series, std::abs(sj - ij) / std::abs(ij));
      double sl = norms::series_J_lemma(r, 300, ctx);
      double il = norms::series_J_lemma_integral(r, ctx, 1e-10);
      worst_series = std::max(worst_series, std::abs(sl - il) / std::abs(il));
      double lc = norms::L_closed_form(r, ctx);
      double ls = norms::L_series(r, 400, ctx);
      double lq = norms::L_quadrature(r, kSpec, ctx);
      worst_series = std::max(worst_series, std::abs(lc - ls) / lc);
      worst_series = std::max(worst_series, std::abs(lc - lq) / lc);
    }
  }
  double secs = now_s() - t0;
  msg = " violations=" + std::to_string(violations) +
        " c-limit(3) rel=" + fmt(climit_rel) + " series-vs-integral=" +
        fmt(worst_series) + " time=" + fmt(secs) + "s";
  return violations == 0 && climit_rel <= 1e-12 && worst_series <= 1e-6 && secs < 30.0;
}

// 6. manufactured solution
bool criterion_6(std::string& msg) {
  auto ctx = DimensionContext::make(3);
  auto one = fields::ScalarField::constant(1.0);
  double worst_pot = 0.0, worst_grad = 0.0;
  for (int i = 0; i < 20; ++i) {
    double r = 0.95 * i / 19.0;
    Vec x = {r, 0.0, 0.0};
    double got = ops::green_potential(one, x, kSpec, ctx).value;
    worst_pot = std::max(worst_pot, std::abs(got - (1.0 - r * r) / 6.0));
    auto g = ops::grad_operator(one, x, kSpec, ctx);
    for (int c = 0; c < 3; ++c)
      worst_grad = std::max(worst_grad, std::abs(g.value[c] - x[c] / 3.0));
  }
  quad::CounterRng rng(314159ULL);
  double worst_fd = 0.0;
  const double h = 1e-4;
  for (int i = 0; i < 10; ++i) {
    Vec x = rand_pt(rng, 3, 0.7);
    auto dv = ops::grad_operator(one, x, kSpec, ctx);
    for (int c = 0; c < 3; ++c) {
      Vec xp = x, xm = x;
      xp[c] += h;
      xm[c] -= h;
      double fd = -(ops::green_potential(one, xp, kSpec, ctx).value -
                    ops::green_potential(one, xm, kSpec, ctx).value) /
                  (2.0 * h);
      worst_fd = std::max(worst_fd, std::abs(fd - dv.value[c]));
    }
  }
  msg = " potential=" + fmt(worst_pot) + " gradient=" + fmt(worst_grad) +
        " fd-match=" + fmt(worst_fd);
  return worst_pot <= 1e-6 && worst_grad <= 5e-4 && worst_fd <= 5e-4;
}

// 7. kernel identities
bool criterion_7(std::string& msg) {
  auto ctx = DimensionContext::make(3);
  quad::CounterRng rng(161803398ULL);
  double worst_fd = 0.0;
  const double h = 1e-5;
  int accepted = 0;
  while (accepted < 100) {
    Vec x = rand_pt(rng, 3, 0.9);
    Vec y = rand_pt(rng, 3, 0.9);
    if (geom::norm(geom::sub(x, y)) < 0.1) continue;
    ++accepted;
    Vec grad = kernels::green_gradient(x, y, ctx);
    double gn = geom::norm(grad);
    for (int c = 0; c < 3; ++c) {
      Vec xp = x, xm = x;
      xp[c] += h;
      xm[c] -= h;
      double fd = (kernels::green(xp, y, ctx) - kernels::green(xm, y, ctx)) / (2 * h);
      worst_fd = std::max(worst_fd, std::abs(fd - grad[c]) / gn);
    }
  }
  double worst_norm = 0.0, worst_jac = 0.0;
  for (int i = 0; i < 2000; ++i) {
    Vec x = rand_pt(rng, 3, 0.95);
    Vec y = rand_pt(rng, 3, 0.95);
    worst_norm = std::max(worst_norm, geom::moebius_norm_residual(x, y));
  }
  for (int i = 0; i < 20; ++i) {
    Vec x = rand_pt(rng, 3, 0.7);
    Vec z = rand_pt(rng, 3, 0.7);
    Vec mx = geom::scale(x, -1.0);
    double jfd[3][3];
    for (int c = 0; c < 3; ++c) {
      Vec zp = z, zm = z;
      zp[c] += h;
      zm[c] -= h;
      Vec fp = geom::moebius(mx, zp);
      Vec fm = geom::moebius(mx, zm);
      for (int r2 = 0; r2 < 3; ++r2) jfd[r2][c] = (fp[r2] - fm[r2]) / (2 * h);
    }
    double det = jfd[0][0] * (jfd[1][1] * jfd[2][2] - jfd[1][2] * jfd[2][1]) -
                 jfd[0][1] * (jfd[1][0] * jfd[2][2] - jfd[1][2] * jfd[2][0]) +
                 jfd[0][2] * (jfd[1][0] * jfd[2][1] - jfd[1][1] * jfd[2][0]);
    double an = geom::moebius_jacobian(x, z);
    worst_jac = std::max(worst_jac, std::abs(std::abs(det) - an) / an);
  }
  double worst_chain = 0.0;
  int done = 0;
  while (done < 10000) {
    Vec x = rand_pt(rng, 3, 0.8);
    Vec z = rand_pt(rng, 3, 1.0);
    double zn = geom::norm(z);
    if (zn < 0.05 || zn > 0.95) continue;
    ++done;
    Vec y = geom::moebius(geom::scale(x, -1.0), z);
    double lhs = kernels::n_kernel_mag(x, y, ctx);
    double rhs = kernels::identity_chain_rhs(x, z, ctx);
    worst_chain = std::max(worst_chain, std::abs(lhs - rhs) / rhs);
  }
  msg = " grad-fd=" + fmt(worst_fd) + " moebius-norm=" + fmt(worst_norm) +
        " jacobian-fd=" + fmt(worst_jac) + " chain=" + fmt(worst_chain);
  return worst_fd <= 1e-6 && worst_norm <= 1e-6 && worst_jac <= 1e-6 &&
         worst_chain <= 1e-10;
}

// 8. Gamma product inequality on the full admissible grid
bool criterion_8(std::string& msg) {
  long violations = 0;
  const int g = 20;
  for (int im = 0; im < g; ++im) {
    double m = 0.15 + (5.85 - 0.15) * im / (g - 1);
    for (int ip = 0; ip < g; ++ip) {
      double p = 0.2 + (7.8 - 0.2) * ip / (g - 1);
      for (int ik = 0; ik < g; ++ik) {
        double k = -m + (ik + 0.5) / g * (p + m);
        auto r = specfun::gamma_inequality_holds({m, p, k});
        double slack = 1e-12 * (std::abs(r.log_lhs) + std::abs(r.log_rhs) + 1.0);
        if (r.sign_nonneg && r.log_lhs < r.log_rhs - slack) ++violations;
        if (!r.sign_nonneg && r.log_lhs > r.log_rhs + slack) ++violations;
      }
    }
  }
  msg = " grid=20^3 violations=" + std::to_string(violations);
  return violations == 0;
}

// 9. Riesz bound grid
bool criterion_9(std::string& msg) {
  double t0 = now_s();
  auto ctx = DimensionContext::make(3);
  std::vector<fields::ScalarField> fs = {fields::ScalarField::constant(1.0),
                                         fields::ScalarField::radial_power(1.0),
                                         fields::ScalarField::affine(1.0, 1.0, 1)};
  long violations = 0;
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
          ++cases;
          if (!ops::riesz_bound_check(f, prm, kSpec, ctx).passed) ++violations;
        }
      }
    }
  }
  double secs = now_s() - t0;
  msg = " cases=" + std::to_string(cases) + " violations=" + std::to_string(violations) +
        " time=" + fmt(secs) + "s";
  return violations == 0 && secs < 60.0;
}

// 10. duality and interpolation
bool criterion_10(std::string& msg) {
  auto ctx = DimensionContext::make(3);
  auto d = norms::discretized_operator_norms(ctx, 15, ops::NormConvention::Sigma);
  bool exact = d.norm1_B == d.norminf_of_B_transpose;
  double err_inf = std::abs(d.norminf_M - 0.75) / 0.75;
  double err_l1 = std::abs(d.norm1_B - 1.0);
  double bound = norms::interpolation_bound(2.0, ctx, kSpec, ops::NormConvention::Sigma);
  bool spec_ok = d.spectral_sym <= bound * 1.05;
  msg = " duality-exact=" + std::string(exact ? "yes" : "no") +
        " inf-norm-err=" + fmt(err_inf) + " l1-norm-err=" + fmt(err_l1) +
        " spectral=" + fmt(d.spectral_sym) + " bound=" + fmt(bound * 1.05);
  return exact && err_inf <= 0.05 && err_l1 <= 0.05 && spec_ok &&
         std::abs(bound - std::sqrt(0.75)) / std::sqrt(0.75) <= 1e-6;
}

// 11. conjecture closed forms vs x = 0 integrals (scan stays non-assertive)
bool criterion_11(std::string& msg) {
  bool ok = true;
  std::ostringstream os;
  for (int n : {3, 4, 5}) {
    auto ctx = DimensionContext::make(n);
    for (double p : {n + 1.0, 2.0 * n}) {
      conj::ConjectureParams prm{n, p};
      double apc = conj::conjecture_Ap_closed(prm, ctx);
      double api = conj::conjecture_Ap_integral(prm, ctx);
      double bpc = conj::conjecture_Bp_closed(prm, ctx);
      double bpi = conj::conjecture_Bp_integral(prm, ctx);
      double arel = std::abs(apc - api) / api;
      double brel = std::abs(bpc - bpi) / bpi;
      if (arel > 1e-6) {
        ok = false;
        os << " A_p mismatch n=" << n << " p=" << p << " rel=" << fmt(arel) << ";";
      }
      if (brel > 1e-6) {
        ok = false;
        double corrected_rel =
            std::abs(conj::conjecture_Bp_closed_corrected(prm, ctx) - bpi) / bpi;
        os << " B_p documented closed form disagrees with its x=0 integral at n=" << n
           << " p=" << p << " (ratio " << fmt(bpc / bpi)
           << " = (B((n+q-1)/2,1/2)/B((q+1)/2,(n-1)/2))^{1/q}; corrected angular "
              "factor Gamma((q+1)/2)/Gamma(1/2) matches to "
           << fmt(corrected_rel) << ");";
      }
    }
  }
  // scan reports generate regardless (non-assertive)
  auto ctx3 = DimensionContext::make(3);
  auto scan = conj::conjecture_scan({3, 4.0}, {0.0, 0.3, 0.6, 0.9}, kSpec, ctx3, 0);
  os << " scan generated (" << scan.phi_a.size() << " radii, argmax-at-zero="
     << (scan.grid_argmax_at_zero ? "observed" : "not-observed")
     << ", recorded as evidence only)";
  msg = os.str();
  return ok;
}

// 12. byte-identical reproducibility of the verification report
bool criterion_12(std::string& msg) {
  double t0 = now_s();
  std::string out1 = "/tmp/ballgreen_accept_rep1.json";
  std::string out2 = "/tmp/ballgreen_accept_rep2.json";
  std::vector<std::string> base = {"verify", "all",  "--dims",         "3",
                                   "--profile", "fast", "--no-timestamp", "--seed",
                                   "20240817"};
  auto a1 = base;
  a1.insert(a1.end(), {"--out", out1});
  auto a2 = base;
  a2.insert(a2.end(), {"--out", out2});
  int rc1 = cli::dispatch(a1);
  int rc2 = cli::dispatch(a2);
  auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  std::string s1 = slurp(out1), s2 = slurp(out2);
  double secs = now_s() - t0;
  bool ok = rc1 == 0 && rc2 == 0 && !s1.empty() && s1 == s2 && secs < 120.0;
  msg = " exit=(" + std::to_string(rc1) + "," + std::to_string(rc2) + ") bytes=" +
        std::to_string(s1.size()) + " identical=" + (s1 == s2 ? "yes" : "no") +
        " time=" + fmt(secs) + "s";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "sup-norm constant 2n pi^{n/2}/((n+1)Gamma(n/2)) at the origin", criterion_1},
      {2, "supremum located at the origin; rotation invariance", criterion_2},
      {3, "swapped-kernel value omega and L1 norm 1/(n-2)", criterion_3},
      {4, "angular identity and sphere-integral reduction", criterion_4},
      {5, "series audit: signs, majorant chain, series-vs-integral", criterion_5},
      {6, "manufactured Dirichlet solution and its gradient", criterion_6},
      {7, "kernel and Moebius identities", criterion_7},
      {8, "Gamma product inequality grid", criterion_8},
      {9, "Riesz potential norm bound", criterion_9},
      {10, "matrix duality, spectral bound, interpolation", criterion_10},
      {11, "p-norm bound closed forms vs x=0 integrals (exploratory)", criterion_11},
      {12, "byte-identical reproducible verification run", criterion_12},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end())
      continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string(" exception: ") + e.what();
    }
    std::printf("%s criterion %2d: %s —%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
