#include "ballgreen/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ballgreen/errors.hpp"

namespace ballgreen::specfun {

namespace {

// Lanczos approximation, g = 607/128, series denominators x+1 .. x+14
// (Godfrey set); kLanczosShift = g + 1/2.
constexpr double kLanczosShift = 671.0 / 128.0;
constexpr double kSqrt2Pi = 2.5066282746310005;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr double kLanczosCof[14] = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,
    -0.210264441724104883e-3, 0.217439618115212643e-3,
    -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};

double lanczos_series(double x) {
  double s = kLanczosC0;
  for (int j = 0; j < 14; ++j) s += kLanczosCof[j] / (x + 1.0 + j);
  return s;
}

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && std::abs(v - std::round(v)) < 1e-13;
}

constexpr int kMaxTerms = 10000;
constexpr double kTermEps = 1e-16;

// Defining power series; terminates early for polynomial cases.
double hyp_series(double a, double b, double c, double t) {
  double term = 1.0;
  double sum = 1.0;
  int small_streak = 0;
  for (int m = 0; m < kMaxTerms; ++m) {
    term *= (a + m) * (b + m) / ((c + m) * (m + 1.0)) * t;
    if (term == 0.0) return sum;  // (a)_m or (b)_m hit zero: polynomial
    sum += term;
    if (std::abs(term) < kTermEps * std::abs(sum)) {
      if (++small_streak >= 3) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("hypergeometric series did not converge within " +
                         std::to_string(kMaxTerms) + " terms");
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn requires x > 0");
  if (x < 0.5) return gamma_fn(x + 1.0) / x;
  double t = x + kLanczosShift;
  return std::pow(t, x + 0.5) * std::exp(-t) * kSqrt2Pi * lanczos_series(x) / x;
}

double lgamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("lgamma_fn requires x > 0");
  if (x < 0.5) return lgamma_fn(x + 1.0) - std::log(x);
  double t = x + kLanczosShift;
  return (x + 0.5) * std::log(t) - t + std::log(kSqrt2Pi * lanczos_series(x) / x);
}

double beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_fn requires a, b > 0");
  return std::exp(lgamma_fn(a) + lgamma_fn(b) - lgamma_fn(a + b));
}

double pochhammer(double a, int k) {
  if (k < 0) throw std::domain_error("pochhammer requires k >= 0");
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + j;
  return p;
}

double gauss_2f1(const Hyp2F1Params& p) { return gauss_2f1(p.a, p.b, p.c, p.t); }

double gauss_2f1(double a, double b, double c, double t) {
  if (is_nonpositive_integer(c))
    throw std::invalid_argument("gauss_2f1: c must not be a nonpositive integer");
  if (!(t > -1.0 && t < 1.0))
    throw std::domain_error("gauss_2f1: t must lie in (-1, 1)");
  if (t == 0.0) return 1.0;
  if (std::abs(t) <= 0.7) return hyp_series(a, b, c, t);
  if (t > 0.7) {
    // Euler transformation; the transformed series converges geometrically
    // even when c-a-b <= 0 makes the direct series diverge at t -> 1.
    return std::pow(1.0 - t, c - a - b) * hyp_series(c - a, c - b, c, t);
  }
  // t < -0.7: Pfaff transformation onto t/(t-1) in (0, 0.5).
  return std::pow(1.0 - t, -a) * hyp_series(a, c - b, c, t / (t - 1.0));
}

double angular_integral(const AngularIntegralParams& p) {
  if (!(p.mu > 0.0)) throw std::domain_error("angular_integral requires mu > 0");
  if (!(p.r >= 0.0 && p.r < 1.0))
    throw std::domain_error("angular_integral requires r in [0, 1)");
  double front = beta_fn(p.mu / 2.0, 0.5);
  double f = gauss_2f1(p.nu, p.nu + (1.0 - p.mu) / 2.0, (1.0 + p.mu) / 2.0,
                       p.r * p.r);
  return front * f;
}

GammaInequalityResult gamma_inequality_holds(const GammaInequalityCase& c) {
  if (!(c.m > 0.0) || !(c.p > 0.0) || !(c.p > c.k) || !(c.k > -c.m))
    throw std::domain_error("gamma_inequality_holds: need m,p > 0 and p > k > -m");
  GammaInequalityResult r;
  r.sign_nonneg = c.k * (c.p - c.m - c.k) >= 0.0;
  r.log_lhs = lgamma_fn(c.p) + lgamma_fn(c.m);
  r.log_rhs = lgamma_fn(c.p - c.k) + lgamma_fn(c.m + c.k);
  double slack = 1e-12 * (std::abs(r.log_lhs) + std::abs(r.log_rhs) + 1.0);
  r.product_ge = r.log_lhs >= r.log_rhs - slack;
  return r;
}

}  // namespace ballgreen::specfun
