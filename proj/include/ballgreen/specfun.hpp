#pragma once

#include <utility>

namespace ballgreen::specfun {

// Gamma function for x > 0, Lanczos rational approximation
// (g = 671/128, 14-term Godfrey coefficient set, fixed below in specfun.cpp).
// Relative error <= ~1e-14 on (0, 50].
double gamma_fn(double x);

// log Gamma for x > 0; safe for the large arguments appearing in the
// series coefficient formulas (x up to a few hundred).
double lgamma_fn(double x);

// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0. Evaluated in log space.
double beta_fn(double a, double b);

// Shifted factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
double pochhammer(double a, int k);

struct Hyp2F1Params {
  double a;
  double b;
  double c;
  double t;
};

// Gauss hypergeometric function F(a,b;c;t) for real parameters, |t| < 1.
// Direct series for |t| <= 0.7; Euler transformation
// F = (1-t)^{c-a-b} F(c-a, c-b; c; t) for t in (0.7, 1); Pfaff
// transformation for t < -0.7. Throws std::invalid_argument when c is a
// nonpositive integer, std::domain_error for |t| >= 1, ConvergenceError
// when the 10000-term budget is exhausted.
double gauss_2f1(const Hyp2F1Params& p);
double gauss_2f1(double a, double b, double c, double t);

struct AngularIntegralParams {
  double mu;  // exponent in sin^{mu-1}, mu > 0
  double nu;  // power of the denominator
  double r;   // r in [0, 1)
};

// int_0^pi sin^{mu-1} t (1 + r^2 - 2 r cos t)^{-nu} dt
// = B(mu/2, 1/2) F(nu, nu + (1-mu)/2; (1+mu)/2; r^2).
double angular_integral(const AngularIntegralParams& p);

struct GammaInequalityCase {
  double m;  // m > 0
  double p;  // p > 0
  double k;  // p > k > -m
};

struct GammaInequalityResult {
  bool sign_nonneg;    // k (p - m - k) >= 0
  bool product_ge;     // Gamma(p)Gamma(m) >= Gamma(p-k)Gamma(m+k)
  double log_lhs;      // log[Gamma(p)Gamma(m)]
  double log_rhs;      // log[Gamma(p-k)Gamma(m+k)]
};

// Chebyshev-type Gamma product inequality: if k(p-m-k) >= 0 then
// Gamma(p)Gamma(m) >= Gamma(p-k)Gamma(m+k), and conversely with <=.
// Comparisons carry a 1e-12 roundoff slack. Throws std::domain_error
// when the hypotheses m,p > 0, p > k > -m are violated.
GammaInequalityResult gamma_inequality_holds(const GammaInequalityCase& c);

}  // namespace ballgreen::specfun
