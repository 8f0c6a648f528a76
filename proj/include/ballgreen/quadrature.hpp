#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ballgreen/geometry.hpp"

namespace ballgreen::quad {

using geom::DimensionContext;
using geom::Vec;

enum class Scheme { ReducedPolar, MonteCarlo, SingularitySplit };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

struct QuadratureSpec {
  Scheme scheme = Scheme::ReducedPolar;
  int radial_nodes = 96;
  int angular_nodes = 96;
  long mc_samples = 200000;
  std::uint64_t seed = 20240817ULL;
  double split_radius = 0.1;
  double target_tol = 1e-8;

  void validate() const;  // throws std::invalid_argument
  QuadratureSpec scaled_nodes(double factor) const;
};

// Gauss-Legendre nodes/weights on [-1, 1]; cached, thread-safe.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// Zonal angular rule on u = cos(theta) with the S^{n-1} weight
// (1-u^2)^{(n-3)/2} folded into the weights: odd dimensions use the
// polynomial u-form (exact for polynomial integrands), even dimensions the
// theta-form (the weight sin^{n-2} theta is then analytic).
struct ZonalRule {
  std::vector<double> u;
  std::vector<double> w;
};
ZonalRule zonal_angular_rule(int n_dim, int nodes);

// Deterministic pairwise (tree) summation.
double pairwise_sum(std::span<const double> v);

// 1-D integration of f over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

// Adaptive bisection on 15-point Gauss panels; throws QuadratureBudgetError
// when the tolerance cannot be met within the subdivision budget.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth = 48);

// ---------------------------------------------------------------------------
// Counter-based RNG (splitmix64 output function), reproducible across
// platforms: value i depends only on (seed, i).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed), counter_(0) {}

  double next_u01();              // uniform (0,1)
  double next_normal();           // standard normal, Box-Muller
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t word(std::uint64_t i) const;
  std::uint64_t seed_;
  std::uint64_t counter_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Uniform points on S^{n-1} (Gaussian normalization) / in B^n (radius U^{1/n}).
std::vector<Vec> sphere_sample(long count, std::uint64_t seed, const DimensionContext& ctx);
std::vector<Vec> ball_sample(long count, std::uint64_t seed, const DimensionContext& ctx);

// ---------------------------------------------------------------------------
// Reduced-polar integration over B^n of an integrand given in axis-adapted
// coordinates: f(r, u) where r = |y| and u = cos(angle between y and the
// symmetry axis). Exact for axisymmetric polynomials of moderate degree.
//
//   integral = omega_{n-2} * sum_{r,u} w_r w_u f(r,u) r^{n-1} (1-u^2)^{(n-3)/2}
double reduced_polar_integrate(const std::function<double(double, double)>& f,
                               const QuadratureSpec& spec, const DimensionContext& ctx);

// Polar chart centred at x, axisymmetric about the direction of x
// (axis = e1 when x = 0): integrates g(s, u) -> contribution of the point
// y = x + s*sigma(u), where sigma(u) has cosine u against x-hat. The s^{n-1}
// Jacobian and the angular weight are applied by the routine; g receives
// (s, u, y_par, y_perp) with y expressed in (x-hat, perp) coordinates.
struct ChartPoint {
  double s;       // distance from x
  double u;       // cosine of chart angle
  double y_par;   // component of y along x-hat
  double y_perp;  // component of y orthogonal to x-hat (>= 0)
};
double polar_chart_integrate(double x_radius,
                             const std::function<double(const ChartPoint&)>& g,
                             const QuadratureSpec& spec, const DimensionContext& ctx,
                             bool split_at_radius = false);

// Same chart with an adaptive radial rule per angular node (for integrands
// with an endpoint singularity at s = 0, e.g. fractional kernel powers).
double polar_chart_integrate_adaptive(double x_radius,
                                      const std::function<double(const ChartPoint&)>& g,
                                      const QuadratureSpec& spec,
                                      const DimensionContext& ctx, double radial_tol);

// Full polar chart around an arbitrary interior point (n = 3 only):
// integrates f(y) over the ball with directions resolved in the fixed frame.
double polar_chart_integrate_full3(const Vec& x, const std::function<double(const Vec&)>& f,
                                   const QuadratureSpec& spec, const DimensionContext& ctx);

// Distance from x (|x| = xr along the chart axis) to the unit sphere in the
// direction with cosine u against x-hat.
double chart_exit_radius(double x_radius, double u);

}  // namespace ballgreen::quad
