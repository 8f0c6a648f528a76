#include "ballgreen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "ballgreen/errors.hpp"

namespace ballgreen::quad {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ReducedPolar: return "reduced-polar";
    case Scheme::MonteCarlo: return "monte-carlo";
    case Scheme::SingularitySplit: return "singularity-split";
  }
  return "?";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "reduced-polar") return Scheme::ReducedPolar;
  if (name == "monte-carlo") return Scheme::MonteCarlo;
  if (name == "singularity-split") return Scheme::SingularitySplit;
  throw std::invalid_argument("unknown quadrature scheme: " + name);
}

void QuadratureSpec::validate() const {
  if (radial_nodes < 8 || angular_nodes < 8)
    throw std::invalid_argument("QuadratureSpec: node counts must be >= 8");
  if (mc_samples < 10000)
    throw std::invalid_argument("QuadratureSpec: mc_samples must be >= 10000");
  if (!(split_radius > 0.0 && split_radius <= 0.5))
    throw std::invalid_argument("QuadratureSpec: split_radius must lie in (0, 0.5]");
}

QuadratureSpec QuadratureSpec::scaled_nodes(double factor) const {
  QuadratureSpec s = *this;
  s.radial_nodes = std::max(8, static_cast<int>(std::lround(radial_nodes * factor)));
  s.angular_nodes = std::max(8, static_cast<int>(std::lround(angular_nodes * factor)));
  s.mc_samples = std::max(10000L, static_cast<long>(std::llround(mc_samples * factor)));
  return s;
}

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::abs(z - z1) > 1e-15);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

ZonalRule zonal_angular_rule(int n_dim, int nodes) {
  ZonalRule rule;
  rule.u.resize(nodes);
  rule.w.resize(nodes);
  const GaussRule& g = gauss_legendre(nodes);
  if (n_dim % 2 == 1) {
    double e = 0.5 * (n_dim - 3);
    for (int j = 0; j < nodes; ++j) {
      rule.u[j] = g.nodes[j];
      double base = 1.0 - g.nodes[j] * g.nodes[j];
      rule.w[j] = g.weights[j] * (e == 0.0 ? 1.0 : std::pow(base, e));
    }
  } else {
    for (int j = 0; j < nodes; ++j) {
      double th = 0.5 * M_PI * (g.nodes[j] + 1.0);
      rule.u[j] = std::cos(th);
      rule.w[j] =
          0.5 * M_PI * g.weights[j] * std::pow(std::sin(th), n_dim - 2);
    }
  }
  return rule;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussRule& r = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::vector<double> terms(n);
  for (int i = 0; i < n; ++i)
    terms[i] = r.weights[i] * f(mid + half * r.nodes[i]);
  return half * pairwise_sum(terms);
}

namespace {

double adaptive_panel(const std::function<double(double)>& f, double a, double b,
                      double whole, double tol, double tol_floor, int depth,
                      int max_depth, long& evals) {
  double mid = 0.5 * (a + b);
  double left = integrate_gl(f, a, mid, 15);
  double right = integrate_gl(f, mid, b, 15);
  evals += 30;
  if (evals > 20000000)
    throw QuadratureBudgetError("integrate_adaptive: evaluation budget exhausted");
  double err = std::abs(left + right - whole);
  if (err <= tol || depth >= max_depth) return left + right;
  double child_tol = std::max(tol * 0.70710678118654752, tol_floor);
  return adaptive_panel(f, a, mid, left, child_tol, tol_floor, depth + 1, max_depth,
                        evals) +
         adaptive_panel(f, mid, b, right, child_tol, tol_floor, depth + 1, max_depth,
                        evals);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth) {
  if (a == b) return 0.0;
  double whole = integrate_gl(f, a, b, 15);
  long evals = 15;
  // tolerance is relative to the integral scale (floor 1)
  double eff = tol * std::max(1.0, std::abs(whole));
  return adaptive_panel(f, a, b, whole, eff, 0.05 * eff, 0, max_depth, evals);
}

// ---------------------------------------------------------------------------

namespace {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::word(std::uint64_t i) const {
  return splitmix64(seed_ + (i + 1) * 0x9e3779b97f4a7c15ULL);
}

double CounterRng::next_u01() {
  std::uint64_t w = word(counter_++);
  // 53-bit mantissa, strictly inside (0,1)
  return (static_cast<double>(w >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = next_u01();
  double u2 = next_u01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::vector<Vec> sphere_sample(long count, std::uint64_t seed, const DimensionContext& ctx) {
  if (count < 1) throw std::invalid_argument("sphere_sample: count must be >= 1");
  CounterRng rng(seed);
  std::vector<Vec> pts;
  pts.reserve(count);
  while (static_cast<long>(pts.size()) < count) {
    Vec v(ctx.n);
    for (int i = 0; i < ctx.n; ++i) v[i] = rng.next_normal();
    double nv = geom::norm(v);
    if (nv < 1e-12) continue;
    pts.push_back(geom::scale(v, 1.0 / nv));
  }
  return pts;
}

std::vector<Vec> ball_sample(long count, std::uint64_t seed, const DimensionContext& ctx) {
  if (count < 1) throw std::invalid_argument("ball_sample: count must be >= 1");
  CounterRng rng(seed);
  std::vector<Vec> pts;
  pts.reserve(count);
  while (static_cast<long>(pts.size()) < count) {
    Vec v(ctx.n);
    for (int i = 0; i < ctx.n; ++i) v[i] = rng.next_normal();
    double nv = geom::norm(v);
    if (nv < 1e-12) continue;
    double r = std::pow(rng.next_u01(), 1.0 / ctx.n);
    pts.push_back(geom::scale(v, r / nv));
  }
  return pts;
}

// ---------------------------------------------------------------------------

double reduced_polar_integrate(const std::function<double(double, double)>& f,
                               const QuadratureSpec& spec, const DimensionContext& ctx) {
  const GaussRule& rr = gauss_legendre(spec.radial_nodes);
  ZonalRule ang = zonal_angular_rule(ctx.n, spec.angular_nodes);
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(spec.radial_nodes) * spec.angular_nodes);
  for (int i = 0; i < spec.radial_nodes; ++i) {
    double r = 0.5 * (rr.nodes[i] + 1.0);
    double wr = 0.5 * rr.weights[i];
    double rpow = std::pow(r, ctx.n - 1);
    for (int j = 0; j < spec.angular_nodes; ++j)
      terms.push_back(wr * ang.w[j] * f(r, ang.u[j]) * rpow);
  }
  return om2 * pairwise_sum(terms);
}

double chart_exit_radius(double x_radius, double u) {
  double disc = 1.0 - x_radius * x_radius * (1.0 - u * u);
  return -x_radius * u + std::sqrt(std::max(disc, 0.0));
}

double polar_chart_integrate(double x_radius,
                             const std::function<double(const ChartPoint&)>& g,
                             const QuadratureSpec& spec, const DimensionContext& ctx,
                             bool split_at_radius) {
  if (!(x_radius >= 0.0 && x_radius < 1.0))
    throw std::domain_error("polar_chart_integrate: x_radius must lie in [0, 1)");
  const GaussRule& rs = gauss_legendre(spec.radial_nodes);
  ZonalRule ang = zonal_angular_rule(ctx.n, spec.angular_nodes);
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(2 * spec.radial_nodes) * spec.angular_nodes);
  for (int j = 0; j < spec.angular_nodes; ++j) {
    double u = ang.u[j];
    double wu = ang.w[j];
    double R = chart_exit_radius(x_radius, u);
    double cut = split_at_radius ? std::min(spec.split_radius, 0.5 * R) : R;
    auto run_panel = [&](double s0, double s1) {
      for (int i = 0; i < spec.radial_nodes; ++i) {
        double s = 0.5 * (s0 + s1) + 0.5 * (s1 - s0) * rs.nodes[i];
        double ws = 0.5 * (s1 - s0) * rs.weights[i];
        ChartPoint cp;
        cp.s = s;
        cp.u = u;
        cp.y_par = x_radius + s * u;
        cp.y_perp = s * std::sqrt(std::max(0.0, 1.0 - u * u));
        terms.push_back(wu * ws * g(cp));
      }
    };
    if (split_at_radius && cut < R) {
      run_panel(0.0, cut);
      run_panel(cut, R);
    } else {
      run_panel(0.0, R);
    }
  }
  return om2 * pairwise_sum(terms);
}

double polar_chart_integrate_adaptive(double x_radius,
                                      const std::function<double(const ChartPoint&)>& g,
                                      const QuadratureSpec& spec,
                                      const DimensionContext& ctx, double radial_tol) {
  if (!(x_radius >= 0.0 && x_radius < 1.0))
    throw std::domain_error("polar_chart_integrate_adaptive: x_radius in [0, 1)");
  ZonalRule ang = zonal_angular_rule(ctx.n, spec.angular_nodes);
  double om2 = geom::sphere_area_dim(ctx.n - 1);
  std::vector<double> terms;
  terms.reserve(spec.angular_nodes);
  for (int j = 0; j < spec.angular_nodes; ++j) {
    double u = ang.u[j];
    double wu = ang.w[j];
    double R = chart_exit_radius(x_radius, u);
    double su = std::sqrt(std::max(0.0, 1.0 - u * u));
    auto radial = [&](double s) {
      ChartPoint cp;
      cp.s = s;
      cp.u = u;
      cp.y_par = x_radius + s * u;
      cp.y_perp = s * su;
      return g(cp);
    };
    terms.push_back(wu * integrate_adaptive(radial, 0.0, R, radial_tol));
  }
  return om2 * pairwise_sum(terms);
}

double polar_chart_integrate_full3(const Vec& x, const std::function<double(const Vec&)>& f,
                                   const QuadratureSpec& spec, const DimensionContext& ctx) {
  if (ctx.n != 3)
    throw SchemeMismatchError("full polar chart is implemented for n = 3 only");
  double xr = geom::norm(x);
  if (!(xr < 1.0)) throw std::domain_error("polar_chart_integrate_full3: |x| < 1 required");
  // the smooth chart is spectrally convergent; capping keeps thorough-profile
  // node scaling from cubing the cost
  const GaussRule& rs = gauss_legendre(std::min(spec.radial_nodes, 128));
  const GaussRule& ru = gauss_legendre(std::min(spec.angular_nodes, 128));
  int nphi = std::max(8, std::min(spec.angular_nodes, 128) / 2);
  std::vector<double> terms;
  terms.reserve(rs.nodes.size() * ru.nodes.size() * nphi);
  Vec y(3), sig(3);
  for (std::size_t j = 0; j < ru.nodes.size(); ++j) {
    double u = ru.nodes[j];  // cosine against fixed e3
    double wu = ru.weights[j];
    double su = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int k = 0; k < nphi; ++k) {
      double phi = 2.0 * M_PI * (k + 0.5) / nphi;
      double wphi = 2.0 * M_PI / nphi;
      sig[0] = su * std::cos(phi);
      sig[1] = su * std::sin(phi);
      sig[2] = u;
      double xd = geom::dot(x, sig);
      double R = -xd + std::sqrt(std::max(0.0, 1.0 - xr * xr + xd * xd));
      for (std::size_t i = 0; i < rs.nodes.size(); ++i) {
        double s = 0.5 * R * (rs.nodes[i] + 1.0);
        double ws = 0.5 * R * rs.weights[i];
        for (int d = 0; d < 3; ++d) y[d] = x[d] + s * sig[d];
        terms.push_back(wu * wphi * ws * s * s * f(y));
      }
    }
  }
  return pairwise_sum(terms);
}

}  // namespace ballgreen::quad
