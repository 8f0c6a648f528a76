#include <doctest.h>

#include <cmath>

#include "ballgreen/errors.hpp"
#include "ballgreen/kernels.hpp"
#include "ballgreen/quadrature.hpp"

using namespace ballgreen;
using geom::Vec;

namespace {

Vec rand_pt(quad::CounterRng& rng, int n, double rmax) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.next_normal();
  double r = rmax * std::pow(rng.next_u01(), 1.0 / n);
  return geom::scale(v, r / geom::norm(v));
}

}  // namespace

TEST_CASE("green function values") {
  auto c3 = geom::DimensionContext::make(3);
  Vec zero(3, 0.0);
  Vec y = {0.0, 0.0, 0.5};
  // c_3 (1/|y| - 1) = (2-1)/(4 pi)
  CHECK(kernels::green(zero, y, c3) == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-14));
  CHECK(kernels::green(zero, y, c3) == doctest::Approx(0.07957747154594767).epsilon(1e-13));
  // boundary: G -> 0
  Vec eta = {1.0, 0.0, 0.0};
  Vec x = {0.2, 0.3, 0.0};
  CHECK(std::abs(kernels::green(x, eta, c3)) < 1e-14);
  CHECK_THROWS_AS(kernels::green(x, x, c3), SingularityError);
}

TEST_CASE("green symmetry (property)") {
  quad::CounterRng rng(2024);
  for (int n : {3, 5}) {
    auto ctx = geom::DimensionContext::make(n);
    double worst = 0.0;
    for (int i = 0; i < 3000; ++i) {
      Vec x = rand_pt(rng, n, 0.95);
      Vec y = rand_pt(rng, n, 0.95);
      if (geom::norm(geom::sub(x, y)) < 1e-3) continue;
      double g1 = kernels::green(x, y, ctx);
      double g2 = kernels::green(y, x, ctx);
      worst = std::max(worst, std::abs(g1 - g2) / std::abs(g1));
      CHECK(g1 > 0.0);
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("green gradient: hand value and finite differences") {
  auto c3 = geom::DimensionContext::make(3);
  Vec zero(3, 0.0);
  Vec y = {0.5, 0.0, 0.0};
  Vec g = kernels::green_gradient(zero, y, c3);
  CHECK(g[0] == doctest::Approx(3.5 / (4.0 * M_PI)).epsilon(1e-14));
  CHECK(g[0] == doctest::Approx(0.27852115041081354).epsilon(1e-12));
  CHECK(std::abs(g[1]) < 1e-16);

  quad::CounterRng rng(11);
  const double h = 1e-5;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Vec x = rand_pt(rng, 3, 0.9);
    Vec yy = rand_pt(rng, 3, 0.9);
    if (geom::norm(geom::sub(x, yy)) < 0.1) continue;
    Vec grad = kernels::green_gradient(x, yy, c3);
    double gn = geom::norm(grad);
    for (int cidx = 0; cidx < 3; ++cidx) {
      Vec xp = x, xm = x;
      xp[cidx] += h;
      xm[cidx] -= h;
      double fd = (kernels::green(xp, yy, c3) - kernels::green(xm, yy, c3)) / (2 * h);
      worst = std::max(worst, std::abs(fd - grad[cidx]) / gn);
    }
  }
  CHECK(worst < 1e-6);

  // on the boundary both kernel terms coincide
  Vec eta = {0.0, 1.0, 0.0};
  Vec x0 = {0.3, -0.2, 0.1};
  CHECK(geom::norm(kernels::green_gradient(x0, eta, c3)) < 1e-13);
}

TEST_CASE("kernel magnitude at the origin and boundary") {
  auto c3 = geom::DimensionContext::make(3);
  Vec zero(3, 0.0);
  Vec y = {0.0, 0.5, 0.0};
  CHECK(kernels::n_kernel_mag(zero, y, c3) == doctest::Approx(3.5).epsilon(1e-14));
  Vec eta = {0.6, 0.8, 0.0};
  Vec x = {0.1, 0.2, -0.3};
  CHECK(kernels::n_kernel_mag(x, eta, c3) < 1e-13);
  // h kernel at the origin: |y|^{1-n}
  CHECK(kernels::h_kernel_mag(zero, y, c3) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("scaling consistency between gradient and kernel magnitude") {
  quad::CounterRng rng(5150);
  for (int n : {3, 4}) {
    auto ctx = geom::DimensionContext::make(n);
    double worst = 0.0;
    for (int i = 0; i < 3000; ++i) {
      Vec x = rand_pt(rng, n, 0.95);
      Vec y = rand_pt(rng, n, 0.95);
      if (geom::norm(geom::sub(x, y)) < 1e-3) continue;
      double gmag = geom::norm(kernels::green_gradient(x, y, ctx));
      double kmag = kernels::n_kernel_mag(x, y, ctx) / ctx.omega;
      worst = std::max(worst, std::abs(gmag - kmag) / kmag);
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("swapped kernel equals the transposed kernel (property)") {
  quad::CounterRng rng(31);
  auto c4 = geom::DimensionContext::make(4);
  double worst = 0.0, worst_split = -1.0;
  for (int i = 0; i < 10000; ++i) {
    Vec x = rand_pt(rng, 4, 0.95);
    Vec y = rand_pt(rng, 4, 0.95);
    if (geom::norm(geom::sub(x, y)) < 1e-3) continue;
    double h = kernels::h_kernel_mag(x, y, c4);
    double kswap = kernels::n_kernel_mag(y, x, c4);
    worst = std::max(worst, std::abs(h - kswap) / kswap);
    double d = geom::norm(geom::sub(x, y));
    double br = geom::bracket(x, y);
    double K = d * (std::pow(d, -4.0) - std::pow(br, -4.0));
    double L = geom::norm(y) * (1.0 - geom::norm_sq(x)) / std::pow(br, 4.0);
    worst_split = std::max(worst_split, h - (K + L) * (1.0 + 1e-13));
  }
  CHECK(worst < 1e-13);
  CHECK(worst_split <= 1e-13);
}

TEST_CASE("identity chain: substituted kernel magnitude (property)") {
  quad::CounterRng rng(271828);
  for (int n : {3, 4, 5}) {
    auto ctx = geom::DimensionContext::make(n);
    double worst = 0.0;
    int done = 0;
    while (done < 3000) {
      Vec x = rand_pt(rng, n, 0.8);
      Vec z = rand_pt(rng, n, 1.0);
      double zn = geom::norm(z);
      if (zn < 0.05 || zn > 0.95) continue;
      ++done;
      Vec y = geom::moebius(geom::scale(x, -1.0), z);
      double lhs = kernels::n_kernel_mag(x, y, ctx);
      double rhs = kernels::identity_chain_rhs(x, z, ctx);
      worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("boundary vanishing is linear in (1-|y|)") {
  auto c3 = geom::DimensionContext::make(3);
  quad::CounterRng rng(99);
  Vec x = rand_pt(rng, 3, 0.5);
  Vec d = rand_pt(rng, 3, 1.0);
  d = geom::scale(d, 1.0 / geom::norm(d));
  double ratio_prev = 0.0;
  for (int k = 3; k <= 6; ++k) {
    double eps = std::pow(10.0, -k);
    double mag = kernels::n_kernel_mag(x, geom::scale(d, 1.0 - eps), c3);
    double ratio = mag / eps;
    if (k > 3) CHECK(ratio == doctest::Approx(ratio_prev).epsilon(2e-2));
    ratio_prev = ratio;
  }
}

TEST_CASE("poisson kernel") {
  auto c3 = geom::DimensionContext::make(3);
  Vec zero(3, 0.0);
  Vec eta = {0.0, 1.0, 0.0};
  CHECK(kernels::poisson_kernel(zero, eta, c3) == doctest::Approx(1.0));
  Vec x = {0.5, 0.0, 0.0};
  Vec e1 = {1.0, 0.0, 0.0};
  CHECK(kernels::poisson_kernel(x, e1, c3) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(kernels::poisson_kernel(x, eta, c3) > 0.0);
  CHECK_THROWS_AS(kernels::poisson_kernel(e1, eta, c3), std::domain_error);
  Vec not_unit = {0.5, 0.5, 0.0};
  CHECK_THROWS_AS(kernels::poisson_kernel(zero, not_unit, c3), std::domain_error);
}

TEST_CASE("chart kernels match the vector kernels away from the diagonal") {
  auto c3 = geom::DimensionContext::make(3);
  double xr = 0.4;
  Vec x = {xr, 0.0, 0.0};
  for (double s : {0.2, 0.5}) {
    for (double u : {-0.7, 0.1, 0.9}) {
      double su = std::sqrt(1.0 - u * u);
      Vec y = {xr + s * u, s * su, 0.0};
      auto k = kernels::n_kernel_chart(xr, s, u, c3);
      double mag = std::hypot(k.par, k.perp) / std::pow(s, 2);
      CHECK(mag == doctest::Approx(kernels::n_kernel_mag(x, y, c3)).epsilon(1e-12));
      auto h = kernels::h_kernel_chart(xr, s, u, c3);
      double hmag = std::hypot(h.par, h.perp) / std::pow(s, 2);
      CHECK(hmag == doctest::Approx(kernels::h_kernel_mag(x, y, c3)).epsilon(1e-12));
      double g = kernels::green_chart(xr, s, u, c3) / std::pow(s, 2);
      CHECK(g == doctest::Approx(kernels::green(x, y, c3)).epsilon(1e-12));
    }
  }
}
