#include <doctest.h>

#include <cmath>
#include <limits>

#include "ballgreen/normcalc.hpp"
#include "ballgreen/specfun.hpp"
#include "ballgreen/errors.hpp"

using namespace ballgreen;
using norms::KMethod;

namespace {
const quad::QuadratureSpec kSpec;
}

TEST_CASE("kernel integral at the origin hits the closed-form constants") {
  // 2 n pi^{n/2} / ((n+1) Gamma(n/2)): 3pi, 8pi^2/5, 20pi^2/9
  struct Row {
    int n;
    double target;
  } rows[] = {{3, 3.0 * M_PI},
              {4, 8.0 * M_PI * M_PI / 5.0},
              {5, 20.0 * M_PI * M_PI / 9.0}};
  for (auto [n, target] : rows) {
    auto ctx = geom::DimensionContext::make(n);
    double k0 = norms::kernel_integral_K(0.0, KMethod::Direct, kSpec, ctx);
    CHECK(k0 == doctest::Approx(target).epsilon(1e-9));
    CHECK(norms::series_a0(n) == doctest::Approx(target).epsilon(1e-13));
  }
}

TEST_CASE("direct and moebius-reduced kernel integrals agree") {
  for (int n : {3, 4}) {
    auto ctx = geom::DimensionContext::make(n);
    for (double r : {0.0, 0.3, 0.5, 0.8, 0.9}) {
      double d = norms::kernel_integral_K(r, KMethod::Direct, kSpec, ctx);
      double m = norms::kernel_integral_K(r, KMethod::MoebiusReduced, kSpec, ctx);
      CHECK(m == doctest::Approx(d).epsilon(1e-7));
      CHECK(d <= norms::kernel_integral_K(0.0, KMethod::Direct, kSpec, ctx) * (1 + 1e-9));
    }
  }
  // frozen reference computed with an independent high-order rule
  auto c3 = geom::DimensionContext::make(3);
  CHECK(norms::kernel_integral_K(0.5, KMethod::Direct, kSpec, c3) ==
        doctest::Approx(8.3764978878).epsilon(1e-9));
}

TEST_CASE("swapped kernel integral: value at zero and decay") {
  for (int n : {3, 5}) {
    auto ctx = geom::DimensionContext::make(n);
    double ks0 = norms::kernel_integral_Kswap(0.0, KMethod::Direct, kSpec, ctx);
    CHECK(ks0 == doctest::Approx(ctx.omega).epsilon(1e-9));
    double ks6 = norms::kernel_integral_Kswap(0.6, KMethod::Direct, kSpec, ctx);
    CHECK(ks6 <= ctx.omega * (1.0 + 1e-9));
    CHECK(ks6 == doctest::Approx(norms::kernel_integral_Kswap(
                     0.6, KMethod::MoebiusReduced, kSpec, ctx))
                     .epsilon(1e-7));
  }
  auto c3 = geom::DimensionContext::make(3);
  CHECK(norms::kernel_integral_Kswap(0.6, KMethod::Direct, kSpec, c3) ==
        doctest::Approx(9.5610396635).epsilon(1e-9));
}

TEST_CASE("sphere integral reduction") {
  for (int n : {3, 4, 5}) {
    auto ctx = geom::DimensionContext::make(n);
    CHECK(norms::sphere_integral_reduced(n + 1.0, 0.0, 0.7, ctx) ==
          doctest::Approx(ctx.omega).epsilon(1e-13));
    for (double rho : {0.4, 0.9}) {
      double red = norms::sphere_integral_reduced(n + 1.0, rho, 1.0, ctx);
      double dir = norms::sphere_integral_direct(n + 1.0, rho, ctx, 1e-12);
      CHECK(red == doctest::Approx(dir).epsilon(1e-9));
    }
  }
}

TEST_CASE("series coefficients: signs, majorant chain, limits") {
  for (int n : {3, 7}) {
    auto sc = norms::SeriesCoefficients::compute(n, 200);
    double prev = 0.0;
    for (int m = 1; m <= 200; ++m) {
      CHECK(sc.a[m - 1] < 0.0);
      CHECK(sc.e[m - 1] >= 0.0);
      CHECK((sc.b[m - 1] < 1.0) == (sc.a[m - 1] < 0.0));
      CHECK(sc.b[m - 1] <= sc.c[m - 1] * (1.0 + 1e-12));
      CHECK(sc.c[m - 1] >= prev * (1.0 - 1e-12));
      CHECK(sc.c[m - 1] <= sc.c_limit * (1.0 + 1e-12));
      prev = sc.c[m - 1];
    }
    CHECK(sc.c_limit < 1.0);
  }
  CHECK(norms::majorant_c_limit(3) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(norms::majorant_c_limit(4) == doctest::Approx(3.0 * M_PI / 16.0).epsilon(1e-13));
  // frozen values from the 40-digit oracle
  CHECK(norms::coefficient_a(3, 1) == doctest::Approx(-3.83972435439).epsilon(1e-10));
  CHECK(norms::coefficient_a(4, 5) == doctest::Approx(-0.199501979499).epsilon(1e-10));
  CHECK(norms::coefficient_e(3, 5) == doctest::Approx(0.0220057720058).epsilon(1e-10));
  CHECK(norms::coefficient_e(5, 20) == doctest::Approx(0.00204621637949).epsilon(1e-10));
}

TEST_CASE("majorant series equals its defining integral") {
  for (int n : {3, 4, 5}) {
    auto ctx = geom::DimensionContext::make(n);
    for (double r : {0.0, 0.5, 0.9}) {
      double s = norms::series_J_theorem(r, 200, ctx);
      double integral = norms::series_J_theorem_integral(r, ctx, 1e-10);
      CHECK(s == doctest::Approx(integral).epsilon(1e-8));
    }
  }
  // frozen oracle values (40-digit prototype): C_n J(x)
  auto c3 = geom::DimensionContext::make(3);
  CHECK(norms::series_J_theorem(0.5, 300, c3) ==
        doctest::Approx(8.41882487173).epsilon(1e-9));
  auto c4 = geom::DimensionContext::make(4);
  CHECK(norms::series_J_theorem(0.9, 400, c4) ==
        doctest::Approx(8.14072531078).epsilon(1e-9));
}

TEST_CASE("lemma series, L closed form and quadrature routes") {
  for (int n : {3, 4}) {
    auto ctx = geom::DimensionContext::make(n);
    CHECK(norms::series_J_lemma(0.0, 60, ctx) ==
          doctest::Approx(n / (n + 1.0)).epsilon(1e-14));
    for (double r : {0.5, 0.9}) {
      double s = norms::series_J_lemma(r, 300, ctx);
      double integral = norms::series_J_lemma_integral(r, ctx, 1e-10);
      CHECK(s == doctest::Approx(integral).epsilon(1e-8));
    }
    CHECK(norms::L_closed_form(0.0, ctx) ==
          doctest::Approx(ctx.omega / (n + 1.0)).epsilon(1e-13));
    for (double r : {0.0, 0.5}) {
      double lc = norms::L_closed_form(r, ctx);
      CHECK(norms::L_series(r, 400, ctx) == doctest::Approx(lc).epsilon(1e-10));
      CHECK(norms::L_quadrature(r, kSpec, ctx) == doctest::Approx(lc).epsilon(1e-8));
    }
  }
  // frozen: J_lemma(0.5) n=3 and L(0.5) n=3 from the oracle
  auto c3 = geom::DimensionContext::make(3);
  CHECK(norms::series_J_lemma(0.5, 300, c3) ==
        doctest::Approx(0.638072042961).epsilon(1e-9));
  CHECK(norms::L_closed_form(0.5, c3) == doctest::Approx(2.84116132768).epsilon(1e-10));
}

TEST_CASE("norm reports") {
  auto c3 = geom::DimensionContext::make(3);
  auto grid = norms::default_radii_grid();
  auto inf_unit = norms::norm_inf_estimate(c3, kSpec, ops::NormConvention::Unit, grid);
  CHECK(inf_unit.value == doctest::Approx(3.0 * M_PI).epsilon(1e-7));
  CHECK(inf_unit.argmax_radius == 0.0);
  auto inf_sigma = norms::norm_inf_estimate(c3, kSpec, ops::NormConvention::Sigma, grid);
  CHECK(inf_sigma.value == doctest::Approx(0.75).epsilon(1e-7));
  CHECK(inf_sigma.argmax_radius == 0.0);

  auto l1_green =
      norms::norm_l1_estimate(c3, kSpec, ops::NormConvention::Green, grid, false);
  CHECK(l1_green.value == doctest::Approx(1.0).epsilon(1e-7));
  auto l1_unit =
      norms::norm_l1_estimate(c3, kSpec, ops::NormConvention::Unit, grid, false);
  CHECK(l1_unit.value == doctest::Approx(4.0 * M_PI).epsilon(1e-7));

  auto c5 = geom::DimensionContext::make(5);
  auto inf5 = norms::norm_inf_estimate(c5, kSpec, ops::NormConvention::Unit,
                                       {0.0, 0.3, 0.6});
  CHECK(inf5.value == doctest::Approx(20.0 * M_PI * M_PI / 9.0).epsilon(1e-7));

  CHECK_THROWS_AS(
      norms::norm_inf_estimate(c3, kSpec, ops::NormConvention::Unit, {0.3, 0.6}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      norms::norm_inf_estimate(c3, kSpec, ops::NormConvention::Unit, {}),
      std::invalid_argument);
}

TEST_CASE("interpolation bound") {
  auto c3 = geom::DimensionContext::make(3);
  double b2 = norms::interpolation_bound(2.0, c3, kSpec, ops::NormConvention::Sigma);
  CHECK(b2 == doctest::Approx(std::sqrt(0.75)).epsilon(1e-7));
  CHECK(norms::interpolation_bound(1.0, c3, kSpec, ops::NormConvention::Sigma) ==
        doctest::Approx(1.0).epsilon(1e-7));
  CHECK(norms::interpolation_bound(std::numeric_limits<double>::infinity(), c3, kSpec,
                                   ops::NormConvention::Sigma) ==
        doctest::Approx(0.75).epsilon(1e-7));
  // p -> 1 and p -> infinity continuity
  CHECK(norms::interpolation_bound(1.0 + 1e-9, c3, kSpec, ops::NormConvention::Sigma) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(norms::interpolation_bound(1e9, c3, kSpec, ops::NormConvention::Sigma) ==
        doctest::Approx(0.75).epsilon(1e-6));
  CHECK_THROWS_AS(norms::interpolation_bound(0.5, c3, kSpec, ops::NormConvention::Sigma),
                  std::domain_error);
}

TEST_CASE("discretized operator matrix (coarse grid smoke)") {
  auto c3 = geom::DimensionContext::make(3);
  auto d = norms::discretized_operator_norms(c3, 9, ops::NormConvention::Sigma);
  CHECK(d.cells > 300);
  CHECK(d.norm1_B == d.norminf_of_B_transpose);  // exact duality
  CHECK(d.norminf_M == doctest::Approx(0.75).epsilon(0.08));
  CHECK(d.norm1_B == doctest::Approx(1.0).epsilon(0.08));
  CHECK(d.spectral_sym <= std::sqrt(0.75) * 1.06);
  auto c4 = geom::DimensionContext::make(4);
  CHECK_THROWS_AS(norms::discretized_operator_norms(c4, 9, ops::NormConvention::Sigma),
                  SchemeMismatchError);
}
