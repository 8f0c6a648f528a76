#include <doctest.h>

#include <cmath>
#include <limits>

#include "ballgreen/errors.hpp"
#include "ballgreen/fields.hpp"
#include "ballgreen/operators.hpp"
#include <sstream>

using namespace ballgreen;
using fields::ScalarField;
using geom::Vec;

namespace {
const quad::QuadratureSpec kSpec;
}

TEST_CASE("green potential: manufactured solution") {
  auto c3 = geom::DimensionContext::make(3);
  auto one = ScalarField::constant(1.0);
  Vec zero(3, 0.0);
  CHECK(ops::green_potential(one, zero, kSpec, c3).value ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-10));
  // scaled: g = 2n gives potential 1 - |x|^2, value 0.75 at |x| = 1/2
  auto g6 = ScalarField::constant(6.0);
  Vec xh = {0.5, 0.0, 0.0};
  CHECK(ops::green_potential(g6, xh, kSpec, c3).value ==
        doctest::Approx(0.75).epsilon(1e-9));
  auto zerof = ScalarField::constant(0.0);
  CHECK(ops::green_potential(zerof, xh, kSpec, c3).value == doctest::Approx(0.0));
  // radii sweep at n = 4
  auto c4 = geom::DimensionContext::make(4);
  for (double r : {0.0, 0.4, 0.8}) {
    Vec x(4, 0.0);
    x[0] = r;
    CHECK(ops::green_potential(one, x, kSpec, c4).value ==
          doctest::Approx((1.0 - r * r) / 8.0).epsilon(1e-9));
  }
}

TEST_CASE("green potential: monte carlo split scheme agrees") {
  auto c3 = geom::DimensionContext::make(3);
  auto one = ScalarField::constant(1.0);
  quad::QuadratureSpec mc = kSpec;
  mc.scheme = quad::Scheme::MonteCarlo;
  mc.mc_samples = 200000;
  Vec x = {0.3, 0.0, 0.0};
  auto est = ops::green_potential(one, x, mc, c3);
  double expect = (1.0 - 0.09) / 6.0;
  CHECK(std::abs(est.value - expect) <= std::max(3.0 * est.estimated_error, 2e-3));
  CHECK(est.estimated_error > 0.0);
}

TEST_CASE("gradient operator: closed forms and symmetry") {
  auto c3 = geom::DimensionContext::make(3);
  auto one = ScalarField::constant(1.0);
  Vec x = {0.3, 0.0, 0.0};
  auto v = ops::grad_operator(one, x, kSpec, c3);
  CHECK(v.value[0] == doctest::Approx(0.1).epsilon(1e-7));
  CHECK(std::abs(v.value[1]) < 1e-12);
  // radial operand at the origin: zero vector by odd symmetry
  auto rad = ScalarField::radial_power(2.0);
  Vec zero(3, 0.0);
  auto v0 = ops::grad_operator(rad, zero, kSpec, c3);
  CHECK(geom::norm(v0.value) < 1e-10);
  // g = 2n: gradient 2x
  auto g6 = ScalarField::constant(6.0);
  Vec x2 = {0.0, 0.45, 0.0};
  auto v2 = ops::grad_operator(g6, x2, kSpec, c3);
  CHECK(v2.value[1] == doctest::Approx(0.9).epsilon(1e-7));
}

TEST_CASE("gradient operator: non-aligned coordinate field (full chart)") {
  auto c3 = geom::DimensionContext::make(3);
  auto y1 = ScalarField::coordinate(1);
  Vec x = {0.2, 0.3, -0.1};
  auto v = ops::grad_operator(y1, x, kSpec, c3);
  // cross-check against finite differences of the potential
  const double h = 1e-4;
  for (int c = 0; c < 3; ++c) {
    Vec xp = x, xm = x;
    xp[c] += h;
    xm[c] -= h;
    double fd = -(ops::green_potential(y1, xp, kSpec, c3).value -
                  ops::green_potential(y1, xm, kSpec, c3).value) /
                (2.0 * h);
    CHECK(v.value[c] == doctest::Approx(fd).epsilon(5e-4));
  }
}

TEST_CASE("abs operator: origin closed forms and conventions") {
  auto c3 = geom::DimensionContext::make(3);
  auto one = ScalarField::constant(1.0);
  Vec zero(3, 0.0);
  CHECK(ops::abs_operator(one, zero, kSpec, c3, ops::NormConvention::Sigma).value ==
        doctest::Approx(0.75).epsilon(1e-9));
  CHECK(ops::abs_operator(one, zero, kSpec, c3, ops::NormConvention::Unit).value ==
        doctest::Approx(3.0 * M_PI).epsilon(1e-9));
  auto zf = ScalarField::constant(0.0);
  CHECK(ops::abs_operator(zf, zero, kSpec, c3, ops::NormConvention::Unit).value == 0.0);
  // monotonicity and linearity
  Vec x = {0.2, 0.0, 0.0};
  double a = ops::abs_operator(one, x, kSpec, c3, ops::NormConvention::Sigma).value;
  auto two = ScalarField::constant(2.0);
  double b = ops::abs_operator(two, x, kSpec, c3, ops::NormConvention::Sigma).value;
  CHECK(b == doctest::Approx(2.0 * a).epsilon(1e-12));
  CHECK(a > 0.0);
}

TEST_CASE("h operator value at the origin") {
  auto one = ScalarField::constant(1.0);
  for (int n : {3, 4}) {
    auto ctx = geom::DimensionContext::make(n);
    Vec zero(n, 0.0);
    CHECK(ops::h_operator(one, zero, kSpec, ctx).value ==
          doctest::Approx(1.0 / (n - 2.0)).epsilon(1e-8));
  }
}

TEST_CASE("pointwise domination of the gradient by the abs operator") {
  auto c3 = geom::DimensionContext::make(3);
  auto one = ScalarField::constant(1.0);
  for (double r : {0.0, 0.35, 0.7}) {
    Vec x = {r, 0.0, 0.0};
    double lhs = geom::norm(ops::grad_operator(one, x, kSpec, c3).value);
    double rhs =
        ops::abs_operator(one, x, kSpec, c3, ops::NormConvention::Sigma).value;
    CHECK(lhs <= rhs * (1.0 + 1e-9));
  }
}

TEST_CASE("riesz potential closed forms") {
  auto c3 = geom::DimensionContext::make(3);
  auto one = ScalarField::constant(1.0);
  Vec zero(3, 0.0);
  Vec x = {0.3, 0.2, 0.0};
  // mu = 1: exponent zero, the ball volume at every x
  CHECK(ops::riesz_potential(one, 1.0, zero, kSpec, c3).value ==
        doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));
  CHECK(ops::riesz_potential(one, 1.0, x, kSpec, c3).value ==
        doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-10));
  // mu = 1/2 at the origin: omega/(n mu) = 8 pi / 3
  CHECK(ops::riesz_potential(one, 0.5, zero, kSpec, c3).value ==
        doctest::Approx(8.0 * M_PI / 3.0).epsilon(1e-9));
  auto zf = ScalarField::constant(0.0);
  CHECK(ops::riesz_potential(zf, 0.5, x, kSpec, c3).value == doctest::Approx(0.0));
  CHECK_THROWS_AS(ops::riesz_potential(one, 1.5, x, kSpec, c3), std::domain_error);
}

TEST_CASE("riesz bound check") {
  auto c3 = geom::DimensionContext::make(3);
  auto one = ScalarField::constant(1.0);
  // p = q = 1, mu = 1: both sides in closed form, finite slack
  ops::RieszParams prm{1.0, 1.0, 1.0};
  auto out = ops::riesz_bound_check(one, prm, kSpec, c3);
  CHECK(out.passed);
  CHECK(out.lhs <= out.rhs);
  // |y| operand, L2 -> L2
  auto rad = ScalarField::radial_power(1.0);
  ops::RieszParams prm2{0.75, 2.0, 2.0};
  CHECK(ops::riesz_bound_check(rad, prm2, kSpec, c3).passed);
  // affine operand with an infinite target exponent
  auto aff = ScalarField::affine(1.0, 1.0, 1);
  ops::RieszParams prm3{0.5, 4.0, std::numeric_limits<double>::infinity()};
  CHECK(ops::riesz_bound_check(aff, prm3, kSpec, c3).passed);
  // hypothesis violation: delta >= mu
  ops::RieszParams bad{0.25, 1.0, std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(ops::riesz_bound_check(one, bad, kSpec, c3), std::domain_error);
}

TEST_CASE("poisson extension") {
  auto c3 = geom::DimensionContext::make(3);
  auto one = ScalarField::constant(1.0);
  for (double r : {0.3, 0.6, 0.9}) {
    Vec x = {0.0, r, 0.0};
    CHECK(ops::poisson_extension(one, x, kSpec, c3).value ==
          doctest::Approx(1.0).epsilon(1e-7));
  }
  // harmonic extension of eta_1 is x_1
  auto lin = ScalarField::coordinate(1);
  Vec x4 = {0.4, 0.0, 0.0};
  CHECK(ops::poisson_extension(lin, x4, kSpec, c3).value ==
        doctest::Approx(0.4).epsilon(1e-6));
  // at the center: spherical average (zero for odd data)
  Vec zero(3, 0.0);
  CHECK(std::abs(ops::poisson_extension(lin, zero, kSpec, c3).value) < 1e-10);
  // non-aligned evaluation point exercises the 2-D sphere rule
  Vec xg = {0.1, 0.25, 0.2};
  double expect = xg[0];
  CHECK(ops::poisson_extension(lin, xg, kSpec, c3).value ==
        doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("tabulated field ingestion") {
  std::stringstream csv(
      "x1,x2,x3,value\n"
      "0.1,0.0,0.0,1.0\n"
      "0.0,0.1,0.0,2.0\n"
      "0.0,0.0,0.1,3.0\n"
      "0.2,0.2,0.0,4.0\n");
  auto f = fields::ScalarField::tabulated_from_csv(csv, 3);
  CHECK(f.approximate());
  CHECK(f(Vec{0.1, 0.0, 0.0}) == doctest::Approx(1.0));
  double mid = f(Vec{0.05, 0.05, 0.0});
  CHECK(mid > 1.0);
  CHECK(mid < 4.0);

  std::stringstream bad("x1,x2,x3,value\n1.5,0.0,0.0,1.0\n");
  CHECK_THROWS_AS(fields::ScalarField::tabulated_from_csv(bad, 3), std::invalid_argument);
  std::stringstream empty("");
  CHECK_THROWS_AS(fields::ScalarField::tabulated_from_csv(empty, 3), std::invalid_argument);
  std::stringstream shortrow("x1,x2,x3,value\n0.1,0.0,1.0\n");
  CHECK_THROWS_AS(fields::ScalarField::tabulated_from_csv(shortrow, 3),
                  std::invalid_argument);
}

TEST_CASE("field registry grammar") {
  auto f1 = ScalarField::parse("constant:2.5");
  CHECK(f1(Vec{0.1, 0.2, 0.0}) == 2.5);
  auto f2 = ScalarField::parse("radial:2");
  CHECK(f2(Vec{0.3, 0.4, 0.0}) == doctest::Approx(0.25));
  auto f3 = ScalarField::parse("coord:2");
  CHECK(f3(Vec{0.3, 0.4, 0.0}) == doctest::Approx(0.4));
  auto f4 = ScalarField::parse("affine:1:2:1");
  CHECK(f4(Vec{0.3, 0.0, 0.0}) == doctest::Approx(1.6));
  auto f5 = ScalarField::parse("indicator:0.5");
  CHECK(f5(Vec{0.3, 0.0, 0.0}) == 1.0);
  CHECK(f5(Vec{0.6, 0.0, 0.0}) == 0.0);
  CHECK(ScalarField::parse("one")(Vec{0.0, 0.0, 0.0}) == 1.0);
  CHECK_THROWS_AS(ScalarField::parse("mystery:1"), std::invalid_argument);
}
