#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ballgreen/geometry.hpp"
#include "ballgreen/quadrature.hpp"

namespace ballgreen::fields {

using geom::DimensionContext;
using geom::Vec;

// Integrand on the ball (or its boundary sphere). Named analytic forms come
// from a small registry; tabulated samples use inverse-distance weighting
// over the k = 8 nearest neighbors and are flagged approximate in reports.
class ScalarField {
 public:
  enum class Kind { Named, Tabulated };
  enum class Form { Constant, RadialPower, Coordinate, Affine, Indicator };

  // Registry grammar:
  //   "constant:<c>"          f(y) = c
  //   "radial:<alpha>"        f(y) = |y|^alpha
  //   "coord:<i>"             f(y) = y_i           (1-based axis)
  //   "affine:<a>:<b>:<i>"    f(y) = a + b*y_i
  //   "indicator:<r0>"        f(y) = 1 when |y| <= r0
  // plus the shorthands "one" (constant:1) and "zero" (constant:0).
  static ScalarField parse(const std::string& name);

  static ScalarField constant(double c);
  static ScalarField radial_power(double alpha);
  static ScalarField coordinate(int axis_1based);
  static ScalarField affine(double a, double b, int axis_1based);
  static ScalarField indicator(double r0);

  // CSV rows x1,...,xn,value with a mandatory header line; rejects
  // sample points with |x| >= 1.
  static ScalarField tabulated_from_csv(std::istream& in, int dim);

  double operator()(const Vec& y) const;

  Kind kind() const { return kind_; }
  Form form() const { return form_; }
  const std::string& name() const { return name_; }
  bool approximate() const { return kind_ == Kind::Tabulated; }

  // True when f depends on y only through |y|.
  bool radial() const;
  // 0-based symmetry axis when f is axisymmetric about a coordinate axis
  // (radial fields return the supplied default), nullopt otherwise.
  std::optional<int> symmetry_axis(int default_axis = 0) const;
  // Evaluate in axis-adapted coordinates (r = |y|, u = cosine against the
  // symmetry axis); only valid when symmetry_axis() is engaged.
  double eval_axisym(double r, double u) const;

  double const_value() const { return c0_; }
  double alpha() const { return alpha_; }

 private:
  ScalarField() = default;
  Kind kind_ = Kind::Named;
  Form form_ = Form::Constant;
  std::string name_ = "constant:0";
  double c0_ = 0.0;     // constant term
  double c1_ = 0.0;     // affine slope
  double alpha_ = 0.0;  // radial exponent
  double r0_ = 0.0;     // indicator radius
  int axis_ = 0;        // 0-based
  std::vector<Vec> pts_;
  std::vector<double> vals_;
};

// Integral of f over B^n using the requested scheme. Reduced-polar requires
// an axisymmetric field (SchemeMismatchError otherwise); Monte Carlo uses the
// counter RNG from the spec seed.
double ball_integrate(const ScalarField& f, const quad::QuadratureSpec& spec,
                      const DimensionContext& ctx);

// || f ||_p over the ball (p >= 1) for named fields, computed by
// reduced-polar quadrature (closed forms where trivial).
double field_lp_norm(const ScalarField& f, double p, const quad::QuadratureSpec& spec,
                     const DimensionContext& ctx);

}  // namespace ballgreen::fields
