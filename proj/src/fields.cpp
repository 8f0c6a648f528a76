#include "ballgreen/fields.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "ballgreen/errors.hpp"

namespace ballgreen::fields {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number: '" + s + "'");
  return v;
}

}  // namespace

ScalarField ScalarField::constant(double c) {
  ScalarField f;
  f.form_ = Form::Constant;
  f.c0_ = c;
  f.name_ = "constant:" + std::to_string(c);
  return f;
}

ScalarField ScalarField::radial_power(double alpha) {
  ScalarField f;
  f.form_ = Form::RadialPower;
  f.alpha_ = alpha;
  f.name_ = "radial:" + std::to_string(alpha);
  return f;
}

ScalarField ScalarField::coordinate(int axis_1based) {
  if (axis_1based < 1) throw std::invalid_argument("coordinate axis must be >= 1");
  ScalarField f;
  f.form_ = Form::Coordinate;
  f.axis_ = axis_1based - 1;
  f.c1_ = 1.0;
  f.name_ = "coord:" + std::to_string(axis_1based);
  return f;
}

ScalarField ScalarField::affine(double a, double b, int axis_1based) {
  if (axis_1based < 1) throw std::invalid_argument("affine axis must be >= 1");
  ScalarField f;
  f.form_ = Form::Affine;
  f.c0_ = a;
  f.c1_ = b;
  f.axis_ = axis_1based - 1;
  f.name_ = "affine:" + std::to_string(a) + ":" + std::to_string(b) + ":" +
            std::to_string(axis_1based);
  return f;
}

ScalarField ScalarField::indicator(double r0) {
  if (!(r0 > 0.0)) throw std::invalid_argument("indicator radius must be > 0");
  ScalarField f;
  f.form_ = Form::Indicator;
  f.r0_ = r0;
  f.name_ = "indicator:" + std::to_string(r0);
  return f;
}

ScalarField ScalarField::parse(const std::string& name) {
  if (name == "one") return constant(1.0);
  if (name == "zero") return constant(0.0);
  auto parts = split(name, ':');
  if (parts.empty()) throw std::invalid_argument("empty field name");
  const std::string& head = parts[0];
  if (head == "constant" && parts.size() == 2) return constant(to_double(parts[1]));
  if (head == "radial" && parts.size() == 2) return radial_power(to_double(parts[1]));
  if (head == "coord" && parts.size() == 2) return coordinate(std::stoi(parts[1]));
  if (head == "affine" && parts.size() == 4)
    return affine(to_double(parts[1]), to_double(parts[2]), std::stoi(parts[3]));
  if (head == "indicator" && parts.size() == 2) return indicator(to_double(parts[1]));
  throw std::invalid_argument("unknown field spec: '" + name + "'");
}

ScalarField ScalarField::tabulated_from_csv(std::istream& in, int dim) {
  ScalarField f;
  f.kind_ = Kind::Tabulated;
  f.name_ = "tabulated";
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("tabulated field: missing header line");
  // header is required but its labels are not interpreted
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto cols = split(line, ',');
    if (static_cast<int>(cols.size()) != dim + 1)
      throw std::invalid_argument("tabulated field: line " + std::to_string(lineno) +
                                  " has " + std::to_string(cols.size()) +
                                  " columns, expected " + std::to_string(dim + 1));
    Vec x(dim);
    for (int i = 0; i < dim; ++i) x[i] = to_double(cols[i]);
    if (geom::norm(x) >= 1.0)
      throw std::invalid_argument("tabulated field: line " + std::to_string(lineno) +
                                  " lies outside the open unit ball");
    f.pts_.push_back(std::move(x));
    f.vals_.push_back(to_double(cols[dim]));
  }
  if (f.pts_.empty()) throw std::invalid_argument("tabulated field: no samples");
  return f;
}

double ScalarField::operator()(const Vec& y) const {
  if (kind_ == Kind::Tabulated) {
    // inverse-distance weighting over the k = 8 nearest samples
    const std::size_t k = std::min<std::size_t>(8, pts_.size());
    std::vector<std::pair<double, std::size_t>> d(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i)
      d[i] = {geom::norm(geom::sub(y, pts_[i])), i};
    std::partial_sort(d.begin(), d.begin() + k, d.end());
    if (d[0].first < 1e-14) return vals_[d[0].second];
    double wsum = 0.0, vsum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      double w = 1.0 / d[j].first;
      wsum += w;
      vsum += w * vals_[d[j].second];
    }
    return vsum / wsum;
  }
  switch (form_) {
    case Form::Constant: return c0_;
    case Form::RadialPower: return std::pow(geom::norm(y), alpha_);
    case Form::Coordinate: return c1_ * y[axis_];
    case Form::Affine: return c0_ + c1_ * y[axis_];
    case Form::Indicator: return geom::norm(y) <= r0_ ? 1.0 : 0.0;
  }
  return 0.0;
}

bool ScalarField::radial() const {
  if (kind_ == Kind::Tabulated) return false;
  return form_ == Form::Constant || form_ == Form::RadialPower ||
         form_ == Form::Indicator;
}

std::optional<int> ScalarField::symmetry_axis(int default_axis) const {
  if (kind_ == Kind::Tabulated) return std::nullopt;
  if (radial()) return default_axis;
  return axis_;
}

double ScalarField::eval_axisym(double r, double u) const {
  switch (form_) {
    case Form::Constant: return c0_;
    case Form::RadialPower: return std::pow(r, alpha_);
    case Form::Coordinate: return c1_ * r * u;
    case Form::Affine: return c0_ + c1_ * r * u;
    case Form::Indicator: return r <= r0_ ? 1.0 : 0.0;
  }
  throw SchemeMismatchError("eval_axisym on a non-axisymmetric field");
}

double ball_integrate(const ScalarField& f, const quad::QuadratureSpec& spec,
                      const DimensionContext& ctx) {
  spec.validate();
  switch (spec.scheme) {
    case quad::Scheme::ReducedPolar: {
      if (!f.symmetry_axis().has_value())
        throw SchemeMismatchError(
            "reduced-polar quadrature requires an axisymmetric field");
      return quad::reduced_polar_integrate(
          [&](double r, double u) { return f.eval_axisym(r, u); }, spec, ctx);
    }
    case quad::Scheme::MonteCarlo: {
      auto pts = quad::ball_sample(spec.mc_samples, spec.seed, ctx);
      std::vector<double> vals(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = f(pts[i]);
      double volume = ctx.omega / ctx.n;
      return volume * quad::pairwise_sum(vals) / static_cast<double>(pts.size());
    }
    case quad::Scheme::SingularitySplit:
      throw SchemeMismatchError(
          "singularity-split applies to operator evaluations, not plain fields");
  }
  return 0.0;
}

double field_lp_norm(const ScalarField& f, double p, const quad::QuadratureSpec& spec,
                     const DimensionContext& ctx) {
  if (!(p >= 1.0)) throw std::domain_error("field_lp_norm requires p >= 1");
  if (!f.symmetry_axis().has_value())
    throw SchemeMismatchError("field_lp_norm: named axisymmetric fields only");
  quad::QuadratureSpec s = spec;
  s.scheme = quad::Scheme::ReducedPolar;
  double ip = quad::reduced_polar_integrate(
      [&](double r, double u) { return std::pow(std::abs(f.eval_axisym(r, u)), p); },
      s, ctx);
  return std::pow(ip, 1.0 / p);
}

}  // namespace ballgreen::fields
