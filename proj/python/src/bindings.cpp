#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ballgreen/conjecture.hpp"
#include "ballgreen/fields.hpp"
#include "ballgreen/geometry.hpp"
#include "ballgreen/kernels.hpp"
#include "ballgreen/normcalc.hpp"
#include "ballgreen/operators.hpp"
#include "ballgreen/quadrature.hpp"
#include "ballgreen/specfun.hpp"
#include "ballgreen/verify.hpp"

namespace py = pybind11;
using namespace ballgreen;

namespace {

quad::QuadratureSpec make_spec(const std::string& scheme, int radial_nodes,
                               int angular_nodes, long mc_samples, std::uint64_t seed,
                               double split_radius) {
  quad::QuadratureSpec s;
  s.scheme = quad::scheme_from_name(scheme);
  s.radial_nodes = radial_nodes;
  s.angular_nodes = angular_nodes;
  s.mc_samples = mc_samples;
  s.seed = seed;
  s.split_radius = split_radius;
  s.validate();
  return s;
}

py::dict norm_report_dict(const norms::NormReport& r) {
  py::dict d;
  d["op"] = r.op;
  d["convention"] = ops::convention_name(r.convention);
  d["prefactor"] = r.prefactor;
  d["value"] = r.value;
  d["argmax_radius"] = r.argmax_radius;
  d["radii"] = r.radii;
  d["values"] = r.values;
  d["closed_form_target"] = r.closed_form_target;
  d["method"] = r.method;
  if (r.has_matrix) {
    py::dict m;
    m["cells"] = r.matrix_cells;
    m["norm1"] = r.matrix_norm1;
    m["norminf_of_transpose"] = r.matrix_norminf_of_transpose;
    m["norminf"] = r.matrix_norminf;
    m["spectral_sym"] = r.matrix_spectral_sym;
    d["matrix"] = m;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Green-potential operator norms on the unit ball";

  py::class_<geom::DimensionContext>(m, "DimensionContext")
      .def(py::init(&geom::DimensionContext::make), py::arg("n"))
      .def_readonly("n", &geom::DimensionContext::n)
      .def_readonly("omega", &geom::DimensionContext::omega)
      .def_readonly("c_n", &geom::DimensionContext::c_n);

  py::class_<quad::QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init(&make_spec), py::arg("scheme") = "reduced-polar",
           py::arg("radial_nodes") = 96, py::arg("angular_nodes") = 96,
           py::arg("mc_samples") = 200000, py::arg("seed") = 20240817ULL,
           py::arg("split_radius") = 0.1)
      .def_readwrite("radial_nodes", &quad::QuadratureSpec::radial_nodes)
      .def_readwrite("angular_nodes", &quad::QuadratureSpec::angular_nodes)
      .def_readwrite("mc_samples", &quad::QuadratureSpec::mc_samples)
      .def_readwrite("seed", &quad::QuadratureSpec::seed)
      .def_readwrite("split_radius", &quad::QuadratureSpec::split_radius);

  py::class_<fields::ScalarField>(m, "ScalarField")
      .def_static("parse", &fields::ScalarField::parse, py::arg("name"))
      .def("__call__",
           [](const fields::ScalarField& f, const geom::Vec& y) { return f(y); });

  // special functions
  m.def("gamma_fn", &specfun::gamma_fn, py::arg("x"));
  m.def("lgamma_fn", &specfun::lgamma_fn, py::arg("x"));
  m.def("beta_fn", &specfun::beta_fn, py::arg("a"), py::arg("b"));
  m.def("pochhammer", &specfun::pochhammer, py::arg("a"), py::arg("k"));
  m.def(
      "gauss_2f1",
      [](double a, double b, double c, double t) { return specfun::gauss_2f1(a, b, c, t); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t"));
  m.def(
      "angular_integral",
      [](double mu, double nu, double r) {
        return specfun::angular_integral({mu, nu, r});
      },
      py::arg("mu"), py::arg("nu"), py::arg("r"));
  m.def(
      "gamma_inequality_holds",
      [](double mm, double pp, double kk) {
        auto r = specfun::gamma_inequality_holds({mm, pp, kk});
        return py::make_tuple(r.sign_nonneg, r.product_ge);
      },
      py::arg("m"), py::arg("p"), py::arg("k"));

  // geometry
  m.def("bracket", &geom::bracket, py::arg("x"), py::arg("y"));
  m.def("moebius", &geom::moebius, py::arg("x"), py::arg("y"));
  m.def("moebius_jacobian", &geom::moebius_jacobian, py::arg("x"), py::arg("z"));
  m.def("sphere_area", &geom::sphere_area_dim, py::arg("n"));
  m.def("sphere_sample", &quad::sphere_sample, py::arg("count"), py::arg("seed"),
        py::arg("ctx"));
  m.def("ball_sample", &quad::ball_sample, py::arg("count"), py::arg("seed"),
        py::arg("ctx"));

  // kernels
  m.def(
      "green",
      [](const geom::Vec& x, const geom::Vec& y, const geom::DimensionContext& ctx) {
        return kernels::green(x, y, ctx);
      },
      py::arg("x"), py::arg("y"), py::arg("ctx"));
  m.def(
      "green_gradient",
      [](const geom::Vec& x, const geom::Vec& y, const geom::DimensionContext& ctx) {
        return kernels::green_gradient(x, y, ctx);
      },
      py::arg("x"), py::arg("y"), py::arg("ctx"));
  m.def(
      "n_kernel_mag",
      [](const geom::Vec& x, const geom::Vec& y, const geom::DimensionContext& ctx) {
        return kernels::n_kernel_mag(x, y, ctx);
      },
      py::arg("x"), py::arg("y"), py::arg("ctx"));
  m.def("h_kernel_mag", &kernels::h_kernel_mag, py::arg("x"), py::arg("y"), py::arg("ctx"));
  m.def("poisson_kernel", &kernels::poisson_kernel, py::arg("x"), py::arg("eta"),
        py::arg("ctx"));

  // operators
  m.def(
      "green_potential",
      [](const fields::ScalarField& g, const geom::Vec& x,
         const quad::QuadratureSpec& spec, const geom::DimensionContext& ctx) {
        auto v = ops::green_potential(g, x, spec, ctx);
        return py::make_tuple(v.value, v.estimated_error);
      },
      py::arg("g"), py::arg("x"), py::arg("spec"), py::arg("ctx"));
  m.def(
      "grad_operator",
      [](const fields::ScalarField& g, const geom::Vec& x,
         const quad::QuadratureSpec& spec, const geom::DimensionContext& ctx) {
        auto v = ops::grad_operator(g, x, spec, ctx);
        return py::make_tuple(v.value, v.estimated_error);
      },
      py::arg("g"), py::arg("x"), py::arg("spec"), py::arg("ctx"));
  m.def(
      "abs_operator",
      [](const fields::ScalarField& f, const geom::Vec& x,
         const quad::QuadratureSpec& spec, const geom::DimensionContext& ctx,
         const std::string& convention) {
        auto v = ops::abs_operator(f, x, spec, ctx,
                                   ops::convention_from_name(convention));
        return py::make_tuple(v.value, v.estimated_error);
      },
      py::arg("f"), py::arg("x"), py::arg("spec"), py::arg("ctx"),
      py::arg("convention") = "sigma");
  m.def(
      "h_operator",
      [](const fields::ScalarField& f, const geom::Vec& x,
         const quad::QuadratureSpec& spec, const geom::DimensionContext& ctx) {
        auto v = ops::h_operator(f, x, spec, ctx);
        return py::make_tuple(v.value, v.estimated_error);
      },
      py::arg("f"), py::arg("x"), py::arg("spec"), py::arg("ctx"));
  m.def(
      "riesz_potential",
      [](const fields::ScalarField& f, double mu, const geom::Vec& x,
         const quad::QuadratureSpec& spec, const geom::DimensionContext& ctx) {
        auto v = ops::riesz_potential(f, mu, x, spec, ctx);
        return py::make_tuple(v.value, v.estimated_error);
      },
      py::arg("f"), py::arg("mu"), py::arg("x"), py::arg("spec"), py::arg("ctx"));
  m.def(
      "poisson_extension",
      [](const fields::ScalarField& f, const geom::Vec& x,
         const quad::QuadratureSpec& spec, const geom::DimensionContext& ctx) {
        auto v = ops::poisson_extension(f, x, spec, ctx);
        return py::make_tuple(v.value, v.estimated_error);
      },
      py::arg("f"), py::arg("x"), py::arg("spec"), py::arg("ctx"));
  m.def("ball_integrate", &fields::ball_integrate, py::arg("f"), py::arg("spec"),
        py::arg("ctx"));

  // norm machinery
  m.def(
      "kernel_integral_K",
      [](double xr, const std::string& method, const quad::QuadratureSpec& spec,
         const geom::DimensionContext& ctx) {
        return norms::kernel_integral_K(xr, norms::kmethod_from_name(method), spec, ctx);
      },
      py::arg("x_radius"), py::arg("method"), py::arg("spec"), py::arg("ctx"));
  m.def(
      "kernel_integral_Kswap",
      [](double xr, const std::string& method, const quad::QuadratureSpec& spec,
         const geom::DimensionContext& ctx) {
        return norms::kernel_integral_Kswap(xr, norms::kmethod_from_name(method), spec,
                                            ctx);
      },
      py::arg("x_radius"), py::arg("method"), py::arg("spec"), py::arg("ctx"));
  m.def("sphere_integral_reduced", &norms::sphere_integral_reduced, py::arg("a"),
        py::arg("r"), py::arg("x_radius"), py::arg("ctx"));
  m.def("coefficient_a", &norms::coefficient_a, py::arg("n"), py::arg("m"));
  m.def("coefficient_b", &norms::coefficient_b, py::arg("n"), py::arg("m"));
  m.def("coefficient_e", &norms::coefficient_e, py::arg("n"), py::arg("m"));
  m.def("majorant_c", &norms::majorant_c, py::arg("n"), py::arg("m"));
  m.def("majorant_c_limit", &norms::majorant_c_limit, py::arg("n"));
  m.def("series_J_theorem", &norms::series_J_theorem, py::arg("x_radius"),
        py::arg("m_max"), py::arg("ctx"));
  m.def("series_J_lemma", &norms::series_J_lemma, py::arg("x_radius"), py::arg("m_max"),
        py::arg("ctx"));
  m.def("L_closed_form", &norms::L_closed_form, py::arg("x_radius"), py::arg("ctx"));
  m.def(
      "norm_inf_estimate",
      [](const geom::DimensionContext& ctx, const quad::QuadratureSpec& spec,
         const std::string& convention, const std::vector<double>& radii) {
        return norm_report_dict(norms::norm_inf_estimate(
            ctx, spec, ops::convention_from_name(convention),
            radii.empty() ? norms::default_radii_grid() : radii));
      },
      py::arg("ctx"), py::arg("spec"), py::arg("convention") = "unit",
      py::arg("radii") = std::vector<double>{});
  m.def(
      "norm_l1_estimate",
      [](const geom::DimensionContext& ctx, const quad::QuadratureSpec& spec,
         const std::string& convention, const std::vector<double>& radii,
         bool with_matrix) {
        return norm_report_dict(norms::norm_l1_estimate(
            ctx, spec, ops::convention_from_name(convention),
            radii.empty() ? norms::default_radii_grid() : radii, with_matrix));
      },
      py::arg("ctx"), py::arg("spec"), py::arg("convention") = "green",
      py::arg("radii") = std::vector<double>{}, py::arg("with_matrix") = false);
  m.def(
      "interpolation_bound",
      [](double p, const geom::DimensionContext& ctx, const quad::QuadratureSpec& spec,
         const std::string& convention) {
        return norms::interpolation_bound(p, ctx, spec,
                                          ops::convention_from_name(convention));
      },
      py::arg("p"), py::arg("ctx"), py::arg("spec"), py::arg("convention") = "sigma");

  // conjecture exploration
  m.def(
      "conjecture_closed_forms",
      [](int n, double p, const geom::DimensionContext& ctx) {
        conj::ConjectureParams prm{n, p};
        py::dict d;
        d["ap_closed"] = conj::conjecture_Ap_closed(prm, ctx);
        d["ap_integral"] = conj::conjecture_Ap_integral(prm, ctx);
        d["bp_closed"] = conj::conjecture_Bp_closed(prm, ctx);
        d["bp_closed_corrected"] = conj::conjecture_Bp_closed_corrected(prm, ctx);
        d["bp_integral"] = conj::conjecture_Bp_integral(prm, ctx);
        return d;
      },
      py::arg("n"), py::arg("p"), py::arg("ctx"));

  // verification entry points
  m.def(
      "run_check",
      [](const std::string& name, const std::vector<int>& dims,
         const quad::QuadratureSpec& spec, const std::string& profile) {
        auto rs = checks::run_check(name, dims, spec,
                                    checks::profile_from_name(profile));
        py::list out;
        for (const auto& r : rs) {
          py::dict d;
          d["name"] = r.name;
          d["dimension"] = r.dimension;
          d["computed"] = r.computed;
          d["expected"] = r.expected;
          d["passed"] = r.passed;
          d["tolerance"] = r.tolerance;
          d["metric"] = r.metric;
          out.append(d);
        }
        return out;
      },
      py::arg("name"), py::arg("dims"), py::arg("spec"), py::arg("profile") = "fast");
  m.def("registry_names", &checks::registry_names);
}
