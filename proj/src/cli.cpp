#include "ballgreen/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "ballgreen/conjecture.hpp"
#include "ballgreen/errors.hpp"
#include "ballgreen/fields.hpp"
#include "ballgreen/geometry.hpp"
#include "ballgreen/kernels.hpp"
#include "ballgreen/normcalc.hpp"
#include "ballgreen/operators.hpp"
#include "ballgreen/report.hpp"
#include "ballgreen/specfun.hpp"
#include "ballgreen/verify.hpp"

namespace ballgreen::cli {

namespace {

using report::Json;

struct CommonOpts {
  std::string format = "json";  // json | csv | pretty
  std::string out_path;         // empty = stdout
  std::uint64_t seed = 20240817ULL;
  bool seed_set = false;
  int workers = 1;
  bool no_timestamp = false;
  std::string scheme = "reduced-polar";
  int radial_nodes = 96;
  int angular_nodes = 96;
  long mc_samples = 200000;
  double split_radius = 0.1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "Output format: json, csv, pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_option("--out", o.out_path, "Write output to this path instead of stdout");
  cmd->add_option("--seed", o.seed, "RNG seed (fallback: BALLGREEN_SEED env var)")
      ->each([&o](const std::string&) { o.seed_set = true; });
  cmd->add_option("--workers", o.workers, "Worker-thread cap for check execution")
      ->check(CLI::Range(1, 64));
  cmd->add_flag("--no-timestamp", o.no_timestamp,
                "Omit wall-clock data (timestamp and runtime fields); output becomes "
                "byte-identical for identical arguments and seed");
  cmd->add_option("--scheme", o.scheme, "Quadrature scheme")
      ->check(CLI::IsMember({"reduced-polar", "monte-carlo", "singularity-split"}));
  cmd->add_option("--radial-nodes", o.radial_nodes, "Radial quadrature nodes");
  cmd->add_option("--angular-nodes", o.angular_nodes, "Angular quadrature nodes");
  cmd->add_option("--mc-samples", o.mc_samples, "Monte Carlo sample count");
  cmd->add_option("--split-radius", o.split_radius,
                  "Inner-panel radius for singularity-split quadrature");
}

quad::QuadratureSpec make_spec(const CommonOpts& o) {
  quad::QuadratureSpec spec;
  spec.scheme = quad::scheme_from_name(o.scheme);
  spec.radial_nodes = o.radial_nodes;
  spec.angular_nodes = o.angular_nodes;
  spec.mc_samples = o.mc_samples;
  spec.split_radius = o.split_radius;
  spec.seed = o.seed;
  if (!o.seed_set) {
    if (const char* env = std::getenv("BALLGREEN_SEED")) {
      spec.seed = std::strtoull(env, nullptr, 10);
    }
  }
  spec.validate();
  return spec;
}

Json spec_json(const quad::QuadratureSpec& spec) {
  Json j = Json::object();
  j.set("scheme", Json::string(quad::scheme_name(spec.scheme)));
  j.set("radial_nodes", Json::integer(spec.radial_nodes));
  j.set("angular_nodes", Json::integer(spec.angular_nodes));
  j.set("mc_samples", Json::integer(spec.mc_samples));
  j.set("seed", Json::integer(static_cast<long long>(spec.seed)));
  j.set("split_radius", Json::number(spec.split_radius));
  return j;
}

Json config_json(const CommonOpts& o, const quad::QuadratureSpec& spec,
                 std::vector<std::pair<std::string, std::string>> extra = {}) {
  Json j = Json::object();
  for (auto& [k, v] : extra) j.set(k, Json::string(v));
  j.set("format", Json::string(o.format));
  j.set("workers", Json::integer(o.workers));
  j.set("no_timestamp", Json::boolean(o.no_timestamp));
  j.set("quadrature", spec_json(spec));
  return j;
}

std::string iso_timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

int emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output path: " << o.out_path << "\n";
    return 1;
  }
  f << text;
  return 0;
}

std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> g;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) g.push_back(std::stod(item));
  return g;
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> d;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) d.push_back(std::stoi(item));
  return d;
}

geom::Vec parse_point(const std::string& s) {
  geom::Vec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
  return v;
}

Json check_json(const checks::CheckResult& r, bool include_timing) {
  Json j = Json::object();
  j.set("name", Json::string(r.name));
  j.set("dimension", Json::integer(r.dimension));
  j.set("computed", Json::number(r.computed));
  j.set("expected", Json::number(r.expected));
  j.set("provenance", Json::string(r.provenance));
  j.set("abs_error", Json::number(r.abs_error));
  j.set("rel_error", Json::number(r.rel_error));
  j.set("tolerance", Json::number(r.tolerance));
  j.set("metric", Json::string(r.metric));
  j.set("passed", Json::boolean(r.passed));
  j.set("runtime_ms", Json::integer(include_timing ? r.runtime_ms : 0));
  j.set("quadrature", spec_json(r.spec_echo));
  j.set("detail", Json::string(r.detail));
  return j;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const CommonOpts& o, const std::string& which, const std::string& dims_s,
               const std::string& profile_s) {
  quad::QuadratureSpec spec = make_spec(o);
  auto dims = parse_dims(dims_s);
  auto profile = checks::profile_from_name(profile_s);

  checks::RunReport rep;
  if (which == "all") {
    rep = checks::run_all(dims, profile, spec, o.workers);
  } else {
    rep.results = checks::run_check(which, dims, spec, profile);
    rep.dims = dims;
    rep.profile = profile;
    rep.spec = spec;
    rep.workers = o.workers;
    rep.total = static_cast<int>(rep.results.size());
    for (const auto& r : rep.results)
      r.passed ? ++rep.passed_count : ++rep.failed_count;
  }

  if (o.format == "csv") {
    std::string out = report::csv_row({"name", "dimension", "computed", "expected",
                                       "abs_error", "rel_error", "tolerance", "metric",
                                       "passed", "runtime_ms"});
    for (const auto& r : rep.results)
      out += report::csv_row({r.name, std::to_string(r.dimension),
                              report::format_double(r.computed),
                              report::format_double(r.expected),
                              report::format_double(r.abs_error),
                              report::format_double(r.rel_error),
                              report::format_double(r.tolerance), r.metric,
                              r.passed ? "1" : "0",
                              std::to_string(o.no_timestamp ? 0 : r.runtime_ms)});
    int rc = emit(o, out);
    return rc != 0 ? rc : (rep.failed_count == 0 ? 0 : 1);
  }

  if (o.format == "pretty") {
    std::string out;
    char line[512];
    for (const auto& r : rep.results) {
      std::snprintf(line, sizeof(line), "%-4s  n=%d  %-55s computed=%-22s expected=%-22s\n",
                    r.passed ? "PASS" : "FAIL", r.dimension, r.name.c_str(),
                    report::format_double(r.computed).c_str(),
                    report::format_double(r.expected).c_str());
      out += line;
    }
    std::snprintf(line, sizeof(line), "%d/%d checks passed\n", rep.passed_count, rep.total);
    out += line;
    int rc = emit(o, out);
    return rc != 0 ? rc : (rep.failed_count == 0 ? 0 : 1);
  }

  Json root = Json::object();
  root.set("schema", Json::string("ballgreen-verify-report/1"));
  Json cfg = config_json(o, spec, {{"subcommand", "verify"},
                                   {"selection", which},
                                   {"dims", dims_s},
                                   {"profile", profile_s}});
  root.set("config", std::move(cfg));
  if (!o.no_timestamp) root.set("timestamp", Json::string(iso_timestamp()));
  Json arr = Json::array();
  for (const auto& r : rep.results) arr.push(check_json(r, !o.no_timestamp));
  root.set("checks", std::move(arr));
  Json summary = Json::object();
  summary.set("total", Json::integer(rep.total));
  summary.set("passed", Json::integer(rep.passed_count));
  summary.set("failed", Json::integer(rep.failed_count));
  summary.set("runtime_ms", Json::integer(o.no_timestamp ? 0 : rep.runtime_ms));
  root.set("summary", std::move(summary));
  int rc = emit(o, root.dump());
  return rc != 0 ? rc : (rep.failed_count == 0 ? 0 : 1);
}

// ------------------------------------------------------------------ norms

int cmd_norm(const CommonOpts& o, bool l1, int dim, const std::string& conv_s,
             const std::string& grid_s, bool no_matrix) {
  quad::QuadratureSpec spec = make_spec(o);
  auto ctx = geom::DimensionContext::make(dim);
  auto conv = ops::convention_from_name(conv_s);
  std::vector<double> radii =
      grid_s.empty() ? norms::default_radii_grid() : parse_grid(grid_s);
  norms::NormReport rep =
      l1 ? norms::norm_l1_estimate(ctx, spec, conv, radii, !no_matrix)
         : norms::norm_inf_estimate(ctx, spec, conv, radii);

  // per-radius error estimate from a coarser rule
  quad::QuadratureSpec coarse = spec.scaled_nodes(2.0 / 3.0);
  std::vector<double> errors(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double v = l1 ? norms::kernel_integral_Kswap(radii[i], norms::KMethod::Direct,
                                                 coarse, ctx)
                  : norms::kernel_integral_K(radii[i], norms::KMethod::Direct, coarse,
                                             ctx);
    errors[i] = std::abs(rep.prefactor * v - rep.values[i]);
  }

  if (o.format == "csv") {
    std::string out = report::csv_row({"radius", "value", "error"});
    for (std::size_t i = 0; i < radii.size(); ++i)
      out += report::csv_row({report::format_double(radii[i]),
                              report::format_double(rep.values[i]),
                              report::format_double(errors[i])});
    return emit(o, out);
  }

  Json root = Json::object();
  root.set("schema", Json::string("ballgreen-norm-report/1"));
  root.set("config", config_json(o, spec, {{"subcommand", rep.op},
                                           {"dim", std::to_string(dim)},
                                           {"convention", conv_s}}));
  if (!o.no_timestamp) root.set("timestamp", Json::string(iso_timestamp()));
  Json jr = Json::object();
  jr.set("op", Json::string(rep.op));
  jr.set("convention", Json::string(ops::convention_name(rep.convention)));
  jr.set("prefactor", Json::number(rep.prefactor));
  jr.set("value", Json::number(rep.value));
  jr.set("argmax_radius", Json::number(rep.argmax_radius));
  jr.set("closed_form_target", Json::number(rep.closed_form_target));
  jr.set("method", Json::string(rep.method));
  Json jradii = Json::array();
  for (double r : radii) jradii.push(Json::number(r));
  jr.set("radii", std::move(jradii));
  Json jvals = Json::array();
  for (double v : rep.values) jvals.push(Json::number(v));
  jr.set("values", std::move(jvals));
  Json jerr = Json::array();
  for (double e : errors) jerr.push(Json::number(e));
  jr.set("errors", std::move(jerr));
  jr.set("normalization_note", Json::string(rep.normalization_note));
  if (rep.has_matrix) {
    Json jm = Json::object();
    jm.set("cells", Json::integer(rep.matrix_cells));
    jm.set("norm1", Json::number(rep.matrix_norm1));
    jm.set("norminf_of_transpose", Json::number(rep.matrix_norminf_of_transpose));
    jm.set("norminf", Json::number(rep.matrix_norminf));
    jm.set("spectral_sym", Json::number(rep.matrix_spectral_sym));
    jr.set("matrix", std::move(jm));
  }
  root.set("report", std::move(jr));
  return emit(o, root.dump());
}

// ------------------------------------------------------------------ series

int cmd_series_audit(const CommonOpts& o, int dim, int m_max) {
  quad::QuadratureSpec spec = make_spec(o);
  auto sc = norms::SeriesCoefficients::compute(dim, m_max);

  if (o.format == "csv") {
    std::string out = report::csv_row({"m", "a", "e", "b", "c"});
    for (int m = 1; m <= m_max; ++m)
      out += report::csv_row({std::to_string(m), report::format_double(sc.a[m - 1]),
                              report::format_double(sc.e[m - 1]),
                              report::format_double(sc.b[m - 1]),
                              report::format_double(sc.c[m - 1])});
    return emit(o, out);
  }

  bool a_neg = true, e_nonneg = true, b_le_c = true, c_nondec = true, c_le_lim = true;
  double prev_c = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    a_neg = a_neg && sc.a[m - 1] < 0.0;
    e_nonneg = e_nonneg && sc.e[m - 1] >= 0.0;
    b_le_c = b_le_c && sc.b[m - 1] <= sc.c[m - 1] * (1.0 + 1e-12);
    c_nondec = c_nondec && sc.c[m - 1] >= prev_c * (1.0 - 1e-12);
    c_le_lim = c_le_lim && sc.c[m - 1] <= sc.c_limit * (1.0 + 1e-12);
    prev_c = sc.c[m - 1];
  }
  Json root = Json::object();
  root.set("schema", Json::string("ballgreen-series-audit/1"));
  root.set("config", config_json(o, spec, {{"subcommand", "series-audit"},
                                           {"dim", std::to_string(dim)},
                                           {"m_max", std::to_string(m_max)}}));
  if (!o.no_timestamp) root.set("timestamp", Json::string(iso_timestamp()));
  root.set("a0", Json::number(sc.a0));
  root.set("c_limit", Json::number(sc.c_limit));
  Json rows = Json::array();
  for (int m = 1; m <= m_max; ++m) {
    Json row = Json::object();
    row.set("m", Json::integer(m));
    row.set("a", Json::number(sc.a[m - 1]));
    row.set("e", Json::number(sc.e[m - 1]));
    row.set("b", Json::number(sc.b[m - 1]));
    row.set("c", Json::number(sc.c[m - 1]));
    rows.push(std::move(row));
  }
  root.set("coefficients", std::move(rows));
  Json sum = Json::object();
  sum.set("a_all_negative", Json::boolean(a_neg));
  sum.set("e_all_nonnegative", Json::boolean(e_nonneg));
  sum.set("b_below_c", Json::boolean(b_le_c));
  sum.set("c_nondecreasing", Json::boolean(c_nondec));
  sum.set("c_below_limit", Json::boolean(c_le_lim));
  root.set("summary", std::move(sum));
  return emit(o, root.dump());
}

int cmd_interp_bound(const CommonOpts& o, int dim, double p, const std::string& conv_s) {
  quad::QuadratureSpec spec = make_spec(o);
  auto ctx = geom::DimensionContext::make(dim);
  auto conv = ops::convention_from_name(conv_s);
  double pref = ops::convention_prefactor(conv, ctx);
  double n1 = pref * norms::kernel_integral_Kswap(0.0, norms::KMethod::Direct, spec, ctx);
  double ninf = pref * norms::kernel_integral_K(0.0, norms::KMethod::Direct, spec, ctx);
  double bound = norms::interpolation_bound(p, ctx, spec, conv);
  Json root = Json::object();
  root.set("schema", Json::string("ballgreen-interp-bound/1"));
  root.set("config", config_json(o, spec, {{"subcommand", "interp-bound"},
                                           {"dim", std::to_string(dim)},
                                           {"convention", conv_s},
                                           {"p", report::format_double(p)}}));
  if (!o.no_timestamp) root.set("timestamp", Json::string(iso_timestamp()));
  root.set("p", Json::number(p));
  root.set("endpoint_l1", Json::number(n1));
  root.set("endpoint_linf", Json::number(ninf));
  root.set("bound", Json::number(bound));
  return emit(o, root.dump());
}

// ------------------------------------------------------------------ solve

int cmd_solve(const CommonOpts& o, const std::string& field_s,
              const std::string& field_file, const std::string& points_path,
              const std::string& op_s, const std::string& conv_s, double mu, int dim) {
  quad::QuadratureSpec spec = make_spec(o);
  auto ctx = geom::DimensionContext::make(dim);
  fields::ScalarField field = fields::ScalarField::constant(0.0);
  if (!field_file.empty()) {
    std::ifstream fin(field_file);
    if (!fin) {
      std::cerr << "cannot open field file: " << field_file << "\n";
      return 2;
    }
    field = fields::ScalarField::tabulated_from_csv(fin, dim);
  } else {
    field = fields::ScalarField::parse(field_s);
  }

  std::ifstream in(points_path);
  if (!in) {
    std::cerr << "cannot open points file: " << points_path << "\n";
    return 2;
  }
  std::string line;
  if (!std::getline(in, line)) {
    std::cerr << "points file must start with a header line\n";
    return 2;
  }
  std::vector<geom::Vec> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    geom::Vec x = parse_point(line);
    if (static_cast<int>(x.size()) != dim) {
      std::cerr << "point with " << x.size() << " coordinates, expected " << dim << "\n";
      return 2;
    }
    if (geom::norm(x) >= 1.0) {
      std::cerr << "evaluation point outside the open unit ball rejected\n";
      return 2;
    }
    points.push_back(std::move(x));
  }

  std::vector<std::string> header;
  for (int i = 1; i <= dim; ++i) header.push_back("x" + std::to_string(i));
  bool vector_op = op_s == "grad";
  if (vector_op)
    for (int i = 1; i <= dim; ++i) header.push_back("value" + std::to_string(i));
  else
    header.push_back("value");
  header.push_back("error_estimate");
  std::string out = report::csv_row(header);

  auto conv = ops::convention_from_name(conv_s);
  for (const auto& x : points) {
    std::vector<std::string> row;
    for (double c : x) row.push_back(report::format_double(c));
    if (op_s == "green") {
      auto v = ops::green_potential(field, x, spec, ctx);
      row.push_back(report::format_double(v.value));
      row.push_back(report::format_double(v.estimated_error));
    } else if (op_s == "grad") {
      auto v = ops::grad_operator(field, x, spec, ctx);
      for (double c : v.value) row.push_back(report::format_double(c));
      row.push_back(report::format_double(v.estimated_error));
    } else if (op_s == "abs") {
      auto v = ops::abs_operator(field, x, spec, ctx, conv);
      row.push_back(report::format_double(v.value));
      row.push_back(report::format_double(v.estimated_error));
    } else if (op_s == "h") {
      auto v = ops::h_operator(field, x, spec, ctx);
      row.push_back(report::format_double(v.value));
      row.push_back(report::format_double(v.estimated_error));
    } else if (op_s == "riesz") {
      auto v = ops::riesz_potential(field, mu, x, spec, ctx);
      row.push_back(report::format_double(v.value));
      row.push_back(report::format_double(v.estimated_error));
    } else if (op_s == "poisson") {
      auto v = ops::poisson_extension(field, x, spec, ctx);
      row.push_back(report::format_double(v.value));
      row.push_back(report::format_double(v.estimated_error));
    } else {
      std::cerr << "unknown operator: " << op_s << "\n";
      return 2;
    }
    out += report::csv_row(row);
  }
  return emit(o, out);
}

// ------------------------------------------------------------------ eval

int cmd_kernel_eval(const CommonOpts& o, const std::string& kernel_s, int dim,
                    const std::string& x_s, const std::string& y_s) {
  quad::QuadratureSpec spec = make_spec(o);
  auto ctx = geom::DimensionContext::make(dim);
  geom::Vec x = parse_point(x_s);
  Json root = Json::object();
  root.set("schema", Json::string("ballgreen-kernel-eval/1"));
  root.set("config", config_json(o, spec, {{"subcommand", "kernel-eval"},
                                           {"kernel", kernel_s},
                                           {"dim", std::to_string(dim)}}));
  Json jx = Json::array();
  for (double c : x) jx.push(Json::number(c));
  root.set("x", std::move(jx));
  if (kernel_s == "poisson") {
    geom::Vec eta = parse_point(y_s);
    Json je = Json::array();
    for (double c : eta) je.push(Json::number(c));
    root.set("eta", std::move(je));
    root.set("value", Json::number(kernels::poisson_kernel(x, eta, ctx)));
  } else {
    geom::Vec y = parse_point(y_s);
    Json jy = Json::array();
    for (double c : y) jy.push(Json::number(c));
    root.set("y", std::move(jy));
    if (kernel_s == "green") {
      root.set("value", Json::number(kernels::green(x, y, ctx)));
    } else if (kernel_s == "green-grad") {
      Json jv = Json::array();
      for (double c : kernels::green_gradient(x, y, ctx)) jv.push(Json::number(c));
      root.set("value", std::move(jv));
    } else if (kernel_s == "n-mag") {
      root.set("value", Json::number(kernels::n_kernel_mag(x, y, ctx)));
    } else if (kernel_s == "h-mag") {
      root.set("value", Json::number(kernels::h_kernel_mag(x, y, ctx)));
    } else if (kernel_s == "bracket") {
      root.set("value", Json::number(geom::bracket(x, y)));
    } else {
      std::cerr << "unknown kernel: " << kernel_s << "\n";
      return 2;
    }
  }
  return emit(o, root.dump());
}

int cmd_scalar(const CommonOpts& o, const std::string& name, double value) {
  if (o.format == "json") {
    Json root = Json::object();
    root.set("schema", Json::string("ballgreen-scalar/1"));
    root.set("name", Json::string(name));
    root.set("value", Json::number(value));
    return emit(o, root.dump());
  }
  return emit(o, report::format_double(value) + "\n");
}

// --------------------------------------------------------------- conjecture

int cmd_conjecture(const CommonOpts& o, int dim, double p, const std::string& grid_s,
                   int eta_samples) {
  quad::QuadratureSpec spec = make_spec(o);
  auto ctx = geom::DimensionContext::make(dim);
  conj::ConjectureParams prm{dim, p};
  std::vector<double> radii = grid_s.empty()
                                  ? std::vector<double>{0.0, 0.1, 0.2, 0.3, 0.4,
                                                        0.5, 0.6, 0.7, 0.8, 0.9}
                                  : parse_grid(grid_s);
  auto scan = conj::conjecture_scan(prm, radii, spec, ctx, eta_samples);
  Json root = Json::object();
  root.set("schema", Json::string("ballgreen-conjecture-scan/1"));
  root.set("config", config_json(o, spec, {{"subcommand", "conjecture"},
                                           {"dim", std::to_string(dim)},
                                           {"p", report::format_double(p)}}));
  if (!o.no_timestamp) root.set("timestamp", Json::string(iso_timestamp()));
  root.set("q", Json::number(prm.q()));
  root.set("ap_closed", Json::number(scan.ap_closed));
  root.set("ap_integral", Json::number(scan.ap_integral));
  root.set("bp_closed", Json::number(scan.bp_closed));
  root.set("bp_closed_corrected", Json::number(scan.bp_closed_corrected));
  root.set("bp_integral", Json::number(scan.bp_integral));
  Json jr = Json::array();
  for (double r : scan.radii) jr.push(Json::number(r));
  root.set("radii", std::move(jr));
  Json jv = Json::array();
  for (double v : scan.phi_a) jv.push(Json::number(v));
  root.set("phi_a", std::move(jv));
  root.set("grid_argmax_at_zero", Json::boolean(scan.grid_argmax_at_zero));
  root.set("nonincreasing_on_grid", Json::boolean(scan.nonincreasing_on_grid));
  Json je = Json::array();
  for (double v : scan.eta_values) je.push(Json::number(v));
  root.set("eta_values", std::move(je));
  root.set("note",
           Json::string("evidence scan; no pass/fail is attached to the location of "
                        "the supremum"));
  return emit(o, root.dump());
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"ballgreen: Poisson-equation Green potential toolkit on the unit ball"};
  app.require_subcommand(1);

  CommonOpts o;

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification check registry");
  std::string which = "all", dims_s = "3", profile_s = "fast";
  verify->add_option("selection", which, "Check name or 'all'")->capture_default_str();
  verify->add_option("--dims", dims_s, "Comma-separated dimensions (each >= 3)")
      ->capture_default_str();
  verify->add_option("--profile", profile_s, "fast or thorough")
      ->check(CLI::IsMember({"fast", "thorough"}));
  add_common(verify, o);

  // norm-inf / norm-l1
  int dim = 3;
  std::string conv_s = "unit", grid_s;
  bool no_matrix = false;
  auto* ninf = app.add_subcommand("norm-inf", "Sup-norm scan of the kernel integral");
  ninf->add_option("--dim", dim, "Dimension (>= 3)");
  ninf->add_option("--convention", conv_s, "unit, sigma or green")
      ->check(CLI::IsMember({"unit", "sigma", "green"}));
  ninf->add_option("--grid", grid_s, "Comma-separated radius grid (must include 0)");
  add_common(ninf, o);

  auto* nl1 = app.add_subcommand("norm-l1", "L1-norm scan via the swapped kernel");
  nl1->add_option("--dim", dim, "Dimension (>= 3)");
  nl1->add_option("--convention", conv_s, "unit, sigma or green")
      ->check(CLI::IsMember({"unit", "sigma", "green"}));
  nl1->add_option("--grid", grid_s, "Comma-separated radius grid (must include 0)");
  nl1->add_flag("--no-matrix", no_matrix, "Skip the discretized-matrix cross check");
  add_common(nl1, o);

  // series-audit
  int m_max = 200;
  auto* sa = app.add_subcommand("series-audit", "Proof-series coefficient audit");
  sa->add_option("--dim", dim, "Dimension (>= 3)");
  sa->add_option("--m-max", m_max, "Largest coefficient index")->check(CLI::Range(1, 100000));
  add_common(sa, o);

  // interp-bound
  double pval = 2.0;
  auto* ib = app.add_subcommand("interp-bound", "Interpolated p-norm bound");
  ib->add_option("--dim", dim, "Dimension (>= 3)");
  ib->add_option("--p", pval, "Exponent in [1, inf)");
  ib->add_option("--convention", conv_s, "unit, sigma or green")
      ->check(CLI::IsMember({"unit", "sigma", "green"}));
  add_common(ib, o);

  // solve
  std::string field_s = "one", points_path, op_s = "green";
  double mu = 1.0;
  std::string field_file;
  auto* solve = app.add_subcommand("solve", "Apply an integral operator at points");
  solve->add_option("--g", field_s, "Operand field (registry grammar or 'one'/'zero')");
  solve->add_option("--g-file", field_file,
                    "Tabulated operand field: CSV x1,...,xn,value with header "
                    "(inverse-distance interpolation, flagged approximate)");
  solve->add_option("--points", points_path, "CSV of evaluation points (header + rows)")
      ->required();
  solve->add_option("--op", op_s, "green, grad, abs, h, riesz or poisson")
      ->check(CLI::IsMember({"green", "grad", "abs", "h", "riesz", "poisson"}));
  solve->add_option("--convention", conv_s, "Kernel prefactor for the abs operator")
      ->check(CLI::IsMember({"unit", "sigma", "green"}));
  solve->add_option("--mu", mu, "Riesz exponent mu in (0, 1]");
  solve->add_option("--dim", dim, "Dimension (>= 3)");
  add_common(solve, o);

  // kernel-eval
  std::string kernel_s = "green", x_s = "0,0,0", y_s = "0.5,0,0";
  auto* ke = app.add_subcommand("kernel-eval", "Print one kernel value (JSON)");
  ke->add_option("--kernel", kernel_s, "green, green-grad, n-mag, h-mag, poisson, bracket")
      ->check(CLI::IsMember({"green", "green-grad", "n-mag", "h-mag", "poisson", "bracket"}));
  ke->add_option("--dim", dim, "Dimension (>= 3)");
  ke->add_option("--x", x_s, "Evaluation point, comma-separated");
  ke->add_option("--y", y_s, "Integration point / boundary point");
  add_common(ke, o);

  // hyp2f1
  double ha = 0, hb = 0, hc = 1, ht = 0;
  auto* hyp = app.add_subcommand("hyp2f1", "Evaluate the Gauss hypergeometric function");
  hyp->add_option("a", ha)->required();
  hyp->add_option("b", hb)->required();
  hyp->add_option("c", hc)->required();
  hyp->add_option("t", ht)->required();
  add_common(hyp, o);

  // angular-integral
  double amu = 2, anu = 1, ar = 0;
  auto* ai = app.add_subcommand("angular-integral",
                                "Closed form of the angular kernel integral");
  ai->add_option("mu", amu)->required();
  ai->add_option("nu", anu)->required();
  ai->add_option("r", ar)->required();
  add_common(ai, o);

  // conjecture
  int eta_samples = 0;
  auto* cj = app.add_subcommand("conjecture", "p-norm bound exploration scan");
  cj->add_option("--dim", dim, "Dimension (>= 3)");
  cj->add_option("--p", pval, "Exponent, must exceed the dimension");
  cj->add_option("--grid", grid_s, "Comma-separated radius grid");
  cj->add_option("--eta-samples", eta_samples, "Random directions for the projection check");
  add_common(cj, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, which, dims_s, profile_s);
    if (ninf->parsed()) return cmd_norm(o, false, dim, conv_s, grid_s, true);
    if (nl1->parsed()) return cmd_norm(o, true, dim, conv_s, grid_s, no_matrix);
    if (sa->parsed()) return cmd_series_audit(o, dim, m_max);
    if (ib->parsed()) return cmd_interp_bound(o, dim, pval, conv_s);
    if (solve->parsed())
      return cmd_solve(o, field_s, field_file, points_path, op_s, conv_s, mu, dim);
    if (ke->parsed()) return cmd_kernel_eval(o, kernel_s, dim, x_s, y_s);
    if (hyp->parsed()) return cmd_scalar(o, "hyp2f1", specfun::gauss_2f1(ha, hb, hc, ht));
    if (ai->parsed())
      return cmd_scalar(o, "angular-integral", specfun::angular_integral({amu, anu, ar}));
    if (cj->parsed()) return cmd_conjecture(o, dim, pval, grid_s, eta_samples);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ballgreen::cli
