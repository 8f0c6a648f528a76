#pragma once

#include <string>
#include <vector>

#include "ballgreen/geometry.hpp"
#include "ballgreen/quadrature.hpp"

namespace ballgreen::conj {

using geom::DimensionContext;
using geom::Vec;
using quad::QuadratureSpec;

struct ConjectureParams {
  int n = 3;
  double p = 4.0;  // > n
  double q() const { return p / (p - 1.0); }
  void validate() const;  // p > n required for convergence
};

// Documented closed form for the L^p -> L^infinity bound A_p:
//   omega^{-1/p} (Gamma(1+q) Gamma(1+(-1+1/n)q) / (n Gamma(2+q/n)))^{1/q}.
double conjecture_Ap_closed(const ConjectureParams& prm, const DimensionContext& ctx);

// x = 0 integral expression (1/omega) (int_B (|y|^{1-n}-|y|)^q dy)^{1/q},
// by adaptive radial quadrature.
double conjecture_Ap_integral(const ConjectureParams& prm, const DimensionContext& ctx,
                              double tol = 1e-10);

// Documented closed form for B_p (with the angular factor
// Gamma((n+q-1)/2)/Gamma((n-1)/2) exactly as displayed).
double conjecture_Bp_closed(const ConjectureParams& prm, const DimensionContext& ctx);

// x = 0 integral expression (1/omega)(int_B |<y,eta>|^q (|y|^{-n}-1)^q dy)^{1/q}.
// Rotation-invariant; evaluated with eta = e1 by 2-D reduced quadrature.
double conjecture_Bp_integral(const ConjectureParams& prm, const DimensionContext& ctx,
                              double tol = 1e-10);

// Same integral for an arbitrary unit eta via the full chart (n = 3), used
// to confirm the eta-independence claim numerically.
double conjecture_Bp_integral_eta(const ConjectureParams& prm, const Vec& eta,
                                  const DimensionContext& ctx, double tol = 1e-9);

// B_p closed form with the angular factor replaced by the one the x = 0
// integral actually produces, Gamma((q+1)/2)/Gamma(1/2). Matches the
// integral expression to quadrature accuracy; reported alongside the
// documented form, clearly labeled.
double conjecture_Bp_closed_corrected(const ConjectureParams& prm,
                                      const DimensionContext& ctx);

// Evidence scan over |x|: Phi_A(|x|) = (int_B kernel_mag(x,y)^q dy)^{1/q}.
// Non-assertive: the report records values and whether the grid argmax sits
// at 0; it never carries a pass/fail.
struct ConjectureScan {
  ConjectureParams params;
  std::vector<double> radii;
  std::vector<double> phi_a;      // q-norm of the kernel per radius
  double ap_closed = 0.0;
  double ap_integral = 0.0;
  double bp_closed = 0.0;
  double bp_closed_corrected = 0.0;
  double bp_integral = 0.0;
  bool grid_argmax_at_zero = false;
  bool nonincreasing_on_grid = false;
  std::vector<double> eta_values;  // B_p integrals at sampled eta (n = 3)
};

ConjectureScan conjecture_scan(const ConjectureParams& prm,
                               const std::vector<double>& radii,
                               const QuadratureSpec& spec, const DimensionContext& ctx,
                               int eta_samples = 0);

}  // namespace ballgreen::conj
