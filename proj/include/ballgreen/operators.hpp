#pragma once

#include <optional>
#include <string>

#include "ballgreen/fields.hpp"
#include "ballgreen/geometry.hpp"
#include "ballgreen/quadrature.hpp"

namespace ballgreen::ops {

using fields::ScalarField;
using geom::DimensionContext;
using geom::Vec;
using quad::QuadratureSpec;

// Kernel prefactor conventions under which the operator-norm constants in
// the two norm theorems are mutually consistent:
//   unit  -> 1
//   sigma -> 1/omega_{n-1}        (the literal gradient-operator prefactor)
//   green -> 1/((n-2) omega_{n-1})
enum class NormConvention { Unit, Sigma, Green };

double convention_prefactor(NormConvention c, const DimensionContext& ctx);
std::string convention_name(NormConvention c);
NormConvention convention_from_name(const std::string& name);

struct ValueWithError {
  double value = 0.0;
  double estimated_error = 0.0;
};

struct VectorResult {
  Vec value;
  double estimated_error = 0.0;
};

// Green potential G[g](x) = int_B G(x,y) g(y) dy. The |x-y|^{2-n}
// singularity is absorbed by polar coordinates centred at x; the
// singularity-split scheme additionally splits the radial panel at
// split_radius, Monte Carlo replaces the outer region by sampling.
ValueWithError green_potential(const ScalarField& g, const Vec& x,
                               const QuadratureSpec& spec, const DimensionContext& ctx);

// Gradient operator D[g](x) = (1/omega) int_B ((x-y)/|x-y|^n
//                             - (|y|^2 x - y)/[x,y]^n) g(y) dy = grad(-G[g]).
VectorResult grad_operator(const ScalarField& g, const Vec& x,
                           const QuadratureSpec& spec, const DimensionContext& ctx);

// Absolute-kernel operator N[f](x) = prefactor * int_B |...| f(y) dy.
ValueWithError abs_operator(const ScalarField& f, const Vec& x,
                            const QuadratureSpec& spec, const DimensionContext& ctx,
                            NormConvention convention);

// Swapped-kernel operator H[f](x) = (1/((n-2) omega)) int_B |H(x,y)| f(y) dy.
ValueWithError h_operator(const ScalarField& f, const Vec& x,
                          const QuadratureSpec& spec, const DimensionContext& ctx);

// Riesz potential (V_mu f)(x) = int_B |x-y|^{n(mu-1)} f(y) dy, mu in (0,1].
ValueWithError riesz_potential(const ScalarField& f, double mu, const Vec& x,
                               const QuadratureSpec& spec, const DimensionContext& ctx);

struct RieszParams {
  double mu;          // (0, 1]
  double p;           // >= 1
  double q;           // >= 1, or +infinity
  double delta() const;  // 1/p - 1/q (0 for q = infinity handled via 1/q = 0)
  void validate() const;  // throws std::domain_error unless 0 <= delta < mu
};

struct RieszBoundOutcome {
  double lhs;            // ||V_mu f||_q (sampled)
  double rhs;            // (1/(mu-delta))^{1-delta} (omega/n)^{1-mu} |B|^{mu-delta} ||f||_p
  double lhs_std_error;  // Monte Carlo standard error of lhs
  double f_norm_p;
  bool passed;           // lhs <= rhs within 3 standard errors + roundoff margin
};

RieszBoundOutcome riesz_bound_check(const ScalarField& f, const RieszParams& params,
                                    const QuadratureSpec& spec,
                                    const DimensionContext& ctx);

// Poisson extension P[f](x) = int_S P(x,eta) f(eta) dsigma(eta) with the
// normalized sphere measure; boundary data comes from the same field
// registry restricted to |eta| = 1.
ValueWithError poisson_extension(const ScalarField& f_boundary, const Vec& x,
                                 const QuadratureSpec& spec, const DimensionContext& ctx);

}  // namespace ballgreen::ops
