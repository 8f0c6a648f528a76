#pragma once

#include "ballgreen/geometry.hpp"

namespace ballgreen::kernels {

using geom::DimensionContext;
using geom::Vec;

// Pair of evaluation/integration points; kernels singular on the diagonal
// raise SingularityError when |x-y| < 1e-12.
struct KernelPair {
  Vec x;
  Vec y;
  DimensionContext ctx;
};

// Green function of the ball: G(x,y) = c_n (|x-y|^{2-n} - [x,y]^{2-n}).
double green(const KernelPair& p);
double green(const Vec& x, const Vec& y, const DimensionContext& ctx);

// grad_x G(x,y) = c_n (2-n) ((x-y)/|x-y|^n - (|y|^2 x - y)/[x,y]^n).
Vec green_gradient(const KernelPair& p);
Vec green_gradient(const Vec& x, const Vec& y, const DimensionContext& ctx);

// Unnormalized kernel of the absolute-value operator:
// | (x-y)/|x-y|^n - (|y|^2 x - y)/[x,y]^n |.
double n_kernel_mag(const KernelPair& p);
double n_kernel_mag(const Vec& x, const Vec& y, const DimensionContext& ctx);

// Swapped kernel |H(x,y)|, H(x,y) = (y-x)/|y-x|^n - (|x|^2 y - x)/[y,x]^n;
// equals n_kernel_mag with the roles of x and y exchanged.
double h_kernel_mag(const Vec& x, const Vec& y, const DimensionContext& ctx);

// Poisson kernel P(x,eta) = (1-|x|^2)/|x-eta|^n for |x| < 1, |eta| = 1.
double poisson_kernel(const Vec& x, const Vec& eta, const DimensionContext& ctx);

// Kernel components in the axisymmetric polar chart centred at x
// (x at radius x_radius along the chart axis, y = x + s*sigma(u)),
// pre-multiplied by the s^{n-1} radial Jacobian so the chart integrand
// stays bounded through the diagonal.
struct ChartVec {
  double par;   // component along x-hat
  double perp;  // component orthogonal to x-hat
};
ChartVec n_kernel_chart(double x_radius, double s, double u, const DimensionContext& ctx);
ChartVec h_kernel_chart(double x_radius, double s, double u, const DimensionContext& ctx);
// s^{n-1} * G(x, y) in the same chart.
double green_chart(double x_radius, double s, double u, const DimensionContext& ctx);

// Right-hand side of the Moebius identity chain for the kernel magnitude:
// with y = T_{-x} z,
//   n_kernel_mag(x, y) = [z,-x]^{n-2} (1-|x|^2)^{1-n} |z|^{1-n}
//                        * | |z|^{n-1} (z+x) - (x|z| + z/|z|) |.
double identity_chain_rhs(const Vec& x, const Vec& z, const DimensionContext& ctx);

}  // namespace ballgreen::kernels
