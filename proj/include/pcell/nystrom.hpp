#ifndef PCELL_NYSTROM_HPP
#define PCELL_NYSTROM_HPP

#include <span>
#include <vector>

#include "pcell/dense.hpp"
#include "pcell/sampled_boundary.hpp"

namespace pcell {

/// Laplace layer kernels. G(x,y) = -(2pi)^-1 ln|x-y|; the double layer is its
/// normal derivative at the source point, with the curvature limit on the
/// diagonal. On a circle of radius R the double-layer kernel is the constant
/// -1/(4 pi R), diagonal included.
struct LayerKernels {
  static double fundamental(Vec2 x, Vec2 y);
  /// dG/dn(y) against the unit source normal.
  static double double_layer(Vec2 x, Vec2 y, Vec2 unit_normal_y);
  /// dG/dn(y) |y'|, i.e. against the weighted normal (tangent rotated cw).
  static double double_layer_weighted(Vec2 x, Vec2 y, Vec2 weighted_normal_y);
  static double circle_constant(double radius);
};

/// Full discrete operator of u -> c(x_i) u(x_i) + oint (dG/dn(y) + 1) u(y) dS(y):
/// trapezoid double layer with curvature diagonal, interior-angle jump
/// coefficients, and the rank-one mean term that pins the additive constant.
Eigen::MatrixXd build_dlp_operator(const SampledBoundary& sb);

/// Single layer potential of a density given in weighted form f |x'| at the
/// nodes. Same-component blocks split the kernel into the periodic-log part
/// (spectral product quadrature) plus a smooth remainder under the trapezoid
/// rule; cross-component blocks are plain trapezoid.
std::vector<double> apply_slp_weighted(const SampledBoundary& sb, std::span<const double> fw);

/// Single layer of a plain density f (values of the physical density at nodes).
std::vector<double> apply_slp(const SampledBoundary& sb, std::span<const double> f);

/// Quadrature weights R_k for int_0^{2pi} ln(4 sin^2((t-s)/2)) f(s) ds on a 2q
/// point grid, indexed by the node offset k = 0..2q-1.
std::vector<double> kress_log_weights(int q);

} // namespace pcell

#endif
