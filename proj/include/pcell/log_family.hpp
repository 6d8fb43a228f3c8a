#ifndef PCELL_LOG_FAMILY_HPP
#define PCELL_LOG_FAMILY_HPP

#include <vector>

#include "pcell/sampled_boundary.hpp"

namespace pcell {

/// Boundary data of the logarithmic family attached to the hole anchors:
/// lambda_j = ln|x - xi_j|, its anti-Laplacian Lambda_j, the rational pair
/// (mu_j, mu_hat_j) with mu_j + i mu_hat_j = 1/(z - zeta_j), and the mixed
/// term M_j(x; b, c). Everything is sampled at the boundary nodes; derivatives
/// are stored in weighted form.
class LogFamily {
 public:
  explicit LogFamily(const SampledBoundary& sb);

  int hole_count() const { return m_; }

  const std::vector<double>& trace(int j) const { return trace_[j]; }
  const std::vector<double>& weighted_tangential(int j) const { return wtan_[j]; }
  const std::vector<double>& weighted_normal(int j) const { return wnorm_[j]; }
  const std::vector<double>& mu(int j) const { return mu_[j]; }
  const std::vector<double>& mu_hat(int j) const { return mu_hat_[j]; }
  const std::vector<double>& antilap_trace(int j) const { return biglambda_[j]; }
  const std::vector<double>& antilap_weighted_normal(int j) const { return biglambda_wnd_[j]; }

  /// M_j(x; b, c) = (1/2) (b, c) . (x - xi_j) ln|x - xi_j| at node i.
  double m_trace(int j, int i, double b, double c) const;
  /// grad M_j . weighted normal at node i.
  double m_weighted_normal(int j, int i, double b, double c) const;

  // Pointwise closed forms (interior evaluation, tests).
  static double lambda(Vec2 x, Vec2 xi);
  static Vec2 lambda_gradient(Vec2 x, Vec2 xi);
  static double antilap_lambda(Vec2 x, Vec2 xi);
  static Vec2 antilap_lambda_gradient(Vec2 x, Vec2 xi);

 private:
  int m_ = 0;
  std::vector<Vec2> xi_;
  std::vector<std::vector<Vec2>> rel_; // x_i - xi_j
  std::vector<Vec2> wn_;               // weighted normals at nodes
  std::vector<std::vector<double>> trace_, wtan_, wnorm_, mu_, mu_hat_;
  std::vector<std::vector<double>> biglambda_, biglambda_wnd_;
};

} // namespace pcell

#endif
