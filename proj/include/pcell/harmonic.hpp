#ifndef PCELL_HARMONIC_HPP
#define PCELL_HARMONIC_HPP

#include <memory>
#include <span>
#include <vector>

#include "pcell/dense.hpp"
#include "pcell/log_family.hpp"
#include "pcell/sampled_boundary.hpp"

namespace pcell {

/// Output of the Dirichlet-to-Neumann machinery for a harmonic trace phi:
/// phi = psi + sum_j a_j ln|x - xi_j| with psi the conjugable part.
struct HarmonicDecomposition {
  std::vector<double> phi;      ///< input trace (echo)
  std::vector<double> dphi_dt;  ///< weighted tangential derivative of phi
  std::vector<double> psi_hat;  ///< harmonic conjugate of psi, mean-zero gauge
  std::vector<double> a;        ///< logarithmic coefficients, one per hole
  std::vector<double> psi;      ///< phi - sum_j a_j lambda_j at the nodes
  std::vector<double> wnd;      ///< dphi/dn |x'| (Dirichlet-to-Neumann output)
};

/// Holds the assembled Nystrom operators of one sampled cell: the augmented
/// (N+m)x(N+m) conjugate system and the plain NxN operator shared by the two
/// Neumann-type solves. Factorizations are reused across all functions
/// prepared on the same cell; the object is immutable and safe to share.
class HarmonicSolver {
 public:
  explicit HarmonicSolver(std::shared_ptr<const SampledBoundary> sb,
                          SolverChoice choice = SolverChoice::DirectLU,
                          double tol = 1e-12);

  const SampledBoundary& boundary() const { return *sb_; }
  const std::shared_ptr<const SampledBoundary>& boundary_ptr() const { return sb_; }
  const LogFamily& logs() const { return logs_; }
  SolverChoice solver_choice() const { return choice_; }

  /// Conjugate solve plus DtN step; fills every field of the decomposition.
  HarmonicDecomposition analyze(std::span<const double> phi_trace) const;

  /// Trace of the harmonic function with the given weighted Neumann data
  /// (du/dn |x'| at nodes), in the mean-zero gauge.
  std::vector<double> neumann_trace(std::span<const double> weighted_neumann) const;

 private:
  friend HarmonicDecomposition solve_conjugate_augmented(const HarmonicSolver&,
                                                         std::span<const double>);
  Eigen::VectorXd solve_augmented(const Eigen::VectorXd& rhs) const;
  Eigen::VectorXd solve_plain(const Eigen::VectorXd& rhs) const;

  std::shared_ptr<const SampledBoundary> sb_;
  LogFamily logs_;
  SolverChoice choice_;
  double tol_;
  Eigen::MatrixXd plain_, augmented_;
  Eigen::PartialPivLU<Eigen::MatrixXd> plain_lu_, augmented_lu_;
};

/// Solves the square augmented Nystrom system in N+m variables for the
/// conjugate trace psi_hat and the logarithmic coefficients a_j. The wnd field
/// is left empty; dtn_weighted_normal_derivative completes it.
HarmonicDecomposition solve_conjugate_augmented(const HarmonicSolver& solver,
                                                std::span<const double> phi_trace);

/// dphi/dn |x'| = d/dt[psi_hat(x(t))] + sum_j a_j (dlambda_j/dn)|x'|.
std::vector<double> dtn_weighted_normal_derivative(const HarmonicDecomposition& hd,
                                                   const SampledBoundary& sb,
                                                   const LogFamily& logs);

} // namespace pcell

#endif
