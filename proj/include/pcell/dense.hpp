#ifndef PCELL_DENSE_HPP
#define PCELL_DENSE_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace pcell {

struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

enum class SolverChoice { DirectLU, Gmres };

/// Assembled dense linear system. Direct solves must reach a relative residual
/// below 1e-12 (one step of iterative refinement is applied if needed);
/// the iterative path is residual-driven with the configured tolerance.
struct DenseSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  SolverChoice solver = SolverChoice::DirectLU;
  double tol = 1e-12;
};

Eigen::VectorXd solve_dense(const DenseSystem& sys);

/// Plain full-memory GMRES, no preconditioner. Throws SolverError if the
/// relative residual target is not met within max_iter steps.
Eigen::VectorXd gmres(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                      double tol, int max_iter = -1);

} // namespace pcell

#endif
