#include "pcell/dense.hpp"

#include <cmath>

namespace pcell {

Eigen::VectorXd gmres(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                      double tol, int max_iter) {
  const int n = static_cast<int>(b.size());
  if (max_iter < 0) max_iter = n;
  const double bnorm = b.norm();
  if (bnorm == 0.0) return Eigen::VectorXd::Zero(n);

  Eigen::MatrixXd Q(n, max_iter + 1);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(max_iter + 1, max_iter);
  Eigen::VectorXd cs(max_iter), sn(max_iter);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(max_iter + 1);

  Q.col(0) = b / bnorm;
  beta(0) = bnorm;
  int k = 0;
  bool converged = false;
  for (; k < max_iter; ++k) {
    Eigen::VectorXd w = A * Q.col(k);
    for (int j = 0; j <= k; ++j) {
      H(j, k) = Q.col(j).dot(w);
      w -= H(j, k) * Q.col(j);
    }
    H(k + 1, k) = w.norm();
    if (H(k + 1, k) > 0.0) Q.col(k + 1) = w / H(k + 1, k);
    for (int j = 0; j < k; ++j) {
      const double t = cs(j) * H(j, k) + sn(j) * H(j + 1, k);
      H(j + 1, k) = -sn(j) * H(j, k) + cs(j) * H(j + 1, k);
      H(j, k) = t;
    }
    const double d = std::hypot(H(k, k), H(k + 1, k));
    cs(k) = H(k, k) / d;
    sn(k) = H(k + 1, k) / d;
    H(k, k) = d;
    H(k + 1, k) = 0.0;
    beta(k + 1) = -sn(k) * beta(k);
    beta(k) = cs(k) * beta(k);
    if (std::abs(beta(k + 1)) / bnorm < tol) {
      ++k;
      converged = true;
      break;
    }
  }
  if (!converged && k == max_iter && std::abs(beta(k)) / bnorm >= tol)
    throw SolverError("GMRES failed to reach tolerance " + std::to_string(tol));
  Eigen::VectorXd y =
      H.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(beta.head(k));
  return Q.leftCols(k) * y;
}

Eigen::VectorXd solve_dense(const DenseSystem& sys) {
  if (sys.A.rows() != sys.A.cols() || sys.A.rows() != sys.b.size())
    throw SolverError("dense system dimensions mismatch");
  const double bnorm = sys.b.norm();
  if (sys.solver == SolverChoice::Gmres) {
    Eigen::VectorXd x = gmres(sys.A, sys.b, sys.tol);
    return x;
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.A);
  const double rc = lu.rcond();
  if (!(rc >= 1e-15)) // also catches NaN
    throw SolverError("matrix is singular to working precision (rcond = " +
                      std::to_string(rc) + ")");
  Eigen::VectorXd x = lu.solve(sys.b);
  if (bnorm > 0.0) {
    double res = (sys.A * x - sys.b).norm() / bnorm;
    if (!(res < 1e-12)) {
      x += lu.solve(sys.b - sys.A * x); // one step of iterative refinement
      res = (sys.A * x - sys.b).norm() / bnorm;
      if (!(res < 1e-12))
        throw SolverError("direct solve residual " + std::to_string(res) +
                          " exceeds 1e-12 (rcond = " + std::to_string(rc) + ")");
    }
  }
  return x;
}

} // namespace pcell
