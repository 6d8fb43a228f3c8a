#include "pcell/harmonic.hpp"

#include "pcell/nystrom.hpp"
#include "pcell/trace_ops.hpp"

namespace pcell {

HarmonicSolver::HarmonicSolver(std::shared_ptr<const SampledBoundary> sb,
                               SolverChoice choice, double tol)
    : sb_(std::move(sb)), logs_(*sb_), choice_(choice), tol_(tol) {
  const SampledBoundary& b = *sb_;
  const int N = b.size();
  const int m = b.hole_count();
  const double h = b.step();
  const double perim = b.perimeter();

  plain_ = build_dlp_operator(b);

  augmented_ = Eigen::MatrixXd::Zero(N + m, N + m);
  augmented_.topLeftCorner(N, N) = plain_;
  for (int j = 0; j < m; ++j) {
    const auto col = apply_slp_weighted(b, logs_.weighted_tangential(j));
    for (int i = 0; i < N; ++i) augmented_(i, N + j) = -col[i];
  }
  // Moment rows, scaled by the perimeter to balance the system.
  for (int l = 0; l < m; ++l) {
    for (int i = 0; i < N; ++i)
      augmented_(N + l, i) = -h * logs_.weighted_tangential(l)[i] / perim;
    for (int j = 0; j < m; ++j) {
      double s = 0.0;
      for (int i = 0; i < N; ++i) s += logs_.trace(j)[i] * logs_.weighted_normal(l)[i];
      augmented_(N + l, N + j) = h * s / perim;
    }
  }

  if (choice_ == SolverChoice::DirectLU) {
    plain_lu_.compute(plain_);
    augmented_lu_.compute(augmented_);
    if (plain_lu_.rcond() < 1e-15 || augmented_lu_.rcond() < 1e-15)
      throw SolverError("Nystrom operator is singular to working precision");
  }
}

Eigen::VectorXd HarmonicSolver::solve_augmented(const Eigen::VectorXd& rhs) const {
  if (choice_ == SolverChoice::Gmres) return gmres(augmented_, rhs, tol_);
  Eigen::VectorXd x = augmented_lu_.solve(rhs);
  x += augmented_lu_.solve(rhs - augmented_ * x);
  return x;
}

Eigen::VectorXd HarmonicSolver::solve_plain(const Eigen::VectorXd& rhs) const {
  if (choice_ == SolverChoice::Gmres) return gmres(plain_, rhs, tol_);
  Eigen::VectorXd x = plain_lu_.solve(rhs);
  x += plain_lu_.solve(rhs - plain_ * x);
  return x;
}

HarmonicDecomposition solve_conjugate_augmented(const HarmonicSolver& solver,
                                                std::span<const double> phi_trace) {
  const SampledBoundary& b = solver.boundary();
  const LogFamily& logs = solver.logs();
  const int N = b.size();
  const int m = b.hole_count();
  const double h = b.step();
  const double perim = b.perimeter();

  HarmonicDecomposition hd;
  hd.phi.assign(phi_trace.begin(), phi_trace.end());
  hd.dphi_dt = weighted_tangential_derivative(b, phi_trace);

  Eigen::VectorXd rhs(N + m);
  const auto slp = apply_slp_weighted(b, hd.dphi_dt);
  for (int i = 0; i < N; ++i) rhs(i) = -slp[i];
  for (int l = 0; l < m; ++l) {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += hd.phi[i] * logs.weighted_normal(l)[i];
    rhs(N + l) = h * s / perim;
  }

  const Eigen::VectorXd x = solver.solve_augmented(rhs);
  hd.psi_hat.assign(x.data(), x.data() + N);
  hd.a.assign(x.data() + N, x.data() + N + m);
  hd.psi = hd.phi;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < N; ++i) hd.psi[i] -= hd.a[j] * logs.trace(j)[i];
  return hd;
}

std::vector<double> dtn_weighted_normal_derivative(const HarmonicDecomposition& hd,
                                                   const SampledBoundary& sb,
                                                   const LogFamily& logs) {
  std::vector<double> wnd = weighted_tangential_derivative(sb, hd.psi_hat);
  for (size_t j = 0; j < hd.a.size(); ++j)
    for (int i = 0; i < sb.size(); ++i) wnd[i] += hd.a[j] * logs.weighted_normal(j)[i];
  return wnd;
}

HarmonicDecomposition HarmonicSolver::analyze(std::span<const double> phi_trace) const {
  HarmonicDecomposition hd = solve_conjugate_augmented(*this, phi_trace);
  hd.wnd = dtn_weighted_normal_derivative(hd, *sb_, logs_);
  return hd;
}

std::vector<double> HarmonicSolver::neumann_trace(std::span<const double> weighted_neumann) const {
  const int N = sb_->size();
  const auto slp = apply_slp_weighted(*sb_, weighted_neumann);
  Eigen::VectorXd rhs(N);
  for (int i = 0; i < N; ++i) rhs(i) = slp[i];
  const Eigen::VectorXd x = solve_plain(rhs);
  return {x.data(), x.data() + N};
}

} // namespace pcell
