#ifndef PCELL_ANTILAPLACIAN_HPP
#define PCELL_ANTILAPLACIAN_HPP

#include <span>
#include <vector>

#include "pcell/harmonic.hpp"

namespace pcell {

/// Residue pairs (b_j, c_j) of g = psi + i psi_hat around each hole,
/// alpha_j = b_j + i c_j. Zero whenever g extends analytically across the holes.
struct RationalPartCoefficients {
  std::vector<double> b, c;
  int size() const { return static_cast<int>(b.size()); }
};

/// b_j = -(2pi)^-1 oint_{dK_j} (psi_hat, psi) . t ds,
/// c_j =  (2pi)^-1 oint_{dK_j} (psi, -psi_hat) . t ds, holes traversed clockwise.
RationalPartCoefficients rational_coefficients(const SampledBoundary& sb,
                                               std::span<const double> psi,
                                               std::span<const double> psi_hat);

/// Boundary data of an anti-Laplacian Phi of the harmonic function behind a
/// decomposition. Phi is determined only up to an additive linear function.
struct AntiLaplacianTrace {
  std::vector<double> value;     ///< Phi at nodes
  std::vector<double> wnd;       ///< grad Phi . weighted normal
  std::vector<double> rho, rho_hat; ///< potentials rho_0, rho_hat_0 (mean-zero gauge)
  RationalPartCoefficients rational;
  double neumann_compatibility = 0.0; ///< max per-component |oint F0 . n ds|
};

/// Five-step recipe: rational coefficients, conservative reduction, two
/// Neumann-type solves (reusing the factorized plain operator), assembly of
/// Phi and its weighted normal derivative. Simply connected cells bounded by
/// a single smooth closed contour take the spectral antiderivative shortcut
/// instead of the Neumann solves.
AntiLaplacianTrace anti_laplacian_harmonic(const HarmonicSolver& solver,
                                           const HarmonicDecomposition& hd);

} // namespace pcell

#endif
