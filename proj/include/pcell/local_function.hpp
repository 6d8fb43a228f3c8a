#ifndef PCELL_LOCAL_FUNCTION_HPP
#define PCELL_LOCAL_FUNCTION_HPP

#include <memory>

#include "pcell/antilaplacian.hpp"
#include "pcell/harmonic.hpp"
#include "pcell/poly.hpp"

namespace pcell {

/// Element of the local Poisson space V_p(K): a continuous Dirichlet trace
/// sampled at the boundary nodes plus the polynomial Laplacian (degree <= p-2).
struct LocalPoissonFunction {
  std::vector<double> trace;
  BivariatePolynomial laplacian;
};

/// All boundary data needed to enter inner-product quadratures: polynomial
/// part P with anti-Laplacian of the Laplacian, harmonic remainder phi = v - P,
/// its DtN decomposition and the anti-Laplacian trace. Immutable.
struct PreparedFunction {
  std::shared_ptr<const HarmonicSolver> solver;
  std::vector<double> trace;
  BivariatePolynomial laplacian;
  BivariatePolynomial poly_part;     ///< P with Delta P = laplacian
  std::vector<double> poly_trace;    ///< P at nodes
  std::vector<double> phi;           ///< v - P at nodes (harmonic part)
  HarmonicDecomposition hd;
  AntiLaplacianTrace anti;
};

PreparedFunction prepare(std::shared_ptr<const HarmonicSolver> solver,
                         const LocalPoissonFunction& f);

/// Variant with a caller-chosen polynomial anti-Laplacian of Delta v; results
/// downstream are invariant under the choice.
PreparedFunction prepare(std::shared_ptr<const HarmonicSolver> solver,
                         const LocalPoissonFunction& f,
                         const BivariatePolynomial& poly_part);

struct InnerProductOptions {
  /// Trigonometric interpolation refinement: quadratures run on 2^k times as
  /// many boundary points, with solved traces interpolated spectrally.
  int interpolation_refinement = 0;
};

/// H1 semi-inner product as pure boundary quadrature.
double h1_semi(const PreparedFunction& u, const PreparedFunction& w,
               const InnerProductOptions& opt = {});

/// L2 inner product as pure boundary quadrature.
double l2(const PreparedFunction& u, const PreparedFunction& w,
          const InnerProductOptions& opt = {});

} // namespace pcell

#endif
