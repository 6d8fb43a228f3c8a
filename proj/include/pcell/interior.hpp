#ifndef PCELL_INTERIOR_HPP
#define PCELL_INTERIOR_HPP

#include <iosfwd>
#include <vector>

#include "pcell/local_function.hpp"

namespace pcell {

/// Points at which to evaluate a prepared function in the cell interior.
/// Points closer than epsilon to the boundary are skipped, not evaluated.
/// The Cauchy quadrature runs on a 2^refinement-times finer node set with the
/// solved traces interpolated spectrally; that keeps the near-boundary error
/// floor at exp(-2 pi epsilon / spacing) manageable on coarse samplings.
struct InteriorQuery {
  std::vector<Vec2> points;
  double epsilon = 0.02;
  int refinement = 2;
};

struct InteriorValue {
  Vec2 point;
  double v = 0.0;
  Vec2 grad;
  bool skipped = false;    ///< within epsilon of the boundary
  bool in_domain = false;  ///< winding-number classification
};

/// Cauchy's integral formula applied to f = psi + i psi_hat over the oriented
/// boundary chain, plus direct evaluation of the polynomial and logarithmic
/// parts. The gradient uses the squared-denominator formula for f'.
std::vector<InteriorValue> cauchy_eval(const PreparedFunction& f, const InteriorQuery& q);

std::vector<Vec2> grid_points(Vec2 lo, Vec2 hi, int resolution);

/// CSV: x1, x2, v, dv_dx1, dv_dx2, skipped, in_domain.
void write_interior_csv(std::ostream& os, const std::vector<InteriorValue>& vals);

} // namespace pcell

#endif
