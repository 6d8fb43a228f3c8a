#ifndef PCELL_ORACLE_HPP
#define PCELL_ORACLE_HPP

#include <functional>
#include <optional>

#include "pcell/cell.hpp"

namespace pcell {
namespace oracle {

/// Brute-force volumetric quadratures over the benchmark shapes, independent
/// of the boundary-reduction pipeline. Piecewise tensor Gauss with cosine
/// substitutions where column heights have square-root kinks.
using Integrand = std::function<double(Vec2)>;

double rectangle(Vec2 lo, Vec2 hi, const Integrand& f, int order);
double disk(Vec2 center, double radius, const Integrand& f, int order);
double annulus(Vec2 center, double r0, double r1, const Integrand& f, int order);
/// Unit square minus the centered disk of the given radius.
double punctured_square(double hole_radius, const Integrand& f, int order);
/// Unit-circle sector theta in (pi/6, 11pi/6) minus the disk of radius 1/4 at
/// (-1/10, 1/2). Radial cos^2 substitution tames r^alpha integrands at the tip.
double pacman(const Integrand& f, int order);
/// Sinusoid bottom, vertical sides, circular-arc top, two elliptical holes.
double ghost(const Integrand& f, int order);

/// Dispatch by benchmark cell name; empty if no oracle covers the shape.
std::optional<double> integrate_named_cell(const std::string& name, const Integrand& f,
                                           int order);

} // namespace oracle
} // namespace pcell

#endif
