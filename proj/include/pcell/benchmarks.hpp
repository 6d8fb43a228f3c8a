#ifndef PCELL_BENCHMARKS_HPP
#define PCELL_BENCHMARKS_HPP

#include <string>
#include <vector>

#include "pcell/cell.hpp"
#include "pcell/local_function.hpp"
#include "pcell/poly.hpp"

namespace pcell {

/// One term of the closed expression vocabulary used for benchmark traces and
/// CLI function specs: polynomials, ln|x-c|, Re/Im of 1/(z-c), e^{x1}cos(x2),
/// e^{x1}sin(x2), and r^alpha sin(alpha theta) about a vertex.
struct AnalyticTerm {
  enum class Type { Poly, Log, RationalRe, RationalIm, ExpRe, ExpIm, CornerPow };
  Type type = Type::Poly;
  double coef = 1.0;
  Vec2 point;                   ///< singular point / vertex where applicable
  double alpha = 0.5;           ///< CornerPow exponent
  double branch_rotation = 0.0; ///< CornerPow branch-cut direction
  BivariatePolynomial poly;

  double value(Vec2 x) const;
  Vec2 gradient(Vec2 x) const;
};

/// Sum of terms; value and gradient are evaluable away from the singular
/// points, and the Laplacian is the polynomial contributed by the Poly terms.
struct AnalyticFunction {
  std::vector<AnalyticTerm> terms;

  double value(Vec2 x) const;
  Vec2 gradient(Vec2 x) const;
  BivariatePolynomial laplacian() const;
  LocalPoissonFunction sample(const SampledBoundary& sb) const;
};

PuncturedCell make_punctured_square(); ///< unit square, disk hole r = 1/4 at center
PuncturedCell make_pacman();           ///< unit sector theta in (pi/6, 11pi/6), disk hole
PuncturedCell make_ghost();            ///< sinusoid / arc outline with two ellipse holes
PuncturedCell make_annulus(double r0 = 0.5, double r1 = 1.0);
PuncturedCell make_unit_square();      ///< no hole; test helper
PuncturedCell make_unit_circle();

struct Benchmark {
  std::string name;
  PuncturedCell cell;
  AnalyticFunction v, w;
  double h1_reference = 0.0;
  double l2_reference = 0.0;
};

const std::vector<std::string>& benchmark_names();
Benchmark benchmark(const std::string& name);

/// Errors of the intermediate quantities on the punctured square benchmark,
/// in the gauge-aligned L2 boundary metrics.
struct IntermediateErrors {
  double a1 = 0.0;
  double psi_hat = 0.0;  ///< constant-aligned L2(dK) error
  double wnd = 0.0;      ///< plain L2(dK) error of the weighted normal derivative
  double antilap = 0.0;  ///< linear-aligned L2(dK) error of Phi
};
IntermediateErrors example1_intermediate_errors(const PreparedFunction& v);

/// L2(dK) distance between traces after subtracting the best constant.
double constant_aligned_l2_error(const SampledBoundary& sb, std::span<const double> computed,
                                 std::span<const double> exact);
/// L2(dK) distance after subtracting the best c1 x1 + c2 x2.
double linear_aligned_l2_error(const SampledBoundary& sb, std::span<const double> computed,
                               std::span<const double> exact);

} // namespace pcell

#endif
