#ifndef PCELL_POLY_HPP
#define PCELL_POLY_HPP

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "pcell/vec2.hpp"

namespace pcell {

class SampledBoundary;

/// Dense bivariate polynomial, stored as a multi-index -> coefficient map.
/// Total degree is capped at 16; operations that would exceed the cap throw.
class BivariatePolynomial {
 public:
  using Index = std::array<int, 2>;
  static constexpr int kMaxDegree = 16;

  BivariatePolynomial() = default;
  /// Build from (alpha1, alpha2, coefficient) triples.
  BivariatePolynomial(std::initializer_list<std::tuple<int, int, double>> terms);
  explicit BivariatePolynomial(const std::vector<std::tuple<int, int, double>>& terms);

  static BivariatePolynomial constant(double c);
  static BivariatePolynomial monomial(int a1, int a2, double c = 1.0);

  const std::map<Index, double>& coefficients() const { return coef_; }
  bool empty() const { return coef_.empty(); }
  int degree() const; ///< total degree, -1 for the zero polynomial
  double coefficient(int a1, int a2) const;

  double operator()(Vec2 p) const;
  Vec2 gradient(Vec2 p) const;

  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial operator-(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(double s) const;
  BivariatePolynomial& operator+=(const BivariatePolynomial& o);

  BivariatePolynomial dx() const;
  BivariatePolynomial dy() const;
  BivariatePolynomial laplacian() const;

  /// Largest absolute coefficient difference; used by coefficientwise tests.
  double max_coefficient_difference(const BivariatePolynomial& o) const;

  std::string to_string() const;

 private:
  void add_term(int a1, int a2, double c);
  void prune();
  void check_degree() const;

  std::map<Index, double> coef_;
};

/// Polynomial anti-Laplacian: returns R with laplacian(R) == q exactly on
/// coefficients, built term-by-term from the explicit formula for monomials.
BivariatePolynomial anti_laplacian_poly(const BivariatePolynomial& q);

/// Exact integral of q over the cell, reduced to boundary quadrature through
/// the Divergence Theorem identity for monomial moments.
double integrate_poly_over_cell(const BivariatePolynomial& q, const SampledBoundary& sb);

} // namespace pcell

#endif
