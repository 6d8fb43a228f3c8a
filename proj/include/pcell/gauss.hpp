#ifndef PCELL_GAUSS_HPP
#define PCELL_GAUSS_HPP

#include <functional>
#include <vector>

namespace pcell {

/// Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on the
/// three-term recurrence.
struct GaussRule {
  std::vector<double> nodes, weights;
  explicit GaussRule(int n);
};

double gauss_integrate(const GaussRule& rule, double a, double b,
                       const std::function<double(double)>& f);

} // namespace pcell

#endif
