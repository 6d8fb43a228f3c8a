#ifndef PCELL_TRACE_OPS_HPP
#define PCELL_TRACE_OPS_HPP

#include <span>
#include <vector>

#include "pcell/fourier.hpp"
#include "pcell/sampled_boundary.hpp"

namespace pcell {

/// d/dt of a boundary trace with respect to the local edge parameter, computed
/// by spectral differentiation applied to each component separately.
std::vector<double> weighted_tangential_derivative(const SampledBoundary& sb,
                                                   std::span<const double> trace);

/// Per-component zero-mean spectral antiderivative of a weighted tangential
/// derivative g = d/dt[f(x(t))]. Reports the largest subtracted mean
/// coefficient if requested (nonzero means inconsistent input data).
std::vector<double> component_antiderivative(const SampledBoundary& sb,
                                             std::span<const double> g,
                                             double* max_mean_coefficient = nullptr);

/// Trigonometric interpolation of per-node values onto a 2^m-times finer
/// sampling of the same cell, component by component.
std::vector<double> trig_interpolate_boundary(const SampledBoundary& sb,
                                              std::span<const double> values, int m);

} // namespace pcell

#endif
