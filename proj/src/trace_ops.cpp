#include "pcell/trace_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcell {

namespace {

void check_length(const SampledBoundary& sb, size_t got) {
  if (static_cast<int>(got) != sb.size())
    throw std::invalid_argument("trace length does not match boundary node count");
}

} // namespace

std::vector<double> weighted_tangential_derivative(const SampledBoundary& sb,
                                                   std::span<const double> trace) {
  check_length(sb, trace.size());
  std::vector<double> out(trace.size());
  for (int c = 0; c < sb.component_count(); ++c) {
    const int b = sb.component_begin(c), e = sb.component_end(c);
    PeriodicSamples s(std::vector<double>(trace.begin() + b, trace.begin() + e));
    PeriodicSamples d = fft_derivative(s);
    // spectral derivative is w.r.t. the 2pi-rescaled component parameter
    const double scale = 1.0 / sb.component_edge_count(c);
    for (int i = b; i < e; ++i) out[i] = d.values[i - b] * scale;
  }
  return out;
}

std::vector<double> component_antiderivative(const SampledBoundary& sb,
                                             std::span<const double> g,
                                             double* max_mean_coefficient) {
  check_length(sb, g.size());
  std::vector<double> out(g.size());
  double worst = 0.0;
  for (int c = 0; c < sb.component_count(); ++c) {
    const int b = sb.component_begin(c), e = sb.component_end(c);
    PeriodicSamples s(std::vector<double>(g.begin() + b, g.begin() + e));
    AntiderivativeResult r = fft_antiderivative(s);
    worst = std::max(worst, r.mean_coefficient);
    const double scale = sb.component_edge_count(c);
    for (int i = b; i < e; ++i) out[i] = r.samples.values[i - b] * scale;
  }
  if (max_mean_coefficient) *max_mean_coefficient = worst;
  return out;
}

std::vector<double> trig_interpolate_boundary(const SampledBoundary& sb,
                                              std::span<const double> values, int m) {
  check_length(sb, values.size());
  if (m == 0) return {values.begin(), values.end()};
  std::vector<double> out;
  out.reserve(values.size() << m);
  for (int c = 0; c < sb.component_count(); ++c) {
    const int b = sb.component_begin(c), e = sb.component_end(c);
    PeriodicSamples s(std::vector<double>(values.begin() + b, values.begin() + e));
    PeriodicSamples fine = trig_interpolate(s, m);
    out.insert(out.end(), fine.values.begin(), fine.values.end());
  }
  return out;
}

} // namespace pcell
