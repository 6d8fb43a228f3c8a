#ifndef PCELL_FOURIER_HPP
#define PCELL_FOURIER_HPP

#include <complex>
#include <vector>

namespace pcell {

/// Real samples of a 2pi-periodic function at equispaced nodes t_k = 2 pi k / size.
/// One boundary component at a time; concatenations of components are invalid
/// input for the spectral operators below.
struct PeriodicSamples {
  std::vector<double> values;

  PeriodicSamples() = default;
  explicit PeriodicSamples(std::vector<double> v) : values(std::move(v)) {}
  int size() const { return static_cast<int>(values.size()); }
};

struct AntiderivativeResult {
  PeriodicSamples samples;    ///< zero-mean antiderivative at the same nodes
  double mean_coefficient;    ///< |omega_0| that was subtracted before inversion
  bool mean_warning = false;  ///< |omega_0| > 1e-6 ||s||: inconsistent input data
};

/// Samples of G' from samples of G via coefficients i k omega_k.
/// The Nyquist-mode derivative coefficient is set to zero.
PeriodicSamples fft_derivative(const PeriodicSamples& s);

/// Zero-mean antiderivative via coefficients omega_k / (i k), k != 0.
/// A numerically nonzero omega_0 is subtracted first and reported back.
AntiderivativeResult fft_antiderivative(const PeriodicSamples& s);

/// Trigonometric interpolation to 2^m times as many equispaced nodes
/// (zero-padded spectrum). m = 0 is the identity.
PeriodicSamples trig_interpolate(const PeriodicSamples& s, int m);

/// Forward/inverse DFT used by the operators above (arbitrary length,
/// unnormalized forward, 1/N on the inverse).
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in);
std::vector<std::complex<double>> idft(const std::vector<std::complex<double>>& in);

} // namespace pcell

#endif
