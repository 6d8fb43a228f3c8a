#include "pcell/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace pcell {

namespace {

// The FFTW planner is not reentrant; executing a plan is.
std::mutex g_planner_mutex;

std::vector<std::complex<double>> run_fftw(const std::vector<std::complex<double>>& in, int sign) {
  const int n = static_cast<int>(in.size());
  std::vector<std::complex<double>> out(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    plan = fftw_plan_dft_1d(
        n,
        reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
        reinterpret_cast<fftw_complex*>(out.data()),
        sign, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}

void check_even(const PeriodicSamples& s) {
  if (s.size() < 4 || s.size() % 2 != 0)
    throw std::invalid_argument("periodic samples must have even length >= 4");
}

std::vector<std::complex<double>> to_complex(const PeriodicSamples& s) {
  std::vector<std::complex<double>> c(s.values.size());
  for (size_t i = 0; i < s.values.size(); ++i) c[i] = s.values[i];
  return c;
}

PeriodicSamples to_real(const std::vector<std::complex<double>>& c) {
  PeriodicSamples s;
  s.values.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) s.values[i] = c[i].real();
  return s;
}

} // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in) {
  return run_fftw(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> idft(const std::vector<std::complex<double>>& in) {
  auto out = run_fftw(in, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(in.size());
  for (auto& v : out) v *= scale;
  return out;
}

PeriodicSamples fft_derivative(const PeriodicSamples& s) {
  check_even(s);
  const int n = s.size();
  auto spec = dft(to_complex(s));
  const std::complex<double> iu(0.0, 1.0);
  for (int k = 0; k < n; ++k) {
    int freq = (k <= n / 2) ? k : k - n;
    if (k == n / 2) freq = 0; // Nyquist derivative coefficient zeroed
    spec[k] *= iu * static_cast<double>(freq);
  }
  return to_real(idft(spec));
}

AntiderivativeResult fft_antiderivative(const PeriodicSamples& s) {
  check_even(s);
  const int n = s.size();
  auto spec = dft(to_complex(s));
  const double omega0 = std::abs(spec[0]) / n;
  const std::complex<double> iu(0.0, 1.0);
  spec[0] = 0.0;
  for (int k = 1; k < n; ++k) {
    const int freq = (k < n / 2) ? k : k - n;
    if (k == n / 2) {
      spec[k] = 0.0; // Nyquist: sin((n/2) t) vanishes on the grid anyway
      continue;
    }
    spec[k] /= iu * static_cast<double>(freq);
  }
  double norm = 0.0;
  for (double v : s.values) norm += v * v;
  norm = std::sqrt(norm / n);
  return {to_real(idft(spec)), omega0, omega0 > 1e-6 * norm};
}

PeriodicSamples trig_interpolate(const PeriodicSamples& s, int m) {
  check_even(s);
  if (m < 0) throw std::invalid_argument("refinement exponent must be >= 0");
  if (m == 0) return s;
  const int n = s.size();
  const int big = n << m;
  auto spec = dft(to_complex(s));
  std::vector<std::complex<double>> padded(big, 0.0);
  for (int k = 0; k < n / 2; ++k) padded[k] = spec[k];
  for (int k = n / 2 + 1; k < n; ++k) padded[big - n + k] = spec[k];
  padded[n / 2] = 0.5 * spec[n / 2];
  padded[big - n / 2] = 0.5 * spec[n / 2];
  const double scale = static_cast<double>(big) / n;
  for (auto& v : padded) v *= scale;
  return to_real(idft(padded));
}

} // namespace pcell
