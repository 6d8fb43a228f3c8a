#include "pcell/antilaplacian.hpp"

#include <cmath>

#include "pcell/trace_ops.hpp"

namespace pcell {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
} // namespace

RationalPartCoefficients rational_coefficients(const SampledBoundary& sb,
                                               std::span<const double> psi,
                                               std::span<const double> psi_hat) {
  RationalPartCoefficients rc;
  const double h = sb.step();
  for (int j = 0; j < sb.hole_count(); ++j) {
    double sb_j = 0.0, sc_j = 0.0;
    for (int i = sb.component_begin(j + 1); i < sb.component_end(j + 1); ++i) {
      const Vec2 t = sb.derivative(i);
      sb_j += psi_hat[i] * t.x + psi[i] * t.y;
      sc_j += psi[i] * t.x - psi_hat[i] * t.y;
    }
    rc.b.push_back(-h * sb_j / kTwoPi);
    rc.c.push_back(h * sc_j / kTwoPi);
  }
  return rc;
}

AntiLaplacianTrace anti_laplacian_harmonic(const HarmonicSolver& solver,
                                           const HarmonicDecomposition& hd) {
  const SampledBoundary& sb = solver.boundary();
  const LogFamily& logs = solver.logs();
  const int N = sb.size();
  const int m = sb.hole_count();
  const double h = sb.step();

  AntiLaplacianTrace out;
  out.rational = rational_coefficients(sb, hd.psi, hd.psi_hat);

  // Conservative part: psi_0 = psi - sum (b mu - c mu_hat), and its conjugate.
  std::vector<double> psi0 = hd.psi, psi0_hat = hd.psi_hat;
  for (int j = 0; j < m; ++j) {
    const double b = out.rational.b[j], c = out.rational.c[j];
    for (int i = 0; i < N; ++i) {
      psi0[i] -= b * logs.mu(j)[i] - c * logs.mu_hat(j)[i];
      psi0_hat[i] -= c * logs.mu(j)[i] + b * logs.mu_hat(j)[i];
    }
  }

  const bool smooth_single_contour =
      m == 0 && sb.component_count() == 1 && sb.component_edge_count(0) == 1 &&
      sb.cell().outer().edges()[0].closed();

  if (smooth_single_contour) {
    // FFT antiderivative of the tangential data of rho and rho_hat; the
    // subtracted mean coefficient doubles as the compatibility diagnostic.
    std::vector<double> g(N), g_hat(N);
    for (int i = 0; i < N; ++i) {
      const Vec2 t = sb.derivative(i);
      g[i] = psi0[i] * t.x - psi0_hat[i] * t.y;
      g_hat[i] = psi0_hat[i] * t.x + psi0[i] * t.y;
    }
    double m0 = 0.0, m1 = 0.0;
    out.rho = component_antiderivative(sb, g, &m0);
    out.rho_hat = component_antiderivative(sb, g_hat, &m1);
    out.neumann_compatibility = std::max(m0, m1);
  } else {
    std::vector<double> f0n(N), f0hat_n(N);
    for (int i = 0; i < N; ++i) {
      const Vec2 wn = sb.weighted_normal(i);
      f0n[i] = psi0[i] * wn.x - psi0_hat[i] * wn.y;
      f0hat_n[i] = psi0_hat[i] * wn.x + psi0[i] * wn.y;
    }
    // Compatibility of the Neumann data: fluxes vanish per component once the
    // rational part has been removed.
    for (int c = 0; c < sb.component_count(); ++c) {
      double flux = 0.0, flux_hat = 0.0;
      for (int i = sb.component_begin(c); i < sb.component_end(c); ++i) {
        flux += f0n[i];
        flux_hat += f0hat_n[i];
      }
      out.neumann_compatibility =
          std::max({out.neumann_compatibility, std::abs(h * flux), std::abs(h * flux_hat)});
    }
    out.rho = solver.neumann_trace(f0n);
    out.rho_hat = solver.neumann_trace(f0hat_n);
  }

  out.value.resize(N);
  out.wnd.resize(N);
  for (int i = 0; i < N; ++i) {
    const Vec2 x = sb.point(i);
    const Vec2 wn = sb.weighted_normal(i);
    double val = 0.25 * (x.x * out.rho[i] + x.y * out.rho_hat[i]);
    double wnd = 0.25 * ((out.rho[i] + x.x * psi0[i] + x.y * psi0_hat[i]) * wn.x +
                         (out.rho_hat[i] - x.x * psi0_hat[i] + x.y * psi0[i]) * wn.y);
    for (int j = 0; j < m; ++j) {
      const double b = out.rational.b[j], c = out.rational.c[j];
      val += logs.m_trace(j, i, b, c) + hd.a[j] * logs.antilap_trace(j)[i];
      wnd += logs.m_weighted_normal(j, i, b, c) + hd.a[j] * logs.antilap_weighted_normal(j)[i];
    }
    out.value[i] = val;
    out.wnd[i] = wnd;
  }
  return out;
}

} // namespace pcell
