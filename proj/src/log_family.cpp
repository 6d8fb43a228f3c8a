#include "pcell/log_family.hpp"

#include <cmath>

namespace pcell {

LogFamily::LogFamily(const SampledBoundary& sb) : m_(sb.hole_count()) {
  const int N = sb.size();
  wn_.resize(N);
  for (int i = 0; i < N; ++i) wn_[i] = sb.weighted_normal(i);

  rel_.resize(m_);
  trace_.resize(m_);
  wtan_.resize(m_);
  wnorm_.resize(m_);
  mu_.resize(m_);
  mu_hat_.resize(m_);
  biglambda_.resize(m_);
  biglambda_wnd_.resize(m_);

  for (int j = 0; j < m_; ++j) {
    const Vec2 xi = sb.anchor(j);
    xi_.push_back(xi);
    rel_[j].resize(N);
    trace_[j].resize(N);
    wtan_[j].resize(N);
    wnorm_[j].resize(N);
    mu_[j].resize(N);
    mu_hat_[j].resize(N);
    biglambda_[j].resize(N);
    biglambda_wnd_[j].resize(N);
    for (int i = 0; i < N; ++i) {
      const Vec2 r = sb.point(i) - xi;
      const double r2 = r.norm2();
      const double lam = 0.5 * std::log(r2);
      rel_[j][i] = r;
      trace_[j][i] = lam;
      wtan_[j][i] = r.dot(sb.derivative(i)) / r2;
      wnorm_[j][i] = r.dot(wn_[i]) / r2;
      mu_[j][i] = r.x / r2;
      mu_hat_[j][i] = -r.y / r2;
      biglambda_[j][i] = 0.25 * r2 * (lam - 1.0);
      biglambda_wnd_[j][i] = 0.25 * (2.0 * lam - 1.0) * r.dot(wn_[i]);
    }
  }
}

double LogFamily::m_trace(int j, int i, double b, double c) const {
  const Vec2 r = rel_[j][i];
  return 0.5 * (b * r.x + c * r.y) * trace_[j][i];
}

double LogFamily::m_weighted_normal(int j, int i, double b, double c) const {
  const Vec2 r = rel_[j][i];
  const double scalar = 0.5 * (b * mu_[j][i] - c * mu_hat_[j][i]);
  const Vec2 grad = r * scalar + Vec2(b, c) * (0.5 * trace_[j][i]);
  return grad.dot(wn_[i]);
}

double LogFamily::lambda(Vec2 x, Vec2 xi) { return std::log((x - xi).norm()); }

Vec2 LogFamily::lambda_gradient(Vec2 x, Vec2 xi) {
  const Vec2 r = x - xi;
  return r / r.norm2();
}

double LogFamily::antilap_lambda(Vec2 x, Vec2 xi) {
  const double r2 = (x - xi).norm2();
  return 0.25 * r2 * (0.5 * std::log(r2) - 1.0);
}

Vec2 LogFamily::antilap_lambda_gradient(Vec2 x, Vec2 xi) {
  const Vec2 r = x - xi;
  return r * (0.25 * (2.0 * LogFamily::lambda(x, xi) - 1.0));
}

} // namespace pcell
