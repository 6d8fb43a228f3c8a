#include "pcell/interior.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>

#include "pcell/trace_ops.hpp"

namespace pcell {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

std::vector<InteriorValue> cauchy_eval(const PreparedFunction& f, const InteriorQuery& q) {
  const SampledBoundary& sb0 = f.solver->boundary();
  const int m = sb0.hole_count();

  // Quadrature nodes: spectrally refined sampling of the same cell, with the
  // solved traces carried over by trigonometric interpolation.
  const int refine = std::max(0, q.refinement);
  std::optional<SampledBoundary> fine;
  if (refine > 0)
    fine.emplace(sb0.cell(), sb0.half_points() << refine, sb0.sigma());
  const SampledBoundary& sb = fine ? *fine : sb0;
  const int N = sb.size();
  const double h = sb.step();
  const std::vector<double> psi = trig_interpolate_boundary(sb0, f.hd.psi, refine);
  const std::vector<double> psi_hat = trig_interpolate_boundary(sb0, f.hd.psi_hat, refine);

  // The epsilon exclusion guards against the |zeta - z| factors in the Cauchy
  // kernels, so it must measure distance to the curve rather than to the
  // quadrature nodes; a dense resampling of the cell stands in for the curve.
  std::optional<SampledBoundary> dense_store;
  const SampledBoundary* dense_ptr = &sb;
  if (sb.half_points() < 256) {
    dense_store.emplace(sb.cell(), 256, sb.sigma());
    dense_ptr = &*dense_store;
  }

  std::vector<std::complex<double>> fz(N), dz(N), zeta(N);
  for (int i = 0; i < N; ++i) {
    fz[i] = {psi[i], psi_hat[i]};
    dz[i] = {sb.derivative(i).x, sb.derivative(i).y};
    zeta[i] = {sb.point(i).x, sb.point(i).y};
  }

  std::vector<InteriorValue> out;
  out.reserve(q.points.size());
  for (const Vec2 p : q.points) {
    InteriorValue val;
    val.point = p;
    val.in_domain = std::abs(sb.winding_number(p) - 1.0) < 0.5;
    val.skipped = dense_ptr->min_distance(p) < q.epsilon;
    if (!val.in_domain || val.skipped) {
      out.push_back(val);
      continue;
    }
    const std::complex<double> z{p.x, p.y};
    std::complex<double> c0 = 0.0, c1 = 0.0;
    for (int i = 0; i < N; ++i) {
      const std::complex<double> d = zeta[i] - z;
      c0 += fz[i] * dz[i] / d;
      c1 += fz[i] * dz[i] / (d * d);
    }
    const std::complex<double> scale{0.0, -h / (2.0 * kPi)}; // 1/(2 pi i) * h
    const std::complex<double> psi_z = scale * c0;
    const std::complex<double> dpsi_z = scale * c1;

    val.v = psi_z.real() + f.poly_part(p);
    val.grad = Vec2(dpsi_z.real(), -dpsi_z.imag()) + f.poly_part.gradient(p);
    for (int j = 0; j < m; ++j) {
      val.v += f.hd.a[j] * LogFamily::lambda(p, sb.anchor(j));
      val.grad += LogFamily::lambda_gradient(p, sb.anchor(j)) * f.hd.a[j];
    }
    out.push_back(val);
  }
  return out;
}

std::vector<Vec2> grid_points(Vec2 lo, Vec2 hi, int resolution) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(resolution) * resolution);
  for (int iy = 0; iy < resolution; ++iy)
    for (int ix = 0; ix < resolution; ++ix)
      pts.push_back({lo.x + (hi.x - lo.x) * (ix + 0.5) / resolution,
                     lo.y + (hi.y - lo.y) * (iy + 0.5) / resolution});
  return pts;
}

void write_interior_csv(std::ostream& os, const std::vector<InteriorValue>& vals) {
  os << "x1,x2,v,dv_dx1,dv_dx2,skipped,in_domain\n";
  char buf[220];
  for (const auto& v : vals) {
    std::snprintf(buf, sizeof(buf), "%.15e,%.15e,%.15e,%.15e,%.15e,%d,%d\n", v.point.x,
                  v.point.y, v.v, v.grad.x, v.grad.y, v.skipped ? 1 : 0, v.in_domain ? 1 : 0);
    os << buf;
  }
}

} // namespace pcell
