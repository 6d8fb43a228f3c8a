#include "pcell/local_function.hpp"

#include <optional>
#include <stdexcept>

#include "pcell/trace_ops.hpp"

namespace pcell {

namespace {

void check_pair(const PreparedFunction& u, const PreparedFunction& w) {
  if (!u.solver || !w.solver || u.solver != w.solver)
    throw std::invalid_argument("inner products require functions prepared on the same cell");
}

struct SideData {
  std::vector<double> trace, phi, wnd, antilap, antilap_wnd;
};

SideData side_data(const PreparedFunction& f, const SampledBoundary& sb, int m) {
  if (m == 0)
    return {f.trace, f.phi, f.hd.wnd, f.anti.value, f.anti.wnd};
  return {trig_interpolate_boundary(sb, f.trace, m),
          trig_interpolate_boundary(sb, f.phi, m),
          trig_interpolate_boundary(sb, f.hd.wnd, m),
          trig_interpolate_boundary(sb, f.anti.value, m),
          trig_interpolate_boundary(sb, f.anti.wnd, m)};
}

} // namespace

PreparedFunction prepare(std::shared_ptr<const HarmonicSolver> solver,
                         const LocalPoissonFunction& f) {
  return prepare(std::move(solver), f, anti_laplacian_poly(f.laplacian));
}

PreparedFunction prepare(std::shared_ptr<const HarmonicSolver> solver,
                         const LocalPoissonFunction& f,
                         const BivariatePolynomial& poly_part) {
  if (!solver) throw std::invalid_argument("prepare requires a solver");
  const SampledBoundary& sb = solver->boundary();
  if (static_cast<int>(f.trace.size()) != sb.size())
    throw std::invalid_argument("trace length does not match boundary node count");
  if (poly_part.laplacian().max_coefficient_difference(f.laplacian) > 1e-10)
    throw std::invalid_argument("polynomial part is not an anti-Laplacian of the Laplacian");

  PreparedFunction p;
  p.solver = std::move(solver);
  p.trace = f.trace;
  p.laplacian = f.laplacian;
  p.poly_part = poly_part;
  p.poly_trace.resize(sb.size());
  p.phi.resize(sb.size());
  for (int i = 0; i < sb.size(); ++i) {
    p.poly_trace[i] = poly_part(sb.point(i));
    p.phi[i] = f.trace[i] - p.poly_trace[i];
  }
  p.hd = p.solver->analyze(p.phi);
  p.anti = anti_laplacian_harmonic(*p.solver, p.hd);
  return p;
}

double h1_semi(const PreparedFunction& u, const PreparedFunction& w,
               const InnerProductOptions& opt) {
  check_pair(u, w);
  const SampledBoundary& sb0 = u.solver->boundary();
  const int m = opt.interpolation_refinement;
  std::optional<SampledBoundary> refined;
  if (m > 0)
    refined.emplace(sb0.cell(), sb0.half_points() << m, sb0.sigma());
  const SampledBoundary& sb = refined ? *refined : sb0;
  const double h = sb.step();

  const SideData du = side_data(u, sb0, m);
  const SideData dw = side_data(w, sb0, m);

  double t1 = 0.0, t2 = 0.0;
  for (int i = 0; i < sb.size(); ++i) {
    t1 += dw.trace[i] * du.wnd[i];
    t2 += u.poly_part(sb.point(i)) * dw.wnd[i];
  }
  const double t3 =
      integrate_poly_over_cell(u.poly_part.dx() * w.poly_part.dx() +
                                   u.poly_part.dy() * w.poly_part.dy(),
                               sb0);
  return h * (t1 + t2) + t3;
}

double l2(const PreparedFunction& u, const PreparedFunction& w,
          const InnerProductOptions& opt) {
  check_pair(u, w);
  const SampledBoundary& sb0 = u.solver->boundary();
  const int m = opt.interpolation_refinement;
  std::optional<SampledBoundary> refined;
  if (m > 0)
    refined.emplace(sb0.cell(), sb0.half_points() << m, sb0.sigma());
  const SampledBoundary& sb = refined ? *refined : sb0;
  const double h = sb.step();

  const SideData du = side_data(u, sb0, m);
  const SideData dw = side_data(w, sb0, m);

  const BivariatePolynomial ru = anti_laplacian_poly(u.poly_part);
  const BivariatePolynomial rw = anti_laplacian_poly(w.poly_part);

  double s = 0.0;
  for (int i = 0; i < sb.size(); ++i) {
    const Vec2 x = sb.point(i);
    const Vec2 wn = sb.weighted_normal(i);
    // int phi_u phi_w via the anti-Laplacian of phi_u
    s += dw.phi[i] * du.antilap_wnd[i] - du.antilap[i] * dw.wnd[i];
    // int P_w phi_u and int P_u phi_w via polynomial anti-Laplacians
    s += du.phi[i] * rw.gradient(x).dot(wn) - rw(x) * du.wnd[i];
    s += dw.phi[i] * ru.gradient(x).dot(wn) - ru(x) * dw.wnd[i];
  }
  const double t4 = integrate_poly_over_cell(u.poly_part * w.poly_part, sb0);
  return h * s + t4;
}

} // namespace pcell
