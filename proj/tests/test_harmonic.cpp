#include <doctest.h>

#include <cmath>
#include <memory>

#include "pcell/benchmarks.hpp"
#include "pcell/harmonic.hpp"

using namespace pcell;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::shared_ptr<const HarmonicSolver> make_solver(const PuncturedCell& cell, int n,
                                                  SolverChoice c = SolverChoice::DirectLU) {
  auto sb = std::make_shared<const SampledBoundary>(cell, n);
  return std::make_shared<const HarmonicSolver>(sb, c);
}

std::vector<double> sample_trace(const SampledBoundary& sb,
                                 const std::function<double(Vec2)>& f) {
  std::vector<double> t(sb.size());
  for (int i = 0; i < sb.size(); ++i) t[i] = f(sb.point(i));
  return t;
}
} // namespace

TEST_CASE("conjugate of Re z^2 on an ellipse") {
  std::vector<ParametricEdge> outer = {
      ParametricEdge::ellipse({0, 0}, 1.5, 1.0, Orientation::CCW)};
  auto solver = make_solver(PuncturedCell("e", BoundaryComponent(outer)), 32);
  const SampledBoundary& sb = solver->boundary();
  const auto hd = solver->analyze(sample_trace(sb, [](Vec2 x) { return x.x * x.x - x.y * x.y; }));
  CHECK(hd.a.empty());
  const auto exact = sample_trace(sb, [](Vec2 x) { return 2.0 * x.x * x.y; });
  CHECK(constant_aligned_l2_error(sb, hd.psi_hat, exact) < 1e-10);
}

TEST_CASE("exact logarithmic solution on the annulus") {
  auto solver = make_solver(make_annulus(), 32);
  const SampledBoundary& sb = solver->boundary();
  const auto hd = solver->analyze(sample_trace(sb, [](Vec2 x) { return std::log(x.norm()); }));
  REQUIRE(hd.a.size() == 1);
  CHECK(hd.a[0] == doctest::Approx(1.0).epsilon(1e-12));
  // psi = 0, so psi_hat is a constant trace
  double lo = 1e300, hi = -1e300;
  for (double v : hd.psi_hat) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi - lo < 1e-10);
  // weighted normal derivative: +1 on the outer circle, -1 on the inner one
  for (int i = sb.component_begin(0); i < sb.component_end(0); ++i)
    CHECK(hd.wnd[i] == doctest::Approx(1.0).epsilon(1e-10));
  for (int i = sb.component_begin(1); i < sb.component_end(1); ++i)
    CHECK(hd.wnd[i] == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("punctured square logarithmic coefficient to near machine accuracy") {
  auto solver = make_solver(make_punctured_square(), 64);
  const SampledBoundary& sb = solver->boundary();
  const Vec2 xi{0.5, 0.5};
  const auto hd = solver->analyze(sample_trace(sb, [&](Vec2 x) {
    return std::exp(x.x) * std::cos(x.y) + std::log((x - xi).norm());
  }));
  REQUIRE(hd.a.size() == 1);
  CHECK(std::abs(hd.a[0] - 1.0) <= 1e-13);
}

TEST_CASE("DtN basics") {
  SUBCASE("constant trace has vanishing weighted normal derivative") {
    auto solver = make_solver(make_punctured_square(), 16);
    const auto hd = solver->analyze(std::vector<double>(solver->boundary().size(), 1.0));
    for (double a : hd.a) CHECK(std::abs(a) < 1e-9);
    for (double w : hd.wnd) CHECK(std::abs(w) < 1e-9);
  }
  SUBCASE("phi = x1 on the unit circle gives wnd = cos t") {
    auto solver = make_solver(make_unit_circle(), 32);
    const SampledBoundary& sb = solver->boundary();
    const auto hd = solver->analyze(sample_trace(sb, [](Vec2 x) { return x.x; }));
    for (int i = 0; i < sb.size(); ++i)
      CHECK(hd.wnd[i] == doctest::Approx(std::cos(kPi * i / 32.0)).epsilon(1e-10));
  }
}

TEST_CASE("decomposition is linear") {
  auto solver = make_solver(make_annulus(), 16);
  const SampledBoundary& sb = solver->boundary();
  const auto f1 = sample_trace(sb, [](Vec2 x) { return std::log(x.norm()); });
  const auto f2 = sample_trace(sb, [](Vec2 x) { return x.x - 0.3 * x.y; });
  std::vector<double> combo(sb.size());
  for (int i = 0; i < sb.size(); ++i) combo[i] = 2.0 * f1[i] - 0.5 * f2[i];
  const auto h1 = solver->analyze(f1), h2 = solver->analyze(f2), hc = solver->analyze(combo);
  CHECK(hc.a[0] == doctest::Approx(2.0 * h1.a[0] - 0.5 * h2.a[0]).epsilon(1e-11));
  for (int i = 0; i < sb.size(); ++i) {
    CHECK(hc.psi_hat[i] ==
          doctest::Approx(2.0 * h1.psi_hat[i] - 0.5 * h2.psi_hat[i]).epsilon(1e-10).scale(1.0));
    CHECK(hc.wnd[i] ==
          doctest::Approx(2.0 * h1.wnd[i] - 0.5 * h2.wnd[i]).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("compatibility and gauge invariants") {
  auto solver = make_solver(make_punctured_square(), 32);
  const SampledBoundary& sb = solver->boundary();
  const Vec2 xi{0.5, 0.5};
  const auto hd = solver->analyze(sample_trace(sb, [&](Vec2 x) {
    return std::exp(x.x) * std::cos(x.y) + std::log((x - xi).norm()) + x.x * x.y;
  }));
  SUBCASE("zero-mean conjugate trace") {
    CHECK(std::abs(sb.integrate(hd.psi_hat)) < 1e-10);
  }
  SUBCASE("total flux of the computed normal derivative vanishes") {
    double flux = 0.0;
    for (double w : hd.wnd) flux += w;
    CHECK(std::abs(flux * sb.step()) < 1e-8);
  }
}

TEST_CASE("log coefficients vanish for globally conjugable data") {
  auto solver = make_solver(make_annulus(), 32);
  const SampledBoundary& sb = solver->boundary();
  const auto hd = solver->analyze(sample_trace(sb, [](Vec2 x) { return x.x * x.x - x.y * x.y; }));
  CHECK(std::abs(hd.a[0]) < 1e-10);
}

TEST_CASE("log family invariants") {
  auto sb = std::make_shared<const SampledBoundary>(make_ghost(), 32);
  const LogFamily logs(*sb);
  SUBCASE("lambda_j is harmonic in the cell: total flux zero") {
    for (int j = 0; j < logs.hole_count(); ++j) {
      double flux = 0.0;
      for (int i = 0; i < sb->size(); ++i) flux += logs.weighted_normal(j)[i];
      CHECK(std::abs(flux * sb->step()) < 1e-8);
    }
  }
  SUBCASE("Lambda_j is an anti-Laplacian of lambda_j (finite differences)") {
    const Vec2 probes[] = {{0.47, 0.31}, {0.52, 0.05}, {0.93, 0.62}};
    const double d = 1e-4;
    for (int j = 0; j < 2; ++j) {
      const Vec2 xi = sb->anchor(j);
      for (const Vec2 p : probes) {
        const double lap =
            (LogFamily::antilap_lambda({p.x + d, p.y}, xi) +
             LogFamily::antilap_lambda({p.x - d, p.y}, xi) +
             LogFamily::antilap_lambda({p.x, p.y + d}, xi) +
             LogFamily::antilap_lambda({p.x, p.y - d}, xi) -
             4.0 * LogFamily::antilap_lambda(p, xi)) /
            (d * d);
        CHECK(lap == doctest::Approx(LogFamily::lambda(p, xi)).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("solver is invariant under rigid motions") {
  // same cell translated and rotated; traces must pull back to the original
  const double c = std::cos(0.5), s = std::sin(0.5);
  const Vec2 shift{0.3, -0.2};
  auto map = [&](Vec2 p) { return Vec2{c * p.x - s * p.y, s * p.x + c * p.y} + shift; };

  std::vector<ParametricEdge> outer = {
      ParametricEdge::line(map({0, 0}), map({1, 0})).with_corners(true, true),
      ParametricEdge::line(map({1, 0}), map({1, 1})).with_corners(true, true),
      ParametricEdge::line(map({1, 1}), map({0, 1})).with_corners(true, true),
      ParametricEdge::line(map({0, 1}), map({0, 0})).with_corners(true, true)};
  std::vector<ParametricEdge> hole = {
      ParametricEdge::circle(map({0.5, 0.5}), 0.25, Orientation::CW)};
  std::vector<BoundaryComponent> holes = {BoundaryComponent(hole)};
  const PuncturedCell moved("moved", BoundaryComponent(outer), holes,
                            {std::optional<Vec2>(map({0.5, 0.5}))});

  auto solver0 = make_solver(make_punctured_square(), 32);
  auto solver1 = make_solver(moved, 32);
  const Vec2 xi{0.5, 0.5};
  auto phi = [&](Vec2 x) { return std::exp(x.x) * std::cos(x.y) + std::log((x - xi).norm()); };

  const auto hd0 = solver0->analyze(sample_trace(solver0->boundary(), phi));
  const auto hd1 = solver1->analyze(sample_trace(
      solver1->boundary(), [&](Vec2 y) { // pull back to original coordinates
        const Vec2 q = y - shift;
        return phi({c * q.x + s * q.y, -s * q.x + c * q.y});
      }));
  CHECK(hd1.a[0] == doctest::Approx(hd0.a[0]).epsilon(1e-10));
  // hole-circle nodes sit at rotated parameters, so compare the outer chain,
  // where the node correspondence is exact
  for (int i = 0; i < solver0->boundary().component_end(0); ++i)
    CHECK(hd1.psi_hat[i] == doctest::Approx(hd0.psi_hat[i]).epsilon(1e-9).scale(1.0));
}

TEST_CASE("iterative and direct solver paths agree") {
  auto lu = make_solver(make_annulus(), 16, SolverChoice::DirectLU);
  auto it = make_solver(make_annulus(), 16, SolverChoice::Gmres);
  const auto trace =
      sample_trace(lu->boundary(), [](Vec2 x) { return std::log(x.norm()) + x.x; });
  const auto h0 = lu->analyze(trace), h1 = it->analyze(trace);
  CHECK(h0.a[0] == doctest::Approx(h1.a[0]).epsilon(1e-10));
  for (int i = 0; i < lu->boundary().size(); ++i)
    CHECK(h0.wnd[i] == doctest::Approx(h1.wnd[i]).epsilon(1e-8).scale(1.0));
}
