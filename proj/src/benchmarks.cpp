#include "pcell/benchmarks.hpp"

#include <cmath>
#include <stdexcept>

namespace pcell {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
} // namespace

double AnalyticTerm::value(Vec2 x) const {
  switch (type) {
    case Type::Poly:
      return coef * poly(x);
    case Type::Log:
      return coef * std::log((x - point).norm());
    case Type::RationalRe: {
      const Vec2 r = x - point;
      return coef * r.x / r.norm2();
    }
    case Type::RationalIm: {
      const Vec2 r = x - point;
      return coef * (-r.y) / r.norm2();
    }
    case Type::ExpRe:
      return coef * std::exp(x.x) * std::cos(x.y);
    case Type::ExpIm:
      return coef * std::exp(x.x) * std::sin(x.y);
    case Type::CornerPow: {
      const Vec2 r = x - point;
      const double rad = r.norm();
      if (rad == 0.0) return 0.0;
      double th = std::atan2(r.y, r.x) - branch_rotation;
      th -= kTwoPi * std::floor(th / kTwoPi);
      return coef * std::pow(rad, alpha) * std::sin(alpha * th);
    }
  }
  return 0.0;
}

Vec2 AnalyticTerm::gradient(Vec2 x) const {
  switch (type) {
    case Type::Poly:
      return poly.gradient(x) * coef;
    case Type::Log: {
      const Vec2 r = x - point;
      return r * (coef / r.norm2());
    }
    case Type::RationalRe: {
      // d/dz of 1/(z-p) is -(z-p)^-2; u_x = Re f', u_y = -Im f'.
      const Vec2 r = x - point;
      const double d = r.norm2() * r.norm2();
      const double re = (r.x * r.x - r.y * r.y) / d, im = 2.0 * r.x * r.y / d;
      return Vec2(-re, -im) * coef;
    }
    case Type::RationalIm: {
      const Vec2 r = x - point;
      const double d = r.norm2() * r.norm2();
      const double re = (r.x * r.x - r.y * r.y) / d, im = 2.0 * r.x * r.y / d;
      // v_x = Im f', v_y = Re f' with f' = -(z-p)^-2 = (-A + iB)/|z-p|^4
      return Vec2(im, -re) * coef;
    }
    case Type::ExpRe:
      return Vec2(std::exp(x.x) * std::cos(x.y), -std::exp(x.x) * std::sin(x.y)) * coef;
    case Type::ExpIm:
      return Vec2(std::exp(x.x) * std::sin(x.y), std::exp(x.x) * std::cos(x.y)) * coef;
    case Type::CornerPow: {
      const Vec2 r = x - point;
      const double rad = r.norm();
      double th = std::atan2(r.y, r.x) - branch_rotation;
      th -= kTwoPi * std::floor(th / kTwoPi);
      const double dr = coef * alpha * std::pow(rad, alpha - 1.0) * std::sin(alpha * th);
      const double dth = coef * alpha * std::pow(rad, alpha - 1.0) * std::cos(alpha * th);
      const Vec2 rhat = r / rad, that = rhat.rotated_ccw();
      return rhat * dr + that * dth;
    }
  }
  return {};
}

double AnalyticFunction::value(Vec2 x) const {
  double s = 0.0;
  for (const auto& t : terms) s += t.value(x);
  return s;
}

Vec2 AnalyticFunction::gradient(Vec2 x) const {
  Vec2 g;
  for (const auto& t : terms) g += t.gradient(x);
  return g;
}

BivariatePolynomial AnalyticFunction::laplacian() const {
  BivariatePolynomial lap;
  for (const auto& t : terms)
    if (t.type == AnalyticTerm::Type::Poly) lap += t.poly.laplacian() * t.coef;
  return lap;
}

LocalPoissonFunction AnalyticFunction::sample(const SampledBoundary& sb) const {
  LocalPoissonFunction f;
  f.trace.resize(sb.size());
  for (int i = 0; i < sb.size(); ++i) f.trace[i] = value(sb.point(i));
  f.laplacian = laplacian();
  return f;
}

PuncturedCell make_punctured_square() {
  std::vector<ParametricEdge> outer = {
      ParametricEdge::line({0, 0}, {1, 0}).with_corners(true, true),
      ParametricEdge::line({1, 0}, {1, 1}).with_corners(true, true),
      ParametricEdge::line({1, 1}, {0, 1}).with_corners(true, true),
      ParametricEdge::line({0, 1}, {0, 0}).with_corners(true, true)};
  std::vector<ParametricEdge> hole = {
      ParametricEdge::circle({0.5, 0.5}, 0.25, Orientation::CW)};
  return PuncturedCell("punctured-square", BoundaryComponent(outer),
                       {BoundaryComponent(hole)}, {Vec2{0.5, 0.5}});
}

PuncturedCell make_pacman() {
  const double th0 = kPi / 6.0;
  const Vec2 top{std::cos(th0), std::sin(th0)}, bottom{std::cos(th0), -std::sin(th0)};
  std::vector<ParametricEdge> outer = {
      ParametricEdge::line({0, 0}, top).with_corners(true, true),
      ParametricEdge::circular_arc({0, 0}, 1.0, th0, kTwoPi - th0).with_corners(true, true),
      ParametricEdge::line(bottom, {0, 0}).with_corners(true, true)};
  std::vector<ParametricEdge> hole = {
      ParametricEdge::circle({-0.1, 0.5}, 0.25, Orientation::CW)};
  return PuncturedCell("pacman", BoundaryComponent(outer), {BoundaryComponent(hole)},
                       {Vec2{-0.1, 0.5}});
}

PuncturedCell make_ghost() {
  std::vector<ParametricEdge> outer = {
      ParametricEdge::sine_line({0, 0}, {1, 0}, 0.1, 6.0 * kPi).with_corners(true, true),
      ParametricEdge::line({1, 0}, {1, 0.8}).with_corners(true, true),
      ParametricEdge::circular_arc({0.5, 0.8}, 0.5, 0.0, kPi).with_corners(true, true),
      ParametricEdge::line({0, 0.8}, {0, 0}).with_corners(true, true)};
  std::vector<ParametricEdge> left = {
      ParametricEdge::ellipse({0.25, 0.7}, 0.15, 0.2, Orientation::CW)};
  std::vector<ParametricEdge> right = {
      ParametricEdge::ellipse({0.75, 0.7}, 0.15, 0.2, Orientation::CW)};
  return PuncturedCell("ghost", BoundaryComponent(outer),
                       {BoundaryComponent(left), BoundaryComponent(right)},
                       {Vec2{0.25, 0.7}, Vec2{0.75, 0.7}});
}

PuncturedCell make_annulus(double r0, double r1) {
  std::vector<ParametricEdge> outer = {ParametricEdge::circle({0, 0}, r1, Orientation::CCW)};
  std::vector<ParametricEdge> hole = {ParametricEdge::circle({0, 0}, r0, Orientation::CW)};
  return PuncturedCell("annulus", BoundaryComponent(outer), {BoundaryComponent(hole)},
                       {Vec2{0.0, 0.0}});
}

PuncturedCell make_unit_square() {
  std::vector<ParametricEdge> outer = {
      ParametricEdge::line({0, 0}, {1, 0}).with_corners(true, true),
      ParametricEdge::line({1, 0}, {1, 1}).with_corners(true, true),
      ParametricEdge::line({1, 1}, {0, 1}).with_corners(true, true),
      ParametricEdge::line({0, 1}, {0, 0}).with_corners(true, true)};
  return PuncturedCell("unit-square", BoundaryComponent(outer));
}

PuncturedCell make_unit_circle() {
  std::vector<ParametricEdge> outer = {ParametricEdge::circle({0, 0}, 1.0, Orientation::CCW)};
  return PuncturedCell("unit-circle", BoundaryComponent(outer));
}

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names = {"punctured-square", "pacman", "ghost"};
  return names;
}

Benchmark benchmark(const std::string& name) {
  using Type = AnalyticTerm::Type;
  if (name == "punctured-square") {
    Benchmark b{name, make_punctured_square(), {}, {}, 0.0, 0.0};
    AnalyticTerm exp_re{Type::ExpRe, 1.0, {}, 0, 0, {}};
    AnalyticTerm logt{Type::Log, 1.0, {0.5, 0.5}, 0, 0, {}};
    AnalyticTerm pv{Type::Poly, 1.0, {}, 0, 0,
                    BivariatePolynomial{{3, 1, 1.0}, {1, 3, 1.0}}};
    b.v.terms = {exp_re, logt, pv};
    AnalyticTerm rat{Type::RationalRe, 1.0, {0.5, 0.5}, 0, 0, {}};
    AnalyticTerm pw{Type::Poly, 1.0, {}, 0, 0,
                    BivariatePolynomial{{3, 0, 1.0}, {1, 2, 1.0}}};
    b.w.terms = {rat, pw};
    b.h1_reference = 4.46481780319135;
    b.l2_reference = 1.39484950156676;
    return b;
  }
  if (name == "pacman") {
    Benchmark b{name, make_pacman(), {}, {}, 0.0, 0.0};
    AnalyticTerm corner{Type::CornerPow, 1.0, {0, 0}, 0.5, 0.0, {}};
    b.v.terms = {corner};
    b.w = b.v;
    b.h1_reference = 1.20953682240855912;
    b.l2_reference = 0.97793431492143971;
    return b;
  }
  if (name == "ghost") {
    Benchmark b{name, make_ghost(), {}, {}, 0.0, 0.0};
    AnalyticTerm rat{Type::RationalRe, 1.0, {0.25, 0.7}, 0, 0, {}};
    AnalyticTerm pv{Type::Poly, 1.0, {}, 0, 0,
                    BivariatePolynomial{{3, 1, 1.0}, {0, 2, 1.0}}};
    b.v.terms = {rat, pv};
    AnalyticTerm logt{Type::Log, 2.0, {0.75, 0.7}, 0, 0, {}};
    AnalyticTerm pw{Type::Poly, 1.0, {}, 0, 0,
                    BivariatePolynomial{{2, 2, 1.0}, {1, 3, -1.0}}};
    b.w.terms = {logt, pw};
    b.h1_reference = -6.311053612386;
    b.l2_reference = -3.277578636852;
    return b;
  }
  throw std::invalid_argument("unknown benchmark cell '" + name +
                              "'; expected punctured-square, pacman, or ghost");
}

double constant_aligned_l2_error(const SampledBoundary& sb, std::span<const double> computed,
                                 std::span<const double> exact) {
  std::vector<double> diff(sb.size()), ones(sb.size(), 1.0);
  for (int i = 0; i < sb.size(); ++i) diff[i] = exact[i] - computed[i];
  const double c = -sb.integrate(diff) / sb.perimeter();
  std::vector<double> sq(sb.size());
  for (int i = 0; i < sb.size(); ++i) sq[i] = (diff[i] + c) * (diff[i] + c);
  return std::sqrt(sb.integrate(sq));
}

double linear_aligned_l2_error(const SampledBoundary& sb, std::span<const double> computed,
                               std::span<const double> exact) {
  // Least-squares fit of exact - computed by c1 x1 + c2 x2 in the ds inner product.
  double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
  const double h = sb.step();
  for (int i = 0; i < sb.size(); ++i) {
    const Vec2 x = sb.point(i);
    const double w = h * sb.speed(i);
    const double d = exact[i] - computed[i];
    a11 += w * x.x * x.x;
    a12 += w * x.x * x.y;
    a22 += w * x.y * x.y;
    b1 += w * x.x * d;
    b2 += w * x.y * d;
  }
  const double det = a11 * a22 - a12 * a12;
  const double c1 = (a22 * b1 - a12 * b2) / det;
  const double c2 = (a11 * b2 - a12 * b1) / det;
  std::vector<double> sq(sb.size());
  for (int i = 0; i < sb.size(); ++i) {
    const Vec2 x = sb.point(i);
    const double d = exact[i] - computed[i] - c1 * x.x - c2 * x.y;
    sq[i] = d * d;
  }
  return std::sqrt(sb.integrate(sq));
}

IntermediateErrors example1_intermediate_errors(const PreparedFunction& v) {
  const SampledBoundary& sb = v.solver->boundary();
  const Vec2 xi{0.5, 0.5};
  const int N = sb.size();

  std::vector<double> psi_hat_exact(N), wnd_exact(N), phi_exact_antilap(N);
  for (int i = 0; i < N; ++i) {
    const Vec2 x = sb.point(i);
    psi_hat_exact[i] = std::exp(x.x) * std::sin(x.y);
    const Vec2 grad_phi =
        Vec2(std::exp(x.x) * std::cos(x.y), -std::exp(x.x) * std::sin(x.y)) +
        (x - xi) / (x - xi).norm2();
    wnd_exact[i] = grad_phi.dot(sb.weighted_normal(i));
    const double r2 = (x - xi).norm2();
    phi_exact_antilap[i] = 0.25 * std::exp(x.x) * (x.x * std::cos(x.y) + x.y * std::sin(x.y)) +
                           0.25 * r2 * (0.5 * std::log(r2) - 1.0);
  }

  IntermediateErrors e;
  e.a1 = std::abs(v.hd.a.at(0) - 1.0);
  e.psi_hat = constant_aligned_l2_error(sb, v.hd.psi_hat, psi_hat_exact);
  std::vector<double> wnd_sq(N);
  for (int i = 0; i < N; ++i) {
    const double d = v.hd.wnd[i] - wnd_exact[i];
    wnd_sq[i] = d * d;
  }
  e.wnd = std::sqrt(sb.integrate(wnd_sq));
  e.antilap = linear_aligned_l2_error(sb, v.anti.value, phi_exact_antilap);
  return e;
}

} // namespace pcell
