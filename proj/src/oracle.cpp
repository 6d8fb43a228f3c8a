#include "pcell/oracle.hpp"

#include <cmath>

#include "pcell/gauss.hpp"

namespace pcell {
namespace oracle {

namespace {
constexpr double kPi = 3.14159265358979323846;

double column(const GaussRule& g, double x, double y0, double y1, const Integrand& f) {
  return gauss_integrate(g, y0, y1, [&](double y) { return f({x, y}); });
}
} // namespace

double rectangle(Vec2 lo, Vec2 hi, const Integrand& f, int order) {
  const GaussRule g(order);
  return gauss_integrate(g, lo.x, hi.x,
                         [&](double x) { return column(g, x, lo.y, hi.y, f); });
}

double disk(Vec2 center, double radius, const Integrand& f, int order) {
  const GaussRule g(order);
  return gauss_integrate(g, 0.0, 2.0 * kPi, [&](double th) {
    return gauss_integrate(g, 0.0, radius, [&](double r) {
      return r * f(center + Vec2(r * std::cos(th), r * std::sin(th)));
    });
  });
}

double annulus(Vec2 center, double r0, double r1, const Integrand& f, int order) {
  const GaussRule g(order);
  return gauss_integrate(g, 0.0, 2.0 * kPi, [&](double th) {
    return gauss_integrate(g, r0, r1, [&](double r) {
      return r * f(center + Vec2(r * std::cos(th), r * std::sin(th)));
    });
  });
}

double punctured_square(double hole_radius, const Integrand& f, int order) {
  const GaussRule g(order);
  const double r = hole_radius;
  double total = 0.0;
  total += gauss_integrate(g, 0.0, 0.5 - r,
                           [&](double x) { return column(g, x, 0.0, 1.0, f); });
  total += gauss_integrate(g, 0.5 + r, 1.0,
                           [&](double x) { return column(g, x, 0.0, 1.0, f); });
  // Hole span: substitute x = 1/2 - r cos(u) so the chord height r sin(u)
  // is smooth at the tangency points.
  total += gauss_integrate(g, 0.0, kPi, [&](double u) {
    const double x = 0.5 - r * std::cos(u);
    const double gh = r * std::sin(u);
    const double jac = r * std::sin(u);
    return jac * (column(g, x, 0.0, 0.5 - gh, f) + column(g, x, 0.5 + gh, 1.0, f));
  });
  return total;
}

double pacman(const Integrand& f, int order) {
  const GaussRule g(order);
  const double th0 = kPi / 6.0;
  // Sector in polar coordinates with r = s^2 so r^alpha tip singularities
  // integrate cleanly.
  double total = gauss_integrate(g, th0, 2.0 * kPi - th0, [&](double th) {
    return gauss_integrate(g, 0.0, 1.0, [&](double s) {
      const double r = s * s;
      return 2.0 * s * r * f({r * std::cos(th), r * std::sin(th)});
    });
  });
  total -= disk({-0.1, 0.5}, 0.25, f, order);
  return total;
}

double ghost(const Integrand& f, int order) {
  const GaussRule g(order);
  const auto y_bot = [](double x) { return 0.1 * std::sin(6.0 * kPi * x); };
  const auto y_top = [](double x) {
    const double d = 0.25 - (x - 0.5) * (x - 0.5);
    return 0.8 + std::sqrt(std::max(0.0, d));
  };
  // Arc-smoothing substitution x = (1 - cos u)/2 near the vertical tangencies.
  const auto arc_piece = [&](double x0, double x1) {
    const double u0 = std::acos(1.0 - 2.0 * x0), u1 = std::acos(1.0 - 2.0 * x1);
    return gauss_integrate(g, u0, u1, [&](double u) {
      const double x = 0.5 * (1.0 - std::cos(u));
      const double jac = 0.5 * std::sin(u);
      return jac * column(g, x, y_bot(x), 0.8 + 0.5 * std::sin(u), f);
    });
  };
  // Hole span of an ellipse (cx, 0.7) with semi-axes 0.15 x 0.2:
  // x = cx - 0.15 cos(w) keeps the chord height 0.2 sin(w) smooth.
  const auto hole_piece = [&](double cx) {
    return gauss_integrate(g, 0.0, kPi, [&](double w) {
      const double x = cx - 0.15 * std::cos(w);
      const double half = 0.2 * std::sin(w);
      const double jac = 0.15 * std::sin(w);
      return jac * (column(g, x, y_bot(x), 0.7 - half, f) +
                    column(g, x, 0.7 + half, y_top(x), f));
    });
  };
  double total = 0.0;
  total += arc_piece(0.0, 0.1);
  total += hole_piece(0.25);
  total += gauss_integrate(g, 0.4, 0.6,
                           [&](double x) { return column(g, x, y_bot(x), y_top(x), f); });
  total += hole_piece(0.75);
  total += arc_piece(0.9, 1.0);
  return total;
}

std::optional<double> integrate_named_cell(const std::string& name, const Integrand& f,
                                           int order) {
  if (name == "punctured-square") return punctured_square(0.25, f, order);
  if (name == "pacman") return pacman(f, order);
  if (name == "ghost") return ghost(f, order);
  if (name == "annulus") return annulus({0.0, 0.0}, 0.5, 1.0, f, order);
  return std::nullopt;
}

} // namespace oracle
} // namespace pcell
