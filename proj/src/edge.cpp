#include "pcell/edge.hpp"

#include <cmath>
#include <stdexcept>

namespace pcell {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

void check_sigma(double sigma) {
  if (!(sigma >= 2.0)) throw std::invalid_argument("Kress parameter sigma must be >= 2");
}

struct CubicC {
  double c, c1, c2;
};

// c(u) = (1/2 - 1/sigma) w^3 + w/sigma + 1/2,  w = (u - pi)/pi
CubicC cubic(double u, double sigma) {
  const double w = (u - kPi) / kPi;
  const double a = 0.5 - 1.0 / sigma;
  return {a * w * w * w + w / sigma + 0.5,
          (3.0 * a * w * w + 1.0 / sigma) / kPi,
          6.0 * a * w / (kPi * kPi)};
}

struct TauVal {
  double t, t1, t2;
};

TauVal kress_all(double u, double sigma) {
  check_sigma(sigma);
  const CubicC cc = cubic(u, sigma);
  const double c = std::min(std::max(cc.c, 0.0), 1.0);
  const double A = std::pow(c, sigma);
  const double B = std::pow(1.0 - c, sigma);
  const double Ap = sigma * std::pow(c, sigma - 1.0) * cc.c1;
  const double Bp = -sigma * std::pow(1.0 - c, sigma - 1.0) * cc.c1;
  const double App = sigma * (sigma - 1.0) * std::pow(c, sigma - 2.0) * cc.c1 * cc.c1 +
                     sigma * std::pow(c, sigma - 1.0) * cc.c2;
  const double Bpp = sigma * (sigma - 1.0) * std::pow(1.0 - c, sigma - 2.0) * cc.c1 * cc.c1 -
                     sigma * std::pow(1.0 - c, sigma - 1.0) * cc.c2;
  const double D = A + B;
  const double f = Ap * B - A * Bp;
  const double t = kTwoPi * A / D;
  const double t1 = kTwoPi * f / (D * D);
  const double t2 = kTwoPi * ((App * B - A * Bpp) * D - 2.0 * f * (Ap + Bp)) / (D * D * D);
  return {t, t1, t2};
}

// q(s) = s^sigma / (s^sigma + 1 - s) on [0,1]
TauVal graded_left_all(double u, double sigma) {
  check_sigma(sigma);
  const double s = u / kTwoPi;
  const double A = std::pow(s, sigma);
  const double Ap = sigma * std::pow(s, sigma - 1.0);
  const double D = A + 1.0 - s;
  const double f = Ap * (1.0 - s) + A;
  const double fp = sigma * (sigma - 1.0) * std::pow(s, sigma - 2.0) * (1.0 - s);
  const double q1 = f / (D * D);
  const double q2 = (fp * D - 2.0 * f * (Ap - 1.0)) / (D * D * D);
  return {kTwoPi * A / D, q1, q2 / kTwoPi};
}

} // namespace

double kress_tau(double u, double sigma) { return kress_all(u, sigma).t; }
double kress_tau_d1(double u, double sigma) { return kress_all(u, sigma).t1; }
double kress_tau_d2(double u, double sigma) { return kress_all(u, sigma).t2; }

double graded_left_tau(double u, double sigma) { return graded_left_all(u, sigma).t; }
double graded_left_tau_d1(double u, double sigma) { return graded_left_all(u, sigma).t1; }
double graded_left_tau_d2(double u, double sigma) { return graded_left_all(u, sigma).t2; }

ParametricEdge ParametricEdge::line(Vec2 a, Vec2 b) {
  ParametricEdge e;
  e.kind_ = Kind::Line;
  e.a_ = a;
  e.b_ = b;
  return e;
}

ParametricEdge ParametricEdge::circular_arc(Vec2 center, double radius, double th0, double th1) {
  if (radius <= 0.0) throw std::invalid_argument("arc radius must be positive");
  ParametricEdge e;
  e.kind_ = Kind::CircularArc;
  e.center_ = center;
  e.r1_ = e.r2_ = radius;
  e.theta0_ = th0;
  e.theta1_ = th1;
  return e;
}

ParametricEdge ParametricEdge::ellipse_arc(Vec2 center, double sx, double sy,
                                           double th0, double th1) {
  if (sx <= 0.0 || sy <= 0.0) throw std::invalid_argument("semi-axes must be positive");
  ParametricEdge e;
  e.kind_ = Kind::EllipseArc;
  e.center_ = center;
  e.r1_ = sx;
  e.r2_ = sy;
  e.theta0_ = th0;
  e.theta1_ = th1;
  return e;
}

ParametricEdge ParametricEdge::sine_line(Vec2 a, Vec2 b, double amplitude, double frequency) {
  if ((b - a).norm() == 0.0) throw std::invalid_argument("degenerate segment");
  ParametricEdge e;
  e.kind_ = Kind::SineLine;
  e.a_ = a;
  e.b_ = b;
  e.amp_ = amplitude;
  e.freq_ = frequency;
  return e;
}

ParametricEdge ParametricEdge::circle(Vec2 center, double radius, Orientation o) {
  ParametricEdge e = circular_arc(center, radius, 0.0, o == Orientation::CCW ? kTwoPi : -kTwoPi);
  e.kind_ = Kind::Circle;
  return e;
}

ParametricEdge ParametricEdge::ellipse(Vec2 center, double sx, double sy, Orientation o) {
  ParametricEdge e = ellipse_arc(center, sx, sy, 0.0, o == Orientation::CCW ? kTwoPi : -kTwoPi);
  e.kind_ = Kind::Ellipse;
  return e;
}

ParametricEdge ParametricEdge::with_corners(bool left, bool right) const {
  if (closed() && (left || right))
    throw std::invalid_argument("closed contours cannot carry corner flags");
  ParametricEdge e = *this;
  e.kress_left_ = left;
  e.kress_right_ = right;
  return e;
}

Vec2 ParametricEdge::point(double t) const {
  const double s = t / kTwoPi;
  switch (kind_) {
    case Kind::Line:
      return a_ + (b_ - a_) * s;
    case Kind::Circle:
    case Kind::CircularArc:
    case Kind::Ellipse:
    case Kind::EllipseArc: {
      const double th = theta0_ + (theta1_ - theta0_) * s;
      return center_ + Vec2(r1_ * std::cos(th), r2_ * std::sin(th));
    }
    case Kind::SineLine: {
      const Vec2 d = b_ - a_;
      const Vec2 nrm = d.rotated_ccw() / d.norm();
      return a_ + d * s + nrm * (amp_ * std::sin(freq_ * s));
    }
  }
  return {};
}

Vec2 ParametricEdge::velocity(double t) const {
  const double s = t / kTwoPi;
  switch (kind_) {
    case Kind::Line:
      return (b_ - a_) / kTwoPi;
    case Kind::Circle:
    case Kind::CircularArc:
    case Kind::Ellipse:
    case Kind::EllipseArc: {
      const double th = theta0_ + (theta1_ - theta0_) * s;
      const double rate = (theta1_ - theta0_) / kTwoPi;
      return Vec2(-r1_ * std::sin(th), r2_ * std::cos(th)) * rate;
    }
    case Kind::SineLine: {
      const Vec2 d = b_ - a_;
      const Vec2 nrm = d.rotated_ccw() / d.norm();
      return (d + nrm * (amp_ * freq_ * std::cos(freq_ * s))) / kTwoPi;
    }
  }
  return {};
}

Vec2 ParametricEdge::acceleration(double t) const {
  const double s = t / kTwoPi;
  switch (kind_) {
    case Kind::Line:
      return {};
    case Kind::Circle:
    case Kind::CircularArc:
    case Kind::Ellipse:
    case Kind::EllipseArc: {
      const double th = theta0_ + (theta1_ - theta0_) * s;
      const double rate = (theta1_ - theta0_) / kTwoPi;
      return Vec2(-r1_ * std::cos(th), -r2_ * std::sin(th)) * (rate * rate);
    }
    case Kind::SineLine: {
      const Vec2 d = b_ - a_;
      const Vec2 nrm = d.rotated_ccw() / d.norm();
      return nrm * (-amp_ * freq_ * freq_ * std::sin(freq_ * s) / (kTwoPi * kTwoPi));
    }
  }
  return {};
}

void ParametricEdge::eval_sampled(double u, double sigma, Vec2& x, Vec2& d1, Vec2& d2) const {
  double t = u, t1 = 1.0, t2 = 0.0;
  if (kress_left_ && kress_right_) {
    const auto tv = kress_all(u, sigma);
    t = tv.t;
    t1 = tv.t1;
    t2 = tv.t2;
  } else if (kress_left_) {
    const auto tv = graded_left_all(u, sigma);
    t = tv.t;
    t1 = tv.t1;
    t2 = tv.t2;
  } else if (kress_right_) {
    const auto tv = graded_left_all(kTwoPi - u, sigma);
    t = kTwoPi - tv.t;
    t1 = tv.t1;
    t2 = -tv.t2;
  }
  x = point(t);
  const Vec2 v = velocity(t);
  d1 = v * t1;
  d2 = acceleration(t) * (t1 * t1) + v * t2;
}

} // namespace pcell
