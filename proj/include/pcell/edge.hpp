#ifndef PCELL_EDGE_HPP
#define PCELL_EDGE_HPP

#include "pcell/vec2.hpp"

namespace pcell {

/// Kress corner reparameterization on [0, 2pi]: tau(0) = 0, tau(pi) = pi,
/// tau(2pi) = 2pi, with tau' vanishing to order sigma-1 at both endpoints.
/// Throws for sigma < 2.
double kress_tau(double u, double sigma);
double kress_tau_d1(double u, double sigma);
double kress_tau_d2(double u, double sigma);

/// One-sided graded map: root of order sigma-1 at u = 0, unit speed at u = 2pi.
double graded_left_tau(double u, double sigma);
double graded_left_tau_d1(double u, double sigma);
double graded_left_tau_d2(double u, double sigma);

enum class Orientation { CCW, CW };

/// One C^2 smooth edge parameterized over [0, 2pi], with analytic first and
/// second derivatives. Edges that terminate at corners carry Kress flags;
/// sampling then composes the base parameterization with the graded map.
class ParametricEdge {
 public:
  enum class Kind { Line, CircularArc, EllipseArc, SineLine, Circle, Ellipse };

  static ParametricEdge line(Vec2 a, Vec2 b);
  static ParametricEdge circular_arc(Vec2 center, double radius, double theta0, double theta1);
  static ParametricEdge ellipse_arc(Vec2 center, double semi_x, double semi_y,
                                    double theta0, double theta1);
  /// Segment from a to b perturbed by amplitude * sin(frequency * s) along the
  /// left normal of the segment, s in [0,1].
  static ParametricEdge sine_line(Vec2 a, Vec2 b, double amplitude, double frequency);
  static ParametricEdge circle(Vec2 center, double radius, Orientation o);
  static ParametricEdge ellipse(Vec2 center, double semi_x, double semi_y, Orientation o);

  Kind kind() const { return kind_; }
  bool closed() const { return kind_ == Kind::Circle || kind_ == Kind::Ellipse; }
  bool kress_left() const { return kress_left_; }
  bool kress_right() const { return kress_right_; }
  /// Copy with corner flags set; closed contours reject corner flags.
  ParametricEdge with_corners(bool left, bool right) const;

  /// Base (strongly regular) parameterization.
  Vec2 point(double t) const;
  Vec2 velocity(double t) const;
  Vec2 acceleration(double t) const;

  /// Evaluation used for boundary sampling: composes with the graded
  /// reparameterization according to the corner flags.
  void eval_sampled(double u, double sigma, Vec2& x, Vec2& d1, Vec2& d2) const;

  Vec2 start() const { return point(0.0); }
  Vec2 end() const { return point(2.0 * 3.14159265358979323846 * (closed() ? 0.0 : 1.0)); }

 private:
  ParametricEdge() = default;

  Kind kind_ = Kind::Line;
  Vec2 a_, b_;        // segment ends / unused
  Vec2 center_;
  double r1_ = 0.0;   // radius or x semi-axis
  double r2_ = 0.0;   // y semi-axis
  double theta0_ = 0.0, theta1_ = 0.0;
  double amp_ = 0.0, freq_ = 0.0;
  bool kress_left_ = false, kress_right_ = false;
};

} // namespace pcell

#endif
