#include "pcell/sampled_boundary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pcell {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

SampledBoundary::SampledBoundary(PuncturedCell cell, int n, double sigma)
    : cell_(std::move(cell)), n_(n), sigma_(sigma), h_(kPi / n) {
  if (n < 2) throw std::invalid_argument("boundary sampling requires n >= 2");
  if (!(sigma >= 2.0)) throw std::invalid_argument("Kress parameter sigma must be >= 2");

  const int per_edge = 2 * n_;
  auto add_component = [&](const BoundaryComponent& comp) {
    comp_begin_.push_back(N_);
    comp_edges_.push_back(comp.edge_count());
    const int c = static_cast<int>(comp_begin_.size()) - 1;
    for (int e = 0; e < comp.edge_count(); ++e) {
      const auto& edge = comp.edges()[e];
      for (int k = 0; k < per_edge; ++k) {
        const double u = h_ * k;
        Vec2 x, d1, d2;
        edge.eval_sampled(u, sigma_, x, d1, d2);
        x_.push_back(x);
        d1_.push_back(d1);
        d2_.push_back(d2);
        speed_.push_back(d1.norm());
        wn_.push_back(d1.rotated_cw());
        tpar_.push_back(u);
        comp_of_.push_back(c);
        const bool corner = (k == 0) && edge.kress_left();
        corner_.push_back(corner);
        if (!corner && !(d1.norm() > 0.0))
          throw std::invalid_argument("parameterization is not strongly regular away "
                                      "from corners");
        if (corner) {
          dlp_diag_.push_back(0.0);
          jump_.push_back(comp.interior_angle_at(e) / (2.0 * kPi));
        } else {
          const double sp2 = d1.norm2();
          dlp_diag_.push_back(sp2 > 0.0 ? d1.cross(d2) / (2.0 * sp2) : 0.0);
          jump_.push_back(0.5);
        }
        ++N_;
      }
    }
    comp_end_.push_back(N_);
  };

  add_component(cell_.outer());
  for (const auto& hole : cell_.holes()) add_component(hole);

  for (double s : speed_) perimeter_ += s * h_;

  // Resolve hole anchors: declared point or centroid of the hole's sampled nodes.
  for (int j = 0; j < cell_.hole_count(); ++j) {
    if (cell_.declared_anchor(j)) {
      anchors_.push_back(*cell_.declared_anchor(j));
    } else {
      Vec2 c;
      const int b = comp_begin_[j + 1], e = comp_end_[j + 1];
      for (int i = b; i < e; ++i) c += x_[i];
      anchors_.push_back(c / static_cast<double>(e - b));
    }
  }

  // Winding-number validation of the cell layout.
  for (int j = 0; j < hole_count(); ++j) {
    const Vec2 xi = anchors_[j];
    if (std::abs(component_winding_number(j + 1, xi) + 1.0) > 0.3)
      throw std::invalid_argument("hole anchor is not enclosed clockwise by its hole");
    if (std::abs(component_winding_number(0, xi) - 1.0) > 0.3)
      throw std::invalid_argument("hole is not strictly inside the outer boundary");
    for (int i = 0; i < hole_count(); ++i)
      if (i != j && std::abs(component_winding_number(i + 1, xi)) > 0.3)
        throw std::invalid_argument("holes overlap");
  }
  if (signed_area() <= 0.0)
    throw std::invalid_argument("cell has nonpositive area; check orientations");
}

double SampledBoundary::signed_area() const {
  double s = 0.0;
  for (int i = 0; i < N_; ++i) s += x_[i].dot(wn_[i]);
  return 0.5 * h_ * s;
}

double SampledBoundary::integrate(std::span<const double> f) const {
  if (static_cast<int>(f.size()) != N_)
    throw std::invalid_argument("integrand length does not match node count");
  double s = 0.0;
  for (int i = 0; i < N_; ++i) s += f[i] * speed_[i];
  return s * h_;
}

double SampledBoundary::min_distance(Vec2 z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : x_) best = std::min(best, dist(p, z));
  return best;
}

double SampledBoundary::component_winding_number(int c, Vec2 z) const {
  double s = 0.0;
  for (int i = comp_begin_[c]; i < comp_end_[c]; ++i) {
    const Vec2 r = x_[i] - z;
    s += r.cross(d1_[i]) / r.norm2();
  }
  return s * h_ / (2.0 * kPi);
}

double SampledBoundary::winding_number(Vec2 z) const {
  double s = 0.0;
  for (int c = 0; c < component_count(); ++c) s += component_winding_number(c, z);
  return s;
}

SampledBoundary sample_cell_boundary(const PuncturedCell& cell, int n, double sigma) {
  return SampledBoundary(cell, n, sigma);
}

double boundary_integrate(const SampledBoundary& sb, std::span<const double> f) {
  return sb.integrate(f);
}

double min_distance_to_boundary(const SampledBoundary& sb, Vec2 z) {
  return sb.min_distance(z);
}

} // namespace pcell
