#include "pcell/cell.hpp"

#include <cmath>
#include <stdexcept>

namespace pcell {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kClosureTol = 1e-12;
} // namespace

BoundaryComponent::BoundaryComponent(std::vector<ParametricEdge> edges)
    : edges_(std::move(edges)) {
  if (edges_.empty()) throw std::invalid_argument("boundary component needs at least one edge");
  for (const auto& e : edges_) {
    if (e.closed() && edges_.size() > 1)
      throw std::invalid_argument("a closed contour must be the only edge of its component");
  }
  if (edges_.size() == 1 && edges_[0].closed()) return;

  const int E = edge_count();
  for (int k = 0; k < E; ++k) {
    const auto& cur = edges_[k];
    const auto& nxt = edges_[(k + 1) % E];
    if (dist(cur.end(), nxt.start()) > kClosureTol)
      throw std::invalid_argument("boundary chain does not close (gap between edges " +
                                  std::to_string(k) + " and " + std::to_string((k + 1) % E) + ")");
    if (cur.kress_right() != nxt.kress_left())
      throw std::invalid_argument("mismatched corner flags at junction of edges " +
                                  std::to_string(k) + " and " + std::to_string((k + 1) % E));
    const double angle = interior_angle_at((k + 1) % E);
    if (!(angle > 1e-9 && angle < kTwoPi - 1e-9))
      throw std::invalid_argument("interior angle at a junction must lie strictly in (0, 2pi)");
    if (!cur.kress_right()) {
      // Junction declared smooth: the concatenated parameterization must be C1.
      const Vec2 vin = cur.velocity(kTwoPi);
      const Vec2 vout = nxt.velocity(0.0);
      if ((vin - vout).norm() > 1e-9 * (vin.norm() + vout.norm()))
        throw std::invalid_argument("junction without corner flags requires matching "
                                    "parameterization velocities");
    }
  }
}

double BoundaryComponent::interior_angle_at(int k) const {
  const int E = edge_count();
  const auto& prev = edges_[(k - 1 + E) % E];
  const auto& cur = edges_[k];
  Vec2 vin = prev.velocity(kTwoPi);
  Vec2 vout = cur.velocity(0.0);
  vin = vin / vin.norm();
  vout = vout / vout.norm();
  const double turn = std::atan2(vin.cross(vout), vin.dot(vout));
  return kPi - turn;
}

PuncturedCell::PuncturedCell(std::string name, BoundaryComponent outer,
                             std::vector<BoundaryComponent> holes,
                             std::vector<std::optional<Vec2>> hole_anchors)
    : name_(std::move(name)), outer_(std::move(outer)), holes_(std::move(holes)),
      anchors_(std::move(hole_anchors)) {
  anchors_.resize(holes_.size());
}

} // namespace pcell
