#ifndef PCELL_CELL_HPP
#define PCELL_CELL_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcell/edge.hpp"

namespace pcell {

/// One closed chain of edges. Outer components are oriented counterclockwise,
/// hole components clockwise; the outward normal of the cell is the clockwise
/// pi/2 rotation of the tangent in both cases.
class BoundaryComponent {
 public:
  explicit BoundaryComponent(std::vector<ParametricEdge> edges);

  const std::vector<ParametricEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Interior angle (measured inside the cell) at the junction entering edge k.
  /// Returns pi at smooth junctions. Only meaningful for multi-edge chains.
  double interior_angle_at(int k) const;

 private:
  std::vector<ParametricEdge> edges_;
};

/// Multiply connected cell K = K0 \ union of closures of holes, described by its
/// oriented boundary components plus one anchor point inside each hole.
class PuncturedCell {
 public:
  PuncturedCell(std::string name, BoundaryComponent outer,
                std::vector<BoundaryComponent> holes = {},
                std::vector<std::optional<Vec2>> hole_anchors = {});

  const std::string& name() const { return name_; }
  const BoundaryComponent& outer() const { return outer_; }
  const std::vector<BoundaryComponent>& holes() const { return holes_; }
  int hole_count() const { return static_cast<int>(holes_.size()); }
  const std::optional<Vec2>& declared_anchor(int j) const { return anchors_[j]; }

 private:
  std::string name_;
  BoundaryComponent outer_;
  std::vector<BoundaryComponent> holes_;
  std::vector<std::optional<Vec2>> anchors_; // absent -> centroid of sampled hole nodes
};

} // namespace pcell

#endif
