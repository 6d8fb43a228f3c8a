#ifndef PCELL_SAMPLED_BOUNDARY_HPP
#define PCELL_SAMPLED_BOUNDARY_HPP

#include <span>
#include <vector>

#include "pcell/cell.hpp"

namespace pcell {

/// Quadrature-ready sampling of a cell boundary: 2n nodes per edge at equispaced
/// parameters (right endpoints dropped, so components are exactly periodic),
/// with derivatives of the graded parameterization kept in weighted form.
/// Immutable after construction.
class SampledBoundary {
 public:
  SampledBoundary(PuncturedCell cell, int n, double sigma = 7.0);

  const PuncturedCell& cell() const { return cell_; }
  int size() const { return N_; }            ///< total node count N = 2n * (#edges)
  int half_points() const { return n_; }     ///< n, half the nodes per edge
  double step() const { return h_; }         ///< parameter step pi/n
  double sigma() const { return sigma_; }

  Vec2 point(int i) const { return x_[i]; }
  Vec2 derivative(int i) const { return d1_[i]; }        ///< x'(t), graded
  Vec2 second_derivative(int i) const { return d2_[i]; }
  double speed(int i) const { return speed_[i]; }        ///< |x'(t)|
  Vec2 weighted_normal(int i) const { return wn_[i]; }   ///< cw rotation of x'(t)
  bool is_corner(int i) const { return corner_[i]; }
  /// (x1' x2'' - x2' x1'') / (2 |x'|^2); the double-layer diagonal limit before
  /// the -1/(2pi) factor. Zero at corner nodes.
  double dlp_diagonal(int i) const { return dlp_diag_[i]; }
  /// Interior-angle jump coefficient: 1/2 at smooth nodes, theta/(2pi) at corners.
  double jump_coefficient(int i) const { return jump_[i]; }
  double edge_parameter(int i) const { return tpar_[i]; }

  int component_count() const { return static_cast<int>(comp_begin_.size()); }
  int hole_count() const { return component_count() - 1; }
  int component_begin(int c) const { return comp_begin_[c]; }
  int component_end(int c) const { return comp_end_[c]; }
  int component_size(int c) const { return comp_end_[c] - comp_begin_[c]; }
  int component_edge_count(int c) const { return comp_edges_[c]; }
  int component_of(int i) const { return comp_of_[i]; }
  /// Anchor point xi_j inside hole j (0-based; hole j is component j+1).
  Vec2 anchor(int j) const { return anchors_[j]; }

  double perimeter() const { return perimeter_; }
  double signed_area() const;

  /// Trapezoid rule: sum_i f_i |x'(t_i)| h. Throws on length mismatch.
  double integrate(std::span<const double> f) const;
  double min_distance(Vec2 z) const;
  /// Discrete winding number of the whole boundary chain about z
  /// (1 inside K, 0 outside K0 or inside a hole).
  double winding_number(Vec2 z) const;
  double component_winding_number(int c, Vec2 z) const;

 private:
  PuncturedCell cell_;
  int n_ = 0;
  double sigma_ = 7.0;
  double h_ = 0.0;
  int N_ = 0;
  double perimeter_ = 0.0;

  std::vector<Vec2> x_, d1_, d2_, wn_;
  std::vector<double> speed_, dlp_diag_, jump_, tpar_;
  std::vector<bool> corner_;
  std::vector<int> comp_of_;
  std::vector<int> comp_begin_, comp_end_, comp_edges_;
  std::vector<Vec2> anchors_;
};

/// Free-function constructor form.
SampledBoundary sample_cell_boundary(const PuncturedCell& cell, int n, double sigma = 7.0);

/// Trapezoid quadrature over the sampled boundary (free-function form).
double boundary_integrate(const SampledBoundary& sb, std::span<const double> f);

double min_distance_to_boundary(const SampledBoundary& sb, Vec2 z);

} // namespace pcell

#endif
