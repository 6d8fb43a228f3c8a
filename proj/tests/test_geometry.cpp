#include <doctest.h>

#include <cmath>
#include <random>

#include "pcell/benchmarks.hpp"
#include "pcell/oracle.hpp"
#include "pcell/sampled_boundary.hpp"
#include "pcell/trace_ops.hpp"

using namespace pcell;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
} // namespace

TEST_CASE("Kress map endpoint conditions") {
  CHECK(kress_tau(kPi, 7.0) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(kress_tau(0.0, 7.0) == doctest::Approx(0.0));
  CHECK(kress_tau(kTwoPi, 7.0) == doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK_THROWS_AS(kress_tau(1.0, 1.5), std::invalid_argument);
}

TEST_CASE("Kress derivative vanishes to order sigma - 1") {
  for (double sigma : {3.0, 5.0, 7.0}) {
    // finite-difference slope ratio tau'(h)/tau'(h/2) -> 2^(sigma-1)
    const double h = 1e-2;
    const double ratio = kress_tau_d1(h, sigma) / kress_tau_d1(h / 2, sigma);
    CHECK(ratio == doctest::Approx(std::pow(2.0, sigma - 1.0)).epsilon(1e-2));
  }
}

TEST_CASE("Kress map is strictly increasing") {
  for (double sigma : {2.0, 3.5, 7.0}) {
    double prev = -1.0;
    for (int k = 0; k <= 256; ++k) {
      const double t = kress_tau(kTwoPi * k / 256, sigma);
      CHECK(t > prev);
      prev = t;
    }
  }
}

TEST_CASE("one-sided graded map") {
  CHECK(graded_left_tau(0.0, 7.0) == doctest::Approx(0.0));
  CHECK(graded_left_tau(kTwoPi, 7.0) == doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK(graded_left_tau_d1(kTwoPi, 7.0) == doctest::Approx(1.0).epsilon(1e-12));
  const double h = 1e-2;
  CHECK(graded_left_tau_d1(h, 7.0) / graded_left_tau_d1(h / 2, 7.0) ==
        doctest::Approx(std::pow(2.0, 6.0)).epsilon(1e-2));
  double prev = -1.0;
  for (int k = 0; k <= 128; ++k) {
    const double t = graded_left_tau(kTwoPi * k / 128, 7.0);
    CHECK(t > prev);
    prev = t;
  }
}

TEST_CASE("node counts and speeds") {
  SUBCASE("punctured square at n = 4 has N = 40") {
    const SampledBoundary sb(make_punctured_square(), 4);
    CHECK(sb.size() == 40);
    CHECK(sb.component_count() == 2);
    CHECK(sb.component_size(0) == 32);
    CHECK(sb.component_size(1) == 8);
  }
  SUBCASE("unit circle has unit speed everywhere") {
    const SampledBoundary sb(make_unit_circle(), 16);
    for (int i = 0; i < sb.size(); ++i) CHECK(sb.speed(i) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("Kress sampling clusters nodes at corners") {
  const SampledBoundary sb(make_punctured_square(), 32, 7.0);
  // bottom edge of the square: nodes 0..63, positions x in [0,1)
  int corner = 0, middle = 0;
  for (int i = 0; i < 64; ++i) {
    const double x = sb.point(i).x;
    if (x < 0.05) ++corner;
    if (x >= 0.45 && x <= 0.55) ++middle;
  }
  const double corner_density = corner / 0.05;
  const double middle_density = middle / 0.10;
  CHECK(corner_density > 10.0 * middle_density);
}

TEST_CASE("boundary quadrature") {
  SUBCASE("circumference of the unit circle") {
    const SampledBoundary sb(make_unit_circle(), 16);
    std::vector<double> ones(sb.size(), 1.0);
    CHECK(boundary_integrate(sb, ones) == doctest::Approx(kTwoPi).epsilon(1e-13));
  }
  SUBCASE("area identity on the unit square") {
    CHECK(SampledBoundary(make_unit_square(), 16).signed_area() ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(SampledBoundary(make_unit_square(), 64).signed_area() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("Ghost perimeter converges under refinement") {
    // the oscillatory lower edge caps accuracy at small n (the n = 32 value is
    // still ~2e-4 off); the self-refinement gap is < 1e-8 from n = 128 on
    const double p32 = SampledBoundary(make_ghost(), 32).perimeter();
    const double p128 = SampledBoundary(make_ghost(), 128).perimeter();
    const double p256 = SampledBoundary(make_ghost(), 256).perimeter();
    CHECK(p32 == doctest::Approx(p256).epsilon(1e-3));
    CHECK(p128 == doctest::Approx(p256).epsilon(1e-8));
  }
  SUBCASE("length mismatch is an error") {
    const SampledBoundary sb(make_unit_circle(), 8);
    std::vector<double> bad(sb.size() + 1, 1.0);
    CHECK_THROWS_AS(boundary_integrate(sb, bad), std::invalid_argument);
  }
}

TEST_CASE("signed areas of the benchmark cells") {
  CHECK(SampledBoundary(make_punctured_square(), 64).signed_area() ==
        doctest::Approx(1.0 - kPi / 16.0).epsilon(1e-10));
  CHECK(SampledBoundary(make_annulus(), 32).signed_area() ==
        doctest::Approx(kPi * 0.75).epsilon(1e-12));
  const double ghost_area = oracle::ghost([](Vec2) { return 1.0; }, 120);
  CHECK(SampledBoundary(make_ghost(), 64).signed_area() ==
        doctest::Approx(ghost_area).epsilon(1e-8));
}

TEST_CASE("minimum distance to the boundary") {
  const SampledBoundary circle(make_unit_circle(), 32);
  CHECK(min_distance_to_boundary(circle, {0, 0}) == doctest::Approx(1.0).epsilon(1e-12));

  const SampledBoundary sq64(make_punctured_square(), 64);
  const double d = min_distance_to_boundary(sq64, {0.5, 0.7501});
  CHECK(d > 0.0);
  CHECK(d < 0.01);

  // dense resampling oracle: nested grids make the fine minimum a lower bound
  const SampledBoundary sq1024(make_punctured_square(), 1024);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int k = 0; k < 5; ++k) {
    const Vec2 z{u(rng), u(rng)};
    const double coarse = min_distance_to_boundary(sq64, z);
    const double fine = min_distance_to_boundary(sq1024, z);
    CHECK(fine <= coarse + 1e-15);
    CHECK(coarse - fine < 0.05);
  }
}

TEST_CASE("nodes nest under refinement on smooth closed contours") {
  const SampledBoundary coarse(make_unit_circle(), 8);
  const SampledBoundary fine(make_unit_circle(), 16);
  for (int i = 0; i < coarse.size(); ++i)
    CHECK(dist(coarse.point(i), fine.point(2 * i)) < 1e-12);
}

TEST_CASE("interior angles") {
  const auto square = make_unit_square();
  for (int k = 0; k < 4; ++k)
    CHECK(square.outer().interior_angle_at(k) == doctest::Approx(kPi / 2).epsilon(1e-12));
  const auto pac = make_pacman();
  CHECK(pac.outer().interior_angle_at(0) == doctest::Approx(5.0 * kPi / 3.0).epsilon(1e-12));
}

TEST_CASE("geometry validation errors") {
  SUBCASE("open chain") {
    std::vector<ParametricEdge> edges = {
        ParametricEdge::line({0, 0}, {1, 0}).with_corners(true, true),
        ParametricEdge::line({1, 0.5}, {0, 0}).with_corners(true, true)};
    CHECK_THROWS_AS(BoundaryComponent{edges}, std::invalid_argument);
  }
  SUBCASE("n too small") {
    CHECK_THROWS_AS(SampledBoundary(make_unit_circle(), 1), std::invalid_argument);
  }
  SUBCASE("sigma too small") {
    CHECK_THROWS_AS(SampledBoundary(make_unit_square(), 8, 1.0), std::invalid_argument);
  }
  SUBCASE("hole outside the outer boundary") {
    const PuncturedCell square = make_unit_square();
    std::vector<ParametricEdge> hole = {
        ParametricEdge::circle({3.0, 3.0}, 0.25, Orientation::CW)};
    std::vector<BoundaryComponent> holes = {BoundaryComponent(hole)};
    PuncturedCell bad("bad", square.outer(), holes);
    CHECK_THROWS_AS(SampledBoundary(bad, 8), std::invalid_argument);
  }
  SUBCASE("hole with wrong orientation") {
    const PuncturedCell square = make_unit_square();
    std::vector<ParametricEdge> hole = {
        ParametricEdge::circle({0.5, 0.5}, 0.25, Orientation::CCW)};
    std::vector<BoundaryComponent> holes = {BoundaryComponent(hole)};
    PuncturedCell bad("bad", square.outer(), holes);
    CHECK_THROWS_AS(SampledBoundary(bad, 8), std::invalid_argument);
  }
  SUBCASE("overlapping holes") {
    const PuncturedCell square = make_unit_square();
    std::vector<ParametricEdge> h1 = {ParametricEdge::circle({0.4, 0.5}, 0.2, Orientation::CW)};
    std::vector<ParametricEdge> h2 = {ParametricEdge::circle({0.5, 0.5}, 0.2, Orientation::CW)};
    std::vector<BoundaryComponent> holes = {BoundaryComponent(h1), BoundaryComponent(h2)};
    PuncturedCell bad("bad", square.outer(), holes);
    CHECK_THROWS_AS(SampledBoundary(bad, 8), std::invalid_argument);
  }
  SUBCASE("corner flag mismatch at a junction") {
    std::vector<ParametricEdge> edges = {
        ParametricEdge::line({0, 0}, {1, 0}).with_corners(true, false),
        ParametricEdge::line({1, 0}, {0, 0}).with_corners(true, true)};
    CHECK_THROWS_AS(BoundaryComponent{edges}, std::invalid_argument);
  }
}

TEST_CASE("weighted tangential derivative per component") {
  const auto annulus = make_annulus();
  const SampledBoundary sb(annulus, 32);
  std::vector<double> trace(sb.size());
  for (int i = 0; i < sb.size(); ++i) trace[i] = sb.point(i).x; // rho = x1
  const auto d = weighted_tangential_derivative(sb, trace);
  for (int i = 0; i < sb.size(); ++i)
    CHECK(d[i] == doctest::Approx(sb.derivative(i).x).epsilon(1e-10));

  std::vector<double> wrong(sb.size() - 3, 0.0);
  CHECK_THROWS_AS(weighted_tangential_derivative(sb, wrong), std::invalid_argument);
}

TEST_CASE("winding number classification") {
  const SampledBoundary sb(make_punctured_square(), 32);
  CHECK(sb.winding_number({0.1, 0.1}) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sb.winding_number({0.5, 0.5}) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(sb.winding_number({1.5, 0.5}) == doctest::Approx(0.0).epsilon(1e-6));
}
