#include "pcell/nystrom.hpp"

#include <cmath>
#include <stdexcept>

namespace pcell {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInv2Pi = 1.0 / (2.0 * kPi);
} // namespace

double LayerKernels::fundamental(Vec2 x, Vec2 y) {
  return -kInv2Pi * std::log(dist(x, y));
}

double LayerKernels::double_layer(Vec2 x, Vec2 y, Vec2 unit_normal_y) {
  const Vec2 r = y - x;
  return -kInv2Pi * r.dot(unit_normal_y) / r.norm2();
}

double LayerKernels::double_layer_weighted(Vec2 x, Vec2 y, Vec2 weighted_normal_y) {
  const Vec2 r = y - x;
  return -kInv2Pi * r.dot(weighted_normal_y) / r.norm2();
}

double LayerKernels::circle_constant(double radius) {
  return -1.0 / (4.0 * kPi * radius);
}

Eigen::MatrixXd build_dlp_operator(const SampledBoundary& sb) {
  // c(x) u(x) + oint dG/dn(y) u(y) dS(y) is discretized in the subtracted form
  //   oint dG/dn(y) (u(y) - u(x_i)) dS(y),
  // exact because oint dG/dn(y) dS(y) = -c(x) pointwise (Gauss identity, with
  // c the interior-angle fraction at corners). The discrete row sum then
  // annihilates constants exactly and tests the unresolved near-corner kernel
  // mass only against the density increment, which the Kress grading crushes.
  const int N = sb.size();
  const double h = sb.step();
  Eigen::MatrixXd A(N, N);
  for (int i = 0; i < N; ++i) {
    const Vec2 xi = sb.point(i);
    double row_sum = 0.0;
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      const double w =
          h * LayerKernels::double_layer_weighted(xi, sb.point(j), sb.weighted_normal(j));
      A(i, j) = w + h * sb.speed(j); // second term: rank-one mean constraint
      row_sum += w;
    }
    A(i, i) = h * sb.speed(i) - row_sum;
  }
  return A;
}

std::vector<double> kress_log_weights(int q) {
  std::vector<double> R(2 * q);
  for (int k = 0; k < 2 * q; ++k) {
    double s = 0.0;
    for (int m = 1; m < q; ++m) s += std::cos(m * k * kPi / q) / m;
    R[k] = -(2.0 * kPi / q) * s - ((k % 2 == 0) ? 1.0 : -1.0) * kPi / (q * q);
  }
  return R;
}

std::vector<double> apply_slp_weighted(const SampledBoundary& sb, std::span<const double> fw) {
  const int N = sb.size();
  if (static_cast<int>(fw.size()) != N)
    throw std::invalid_argument("density length does not match node count");
  const double h = sb.step();
  std::vector<double> out(N, 0.0);

  for (int c = 0; c < sb.component_count(); ++c) {
    const int b = sb.component_begin(c), e = sb.component_end(c);
    const int M = e - b, q = M / 2;
    const int E = sb.component_edge_count(c);
    const std::vector<double> R = kress_log_weights(q);

    for (int i = 0; i < N; ++i) {
      const Vec2 xi = sb.point(i);
      double acc = 0.0;
      if (sb.component_of(i) == c) {
        // periodic-log product quadrature plus smooth remainder
        const int p = i - b;
        double s_log = 0.0, s_smooth = 0.0;
        for (int j = b; j < e; ++j) {
          const int jj = j - b;
          int k = p - jj;
          if (k < 0) k += M;
          s_log += R[k] * fw[j];
          double L;
          if (j == i) {
            L = sb.is_corner(i) ? 0.0 : std::log(E * sb.speed(i));
          } else {
            const double d2 = (xi - sb.point(j)).norm2();
            const double sn = std::sin((p - jj) * kPi / M);
            L = 0.5 * std::log(d2 / (4.0 * sn * sn));
          }
          s_smooth += L * fw[j];
        }
        acc = -E * s_log / (4.0 * kPi) - h * s_smooth * kInv2Pi;
      } else {
        for (int j = b; j < e; ++j)
          acc += LayerKernels::fundamental(xi, sb.point(j)) * fw[j];
        acc *= h;
      }
      out[i] += acc;
    }
  }
  return out;
}

std::vector<double> apply_slp(const SampledBoundary& sb, std::span<const double> f) {
  if (static_cast<int>(f.size()) != sb.size())
    throw std::invalid_argument("density length does not match node count");
  std::vector<double> fw(f.size());
  for (int i = 0; i < sb.size(); ++i) fw[i] = f[i] * sb.speed(i);
  return apply_slp_weighted(sb, fw);
}

} // namespace pcell
