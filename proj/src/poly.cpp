#include "pcell/poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pcell/sampled_boundary.hpp"

namespace pcell {

namespace {

double ipow(double b, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

} // namespace

BivariatePolynomial::BivariatePolynomial(std::initializer_list<std::tuple<int, int, double>> terms) {
  for (const auto& [a1, a2, c] : terms) add_term(a1, a2, c);
  prune();
  check_degree();
}

BivariatePolynomial::BivariatePolynomial(const std::vector<std::tuple<int, int, double>>& terms) {
  for (const auto& [a1, a2, c] : terms) add_term(a1, a2, c);
  prune();
  check_degree();
}

BivariatePolynomial BivariatePolynomial::constant(double c) {
  return monomial(0, 0, c);
}

BivariatePolynomial BivariatePolynomial::monomial(int a1, int a2, double c) {
  BivariatePolynomial p;
  p.add_term(a1, a2, c);
  p.prune();
  p.check_degree();
  return p;
}

void BivariatePolynomial::add_term(int a1, int a2, double c) {
  if (a1 < 0 || a2 < 0) throw std::invalid_argument("polynomial multi-index must be nonnegative");
  coef_[{a1, a2}] += c;
}

void BivariatePolynomial::prune() {
  double maxabs = 0.0;
  for (const auto& [idx, c] : coef_) maxabs = std::max(maxabs, std::abs(c));
  const double tol = 1e-14 * std::max(1.0, maxabs);
  for (auto it = coef_.begin(); it != coef_.end();) {
    if (std::abs(it->second) <= tol) it = coef_.erase(it);
    else ++it;
  }
}

void BivariatePolynomial::check_degree() const {
  if (degree() > kMaxDegree)
    throw std::invalid_argument("polynomial degree exceeds cap " + std::to_string(kMaxDegree));
}

int BivariatePolynomial::degree() const {
  int d = -1;
  for (const auto& [idx, c] : coef_) d = std::max(d, idx[0] + idx[1]);
  return d;
}

double BivariatePolynomial::coefficient(int a1, int a2) const {
  auto it = coef_.find({a1, a2});
  return it == coef_.end() ? 0.0 : it->second;
}

double BivariatePolynomial::operator()(Vec2 p) const {
  double s = 0.0;
  for (const auto& [idx, c] : coef_) s += c * ipow(p.x, idx[0]) * ipow(p.y, idx[1]);
  return s;
}

Vec2 BivariatePolynomial::gradient(Vec2 p) const {
  Vec2 g;
  for (const auto& [idx, c] : coef_) {
    if (idx[0] > 0) g.x += c * idx[0] * ipow(p.x, idx[0] - 1) * ipow(p.y, idx[1]);
    if (idx[1] > 0) g.y += c * idx[1] * ipow(p.x, idx[0]) * ipow(p.y, idx[1] - 1);
  }
  return g;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
  BivariatePolynomial r = *this;
  r += o;
  return r;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [idx, c] : o.coef_) coef_[idx] += c;
  prune();
  check_degree();
  return *this;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
  return *this + o * (-1.0);
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
  BivariatePolynomial r;
  for (const auto& [ia, ca] : coef_)
    for (const auto& [ib, cb] : o.coef_)
      r.add_term(ia[0] + ib[0], ia[1] + ib[1], ca * cb);
  r.prune();
  r.check_degree();
  return r;
}

BivariatePolynomial BivariatePolynomial::operator*(double s) const {
  BivariatePolynomial r;
  for (const auto& [idx, c] : coef_) r.coef_[idx] = c * s;
  r.prune();
  return r;
}

BivariatePolynomial BivariatePolynomial::dx() const {
  BivariatePolynomial r;
  for (const auto& [idx, c] : coef_)
    if (idx[0] > 0) r.add_term(idx[0] - 1, idx[1], c * idx[0]);
  r.prune();
  return r;
}

BivariatePolynomial BivariatePolynomial::dy() const {
  BivariatePolynomial r;
  for (const auto& [idx, c] : coef_)
    if (idx[1] > 0) r.add_term(idx[0], idx[1] - 1, c * idx[1]);
  r.prune();
  return r;
}

BivariatePolynomial BivariatePolynomial::laplacian() const {
  return dx().dx() + dy().dy();
}

double BivariatePolynomial::max_coefficient_difference(const BivariatePolynomial& o) const {
  double m = 0.0;
  for (const auto& [idx, c] : coef_) m = std::max(m, std::abs(c - o.coefficient(idx[0], idx[1])));
  for (const auto& [idx, c] : o.coef_) m = std::max(m, std::abs(c - coefficient(idx[0], idx[1])));
  return m;
}

std::string BivariatePolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : coef_) {
    if (!first) os << " + ";
    os << c << "*x1^" << idx[0] << "*x2^" << idx[1];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

BivariatePolynomial anti_laplacian_poly(const BivariatePolynomial& q) {
  const BivariatePolynomial rsq{{2, 0, 1.0}, {0, 2, 1.0}};
  BivariatePolynomial result;
  for (const auto& [idx, c] : q.coefficients()) {
    const int alpha = idx[0] + idx[1];
    // Term-by-term anti-Laplacian of x^alpha: successive Laplacians of the
    // monomial weighted by (-1)^k (|a|-k)! / ((|a|+1)! (k+1)!) (|x|^2/4)^(k+1).
    BivariatePolynomial lap_k = BivariatePolynomial::monomial(idx[0], idx[1]);
    BivariatePolynomial rsq_pow = rsq * 0.25; // (|x|^2/4)^(k+1)
    for (int k = 0; k <= alpha / 2; ++k) {
      if (k > 0) {
        lap_k = lap_k.laplacian();
        rsq_pow = rsq_pow * (rsq * 0.25);
      }
      // (|a|-k)! / ((|a|+1)! (k+1)!) as an exact product of small integers
      double denom = 1.0;
      for (int j = alpha - k + 1; j <= alpha + 1; ++j) denom *= j;
      for (int j = 2; j <= k + 1; ++j) denom *= j;
      const double w = ((k % 2 == 0) ? 1.0 : -1.0) / denom;
      result += rsq_pow * lap_k * (c * w);
    }
  }
  return result;
}

double integrate_poly_over_cell(const BivariatePolynomial& q, const SampledBoundary& sb) {
  // int_K x^a dx = (2+|a|)^{-1} oint (x.n) x^a ds, term by term.
  double total = 0.0;
  for (const auto& [idx, c] : q.coefficients()) {
    double contour = 0.0;
    for (int i = 0; i < sb.size(); ++i) {
      const Vec2 x = sb.point(i);
      double xn = x.dot(sb.weighted_normal(i));
      double m = 1.0;
      for (int k = 0; k < idx[0]; ++k) m *= x.x;
      for (int k = 0; k < idx[1]; ++k) m *= x.y;
      contour += xn * m;
    }
    total += c * sb.step() * contour / (2.0 + idx[0] + idx[1]);
  }
  return total;
}

} // namespace pcell
