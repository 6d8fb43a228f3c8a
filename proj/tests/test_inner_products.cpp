#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "pcell/benchmarks.hpp"
#include "pcell/local_function.hpp"
#include "pcell/oracle.hpp"

using namespace pcell;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::shared_ptr<const HarmonicSolver> make_solver(const PuncturedCell& cell, int n) {
  auto sb = std::make_shared<const SampledBoundary>(cell, n);
  return std::make_shared<const HarmonicSolver>(sb);
}

LocalPoissonFunction from_poly(const SampledBoundary& sb, const BivariatePolynomial& p) {
  LocalPoissonFunction f;
  f.trace.resize(sb.size());
  for (int i = 0; i < sb.size(); ++i) f.trace[i] = p(sb.point(i));
  f.laplacian = p.laplacian();
  return f;
}
} // namespace

TEST_CASE("prepare splits off the polynomial part") {
  auto solver = make_solver(make_punctured_square(), 16);
  const SampledBoundary& sb = solver->boundary();
  SUBCASE("v = x1^2") {
    const PreparedFunction p = prepare(solver, from_poly(sb, BivariatePolynomial{{2, 0, 1.0}}));
    const BivariatePolynomial expected{{2, 0, 0.5}, {0, 2, 0.5}}; // |x|^2/2
    CHECK(p.poly_part.max_coefficient_difference(expected) < 1e-14);
    for (int i = 0; i < sb.size(); ++i) {
      const Vec2 x = sb.point(i);
      CHECK(p.phi[i] == doctest::Approx(0.5 * (x.x * x.x - x.y * x.y)).epsilon(1e-12));
      CHECK(p.phi[i] + p.poly_trace[i] == doctest::Approx(p.trace[i]).epsilon(1e-12));
    }
  }
  SUBCASE("harmonic v has zero polynomial part") {
    const PreparedFunction p =
        prepare(solver, from_poly(sb, BivariatePolynomial{{1, 1, 3.0}, {1, 0, -1.0}}));
    CHECK(p.poly_part.empty());
  }
  SUBCASE("trace length mismatch") {
    LocalPoissonFunction bad;
    bad.trace.assign(sb.size() + 2, 0.0);
    CHECK_THROWS_AS(prepare(solver, bad), std::invalid_argument);
  }
  SUBCASE("polynomial part must match the Laplacian") {
    const LocalPoissonFunction f = from_poly(sb, BivariatePolynomial{{2, 0, 1.0}});
    CHECK_THROWS_AS(prepare(solver, f, BivariatePolynomial{{3, 0, 1.0}}),
                    std::invalid_argument);
  }
}

TEST_CASE("products are invariant under the choice of polynomial anti-Laplacian") {
  const Benchmark b = benchmark("punctured-square");
  auto solver = make_solver(b.cell, 32);
  const SampledBoundary& sb = solver->boundary();
  const LocalPoissonFunction fv = b.v.sample(sb);
  const LocalPoissonFunction fw = b.w.sample(sb);

  // formula-generated anti-Laplacian of 12 x1 x2 equals the x1^3 x2 + x1 x2^3
  // the reference decomposition uses
  const PreparedFunction v0 = prepare(solver, fv);
  const BivariatePolynomial paper_p{{3, 1, 1.0}, {1, 3, 1.0}};
  CHECK(v0.poly_part.max_coefficient_difference(paper_p) < 1e-13);

  // shifting P by a harmonic polynomial moves content between P and phi
  const BivariatePolynomial shifted = paper_p + BivariatePolynomial{{2, 0, 1.0}, {0, 2, -1.0}};
  const PreparedFunction v1 = prepare(solver, fv, shifted);
  const PreparedFunction w = prepare(solver, fw);
  CHECK(h1_semi(v0, w) == doctest::Approx(h1_semi(v1, w)).epsilon(1e-10));
  CHECK(l2(v0, w) == doctest::Approx(l2(v1, w)).epsilon(1e-10));
}

TEST_CASE("constants: zero seminorm and the cell area") {
  auto solver = make_solver(make_punctured_square(), 32);
  const SampledBoundary& sb = solver->boundary();
  const PreparedFunction one = prepare(solver, from_poly(sb, BivariatePolynomial::constant(1.0)));
  CHECK(std::abs(h1_semi(one, one)) < 1e-10);
  CHECK(l2(one, one) == doctest::Approx(1.0 - kPi / 16.0).epsilon(1e-10));
}

TEST_CASE("symmetry and bilinearity") {
  const Benchmark b = benchmark("punctured-square");
  auto solver = make_solver(b.cell, 64);
  const SampledBoundary& sb = solver->boundary();
  const PreparedFunction v = prepare(solver, b.v.sample(sb));
  const PreparedFunction w = prepare(solver, b.w.sample(sb));
  CHECK(h1_semi(v, w) == doctest::Approx(h1_semi(w, v)).epsilon(1e-10));
  CHECK(l2(v, w) == doctest::Approx(l2(w, v)).epsilon(1e-10));

  // linear combination in the first argument
  LocalPoissonFunction combo;
  combo.trace.resize(sb.size());
  const LocalPoissonFunction fv = b.v.sample(sb), fw = b.w.sample(sb);
  for (int i = 0; i < sb.size(); ++i)
    combo.trace[i] = 2.0 * fv.trace[i] - 0.75 * fw.trace[i];
  combo.laplacian = fv.laplacian * 2.0 + fw.laplacian * (-0.75);
  const PreparedFunction c = prepare(solver, combo);
  CHECK(h1_semi(c, w) ==
        doctest::Approx(2.0 * h1_semi(v, w) - 0.75 * h1_semi(w, w)).epsilon(1e-9));
  CHECK(l2(c, w) == doctest::Approx(2.0 * l2(v, w) - 0.75 * l2(w, w)).epsilon(1e-9));
}

TEST_CASE("positivity on a polynomial basis") {
  auto solver = make_solver(make_punctured_square(), 16);
  const SampledBoundary& sb = solver->boundary();
  const std::vector<BivariatePolynomial> basis = {
      BivariatePolynomial::constant(1.0),  BivariatePolynomial::monomial(1, 0),
      BivariatePolynomial::monomial(0, 1), BivariatePolynomial::monomial(1, 1),
      BivariatePolynomial::monomial(2, 0), BivariatePolynomial::monomial(0, 2)};
  for (size_t k = 0; k < basis.size(); ++k) {
    const PreparedFunction p = prepare(solver, from_poly(sb, basis[k]));
    CHECK(l2(p, p) > 0.01);
    if (k == 0) CHECK(std::abs(h1_semi(p, p)) < 1e-10);
    else CHECK(h1_semi(p, p) > 0.01);
  }
}

TEST_CASE("polynomial pairs match the 2-D oracle on benchmark cells") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  auto random_poly = [&]() {
    std::vector<std::tuple<int, int, double>> terms;
    for (int a1 = 0; a1 <= 4; ++a1)
      for (int a2 = 0; a1 + a2 <= 4; ++a2)
        if (rng() % 2 == 0) terms.emplace_back(a1, a2, coef(rng));
    terms.emplace_back(0, 0, coef(rng));
    return BivariatePolynomial(terms);
  };
  for (const std::string name : {"punctured-square", "ghost"}) {
    const Benchmark b = benchmark(name);
    auto solver = make_solver(b.cell, 64);
    const SampledBoundary& sb = solver->boundary();
    for (int trial = 0; trial < 3; ++trial) {
      const BivariatePolynomial pv = random_poly(), pw = random_poly();
      const PreparedFunction v = prepare(solver, from_poly(sb, pv));
      const PreparedFunction w = prepare(solver, from_poly(sb, pw));
      const double oh1 = *oracle::integrate_named_cell(
          name, [&](Vec2 x) { return pv.gradient(x).dot(pw.gradient(x)); }, 120);
      const double ol2 = *oracle::integrate_named_cell(
          name, [&](Vec2 x) { return pv(x) * pw(x); }, 120);
      const double scale_h = std::max(1.0, std::abs(oh1));
      const double scale_l = std::max(1.0, std::abs(ol2));
      CHECK(std::abs(h1_semi(v, w) - oh1) / scale_h < 1e-8);
      CHECK(std::abs(l2(v, w) - ol2) / scale_l < 1e-8);
    }
  }
}

TEST_CASE("anti-Laplacian gauge invariance of the L2 product") {
  const Benchmark b = benchmark("punctured-square");
  auto solver = make_solver(b.cell, 32);
  const SampledBoundary& sb = solver->boundary();
  PreparedFunction v = prepare(solver, b.v.sample(sb));
  const PreparedFunction w = prepare(solver, b.w.sample(sb));
  const double before = l2(v, w);
  // add the linear function a x1 + b x2 to Phi with the matching normal shift
  const double a = 0.7, bb = -1.3;
  for (int i = 0; i < sb.size(); ++i) {
    const Vec2 x = sb.point(i), wn = sb.weighted_normal(i);
    v.anti.value[i] += a * x.x + bb * x.y;
    v.anti.wnd[i] += a * wn.x + bb * wn.y;
  }
  CHECK(l2(v, w) == doctest::Approx(before).epsilon(1e-10));
}

TEST_CASE("functions prepared on different cells cannot be combined") {
  auto s1 = make_solver(make_unit_circle(), 8);
  auto s2 = make_solver(make_unit_circle(), 8);
  const PreparedFunction v =
      prepare(s1, from_poly(s1->boundary(), BivariatePolynomial::constant(1.0)));
  const PreparedFunction w =
      prepare(s2, from_poly(s2->boundary(), BivariatePolynomial::constant(1.0)));
  CHECK_THROWS_AS(h1_semi(v, w), std::invalid_argument);
  CHECK_THROWS_AS(l2(v, w), std::invalid_argument);
}

TEST_CASE("trigonometric interpolation refinement keeps the products accurate") {
  const Benchmark b = benchmark("punctured-square");
  auto solver = make_solver(b.cell, 32);
  const SampledBoundary& sb = solver->boundary();
  const PreparedFunction v = prepare(solver, b.v.sample(sb));
  const PreparedFunction w = prepare(solver, b.w.sample(sb));
  const InnerProductOptions refined{2};
  CHECK(h1_semi(v, w, refined) == doctest::Approx(b.h1_reference).epsilon(1e-8));
  CHECK(l2(v, w, refined) == doctest::Approx(b.l2_reference).epsilon(1e-9));
  CHECK(h1_semi(v, w, refined) == doctest::Approx(h1_semi(v, w)).epsilon(1e-8));
}
