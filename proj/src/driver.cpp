#include "pcell/driver.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "pcell/interior.hpp"
#include "pcell/oracle.hpp"

namespace pcell {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15e", x);
  return buf;
}

struct PreparedPair {
  std::shared_ptr<const HarmonicSolver> solver;
  PreparedFunction v, w;
};

PreparedPair prepare_pair(const PuncturedCell& cell, const AnalyticFunction& fv,
                          const AnalyticFunction& fw, int n, const RunConfig& cfg) {
  auto sb = std::make_shared<const SampledBoundary>(cell, n, cfg.sigma);
  auto solver = std::make_shared<const HarmonicSolver>(sb, cfg.solver);
  PreparedPair p;
  p.v = prepare(solver, fv.sample(*sb));
  p.w = prepare(solver, fw.sample(*sb));
  p.solver = std::move(solver);
  return p;
}

std::vector<int> selected_n(const RunConfig& cfg) {
  if (cfg.convergence) return cfg.n_list;
  return {cfg.n_list.back()};
}

} // namespace

void RunConfig::validate() const {
  if (n_list.empty()) throw std::invalid_argument("at least one n value is required");
  for (int n : n_list)
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("n values must be even and >= 4");
  if (!(sigma >= 2.0)) throw std::invalid_argument("sigma must be >= 2");
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");
  if (interpolation_refinement < 0)
    throw std::invalid_argument("interpolation refinement must be nonnegative");
}

std::string run_benchmark_csv(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  const Benchmark bench = benchmark(name);
  std::ostringstream os;
  os << "n,quantity,computed,reference,abs_error\n";
  const InnerProductOptions opt{cfg.interpolation_refinement};
  for (int n : selected_n(cfg)) {
    const PreparedPair p = prepare_pair(bench.cell, bench.v, bench.w, n, cfg);
    if (name == "punctured-square") {
      const IntermediateErrors ie = example1_intermediate_errors(p.v);
      os << n << ",a1," << fmt(p.v.hd.a[0]) << "," << fmt(1.0) << "," << fmt(ie.a1) << "\n";
      os << n << ",psi_hat_l2_error," << fmt(ie.psi_hat) << "," << fmt(0.0) << ","
         << fmt(ie.psi_hat) << "\n";
      os << n << ",wnd_l2_error," << fmt(ie.wnd) << "," << fmt(0.0) << "," << fmt(ie.wnd)
         << "\n";
      os << n << ",antilaplacian_l2_error," << fmt(ie.antilap) << "," << fmt(0.0) << ","
         << fmt(ie.antilap) << "\n";
    }
    const double h1 = h1_semi(p.v, p.w, opt);
    const double l2v = l2(p.v, p.w, opt);
    os << n << ",h1," << fmt(h1) << "," << fmt(bench.h1_reference) << ","
       << fmt(std::abs(h1 - bench.h1_reference)) << "\n";
    os << n << ",l2," << fmt(l2v) << "," << fmt(bench.l2_reference) << ","
       << fmt(std::abs(l2v - bench.l2_reference)) << "\n";
  }
  return os.str();
}

std::string run_custom_csv(const PuncturedCell& cell, const AnalyticFunction& fv,
                           const AnalyticFunction& fw, const RunConfig& cfg) {
  cfg.validate();
  std::ostringstream os;
  os << "n,quantity,computed,reference,abs_error\n";
  const InnerProductOptions opt{cfg.interpolation_refinement};
  for (int n : selected_n(cfg)) {
    const PreparedPair p = prepare_pair(cell, fv, fw, n, cfg);
    const double h1 = h1_semi(p.v, p.w, opt);
    const double l2v = l2(p.v, p.w, opt);
    if (cfg.oracle) {
      const auto grad = [&](Vec2 x) { return fv.gradient(x).dot(fw.gradient(x)); };
      const auto prod = [&](Vec2 x) { return fv.value(x) * fw.value(x); };
      const auto oh1 = oracle::integrate_named_cell(cell.name(), grad, cfg.oracle_order);
      const auto ol2 = oracle::integrate_named_cell(cell.name(), prod, cfg.oracle_order);
      if (!oh1 || !ol2)
        throw std::invalid_argument("no 2-D quadrature oracle covers cell '" + cell.name() +
                                    "'");
      os << n << ",h1," << fmt(h1) << "," << fmt(*oh1) << "," << fmt(std::abs(h1 - *oh1))
         << "\n";
      os << n << ",l2," << fmt(l2v) << "," << fmt(*ol2) << "," << fmt(std::abs(l2v - *ol2))
         << "\n";
    } else {
      os << n << ",h1," << fmt(h1) << ",,\n";
      os << n << ",l2," << fmt(l2v) << ",,\n";
    }
  }
  return os.str();
}

std::string interior_grid_csv(const PuncturedCell& cell, const AnalyticFunction& fv,
                              const RunConfig& cfg) {
  cfg.validate();
  if (cfg.interior_grid <= 0)
    throw std::invalid_argument("interior grid resolution must be positive");
  const int n = cfg.n_list.back();
  auto sb = std::make_shared<const SampledBoundary>(cell, n, cfg.sigma);
  auto solver = std::make_shared<const HarmonicSolver>(sb, cfg.solver);
  const PreparedFunction v = prepare(solver, fv.sample(*sb));

  Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
  for (int i = 0; i < sb->size(); ++i) {
    lo.x = std::min(lo.x, sb->point(i).x);
    lo.y = std::min(lo.y, sb->point(i).y);
    hi.x = std::max(hi.x, sb->point(i).x);
    hi.y = std::max(hi.y, sb->point(i).y);
  }
  InteriorQuery q{grid_points(lo, hi, cfg.interior_grid), cfg.epsilon};
  const auto vals = cauchy_eval(v, q);
  std::ostringstream os;
  write_interior_csv(os, vals);
  return os.str();
}

} // namespace pcell
