#ifndef PCELL_DRIVER_HPP
#define PCELL_DRIVER_HPP

#include <string>
#include <vector>

#include "pcell/benchmarks.hpp"
#include "pcell/dense.hpp"

namespace pcell {

/// Batch-run configuration shared by the CLI entry points.
struct RunConfig {
  std::vector<int> n_list = {64};  ///< even, >= 4
  double sigma = 7.0;
  SolverChoice solver = SolverChoice::DirectLU;
  bool convergence = false;        ///< run the whole n list instead of the last entry
  int interior_grid = 0;           ///< grid resolution, 0 disables interior output
  double epsilon = 0.02;
  bool oracle = false;             ///< cross-check against the 2-D quadrature oracle
  int interpolation_refinement = 0;
  int oracle_order = 160;

  void validate() const;
};

/// Benchmark run: CSV rows  n,quantity,computed,reference,abs_error  matching
/// the reference tables (intermediate quantities on the punctured square,
/// H1/L2 values everywhere).
std::string run_benchmark_csv(const std::string& name, const RunConfig& config);

/// Custom cell + function pair: H1/L2 rows, with oracle columns when enabled.
std::string run_custom_csv(const PuncturedCell& cell, const AnalyticFunction& v,
                           const AnalyticFunction& w, const RunConfig& config);

/// Interior grid evaluation of v on a benchmark or custom cell, as CSV.
std::string interior_grid_csv(const PuncturedCell& cell, const AnalyticFunction& v,
                              const RunConfig& config);

} // namespace pcell

#endif
