// Batch driver for boundary-integral inner products on punctured cells.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pcell/driver.hpp"
#include "pcell/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"H1/L2 inner products of local Poisson functions on multiply "
               "connected cells, reduced to boundary quadrature"};

  std::string cell_name, geometry_path, functions_path, out_path;
  std::vector<int> n_list = {64};
  std::string solver = "lu";
  pcell::RunConfig cfg;

  app.add_option("--cell", cell_name, "built-in benchmark cell: punctured-square | pacman | ghost");
  app.add_option("--geometry", geometry_path, "geometry file (pcell-geometry/1 JSON)");
  app.add_option("--functions", functions_path, "function pair file (pcell-functions/1 JSON)");
  app.add_option("--n", n_list, "boundary parameters n (even, >= 4)")->delimiter(',');
  app.add_option("--sigma", cfg.sigma, "Kress parameter (default 7)");
  app.add_option("--solver", solver, "dense solver: lu | iterative");
  app.add_flag("--convergence", cfg.convergence, "run every n in the list");
  app.add_option("--interior-grid", cfg.interior_grid, "interior grid resolution");
  app.add_option("--epsilon", cfg.epsilon, "boundary exclusion distance (default 0.02)");
  app.add_flag("--oracle", cfg.oracle, "cross-check against the 2-D quadrature oracle");
  app.add_option("--refine", cfg.interpolation_refinement,
                 "trigonometric interpolation refinement exponent");
  app.add_option("--out", out_path, "output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  cfg.n_list = n_list;
  if (solver == "iterative") cfg.solver = pcell::SolverChoice::Gmres;
  else if (solver != "lu") {
    std::cerr << "unknown solver '" << solver << "' (expected lu or iterative)\n";
    return 1;
  }

  try {
    std::string csv;
    if (!cell_name.empty() && cfg.interior_grid > 0) {
      const pcell::Benchmark b = pcell::benchmark(cell_name);
      csv = pcell::interior_grid_csv(b.cell, b.v, cfg);
    } else if (!cell_name.empty()) {
      csv = pcell::run_benchmark_csv(cell_name, cfg);
    } else if (!geometry_path.empty()) {
      const pcell::PuncturedCell cell = pcell::load_geometry_file(geometry_path);
      if (functions_path.empty()) {
        std::cerr << "--geometry requires --functions\n";
        return 1;
      }
      const auto [v, w] = pcell::load_function_file(functions_path);
      csv = cfg.interior_grid > 0 ? pcell::interior_grid_csv(cell, v, cfg)
                                  : pcell::run_custom_csv(cell, v, w, cfg);
    } else {
      std::cerr << "either --cell or --geometry is required (see --help)\n";
      return 1;
    }
    if (out_path.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 1;
      }
      out << csv;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
