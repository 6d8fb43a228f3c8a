#ifndef PCELL_IO_HPP
#define PCELL_IO_HPP

#include <string>
#include <utility>

#include "pcell/benchmarks.hpp"
#include "pcell/cell.hpp"

namespace pcell {

/// Versioned geometry document ("pcell-geometry/1"); see README for the schema.
PuncturedCell parse_geometry(const std::string& json_text);
PuncturedCell load_geometry_file(const std::string& path);

/// Versioned function-pair document ("pcell-functions/1"): term lists for v
/// and w in the closed trace vocabulary plus optional explicit Laplacians.
std::pair<AnalyticFunction, AnalyticFunction> parse_function_pair(const std::string& json_text);
std::pair<AnalyticFunction, AnalyticFunction> load_function_file(const std::string& path);

} // namespace pcell

#endif
