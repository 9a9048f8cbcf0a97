#pragma once

#include <iosfwd>
#include <string>

#include "shiftlab/graph.hpp"

namespace shiftlab {

// Edge-list text format:
//   n <vertex-count>
//   u v w        (0-based endpoints, decimal weight)
// '#' starts a comment, blank lines are ignored. Weights are written with
// 17 significant digits so a write/read round trip is lossless.

void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

void save_edge_list(const std::string& path, const Graph& g);
Graph load_edge_list(const std::string& path);

}  // namespace shiftlab
