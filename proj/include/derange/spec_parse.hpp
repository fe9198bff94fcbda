#ifndef DERANGE_SPEC_PARSE_HPP
#define DERANGE_SPEC_PARSE_HPP

#include <iosfwd>
#include <string>

#include "derange/graph.hpp"

namespace derange {

// Graph spec grammar:
//   rect:D1xD2[x...]   checkerboard, any arity
//   mobius:MxN         column-wrapped board (cycle graph when N = 1)
//   torus:MxN          both wraps
//   cycle:M            C_M
//   complete:N         K_N
//   file:PATH          graph file, "n m" header then m lines "u v" (0-based)
// Throws std::invalid_argument with a diagnostic on any malformed spec.
Graph parse_graph_spec(const std::string& spec);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, std::ostream& os);

}  // namespace derange

#endif
