#ifndef DERANGE_RENDER_HPP
#define DERANGE_RENDER_HPP

#include <string>

#include "derange/graph.hpp"
#include "derange/permutation.hpp"

namespace derange {

// ASCII board of successor moves for a 2-D rect/mobius/torus graph (read off
// the graph's label): '>' '<' 'v' '^' for unit grid steps, '*' for a fixed
// point, '%' for a wrap move. One text row per board row.
std::string render_board(const Graph& g, const GraphPermutation& p);

}  // namespace derange

#endif
