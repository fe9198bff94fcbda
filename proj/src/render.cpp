#include "derange/render.hpp"

#include <stdexcept>

namespace derange {

std::string render_board(const Graph& g, const GraphPermutation& p) {
    // The board geometry is read off the generator label.
    const auto colon = g.label.find(':');
    const std::string kind = g.label.substr(0, colon == std::string::npos ? 0 : colon);
    if (kind != "rect" && kind != "mobius" && kind != "torus")
        throw std::invalid_argument("board rendering needs a rect/mobius/torus graph, got '" +
                                    g.label + "'");
    const std::string body = g.label.substr(colon + 1);
    const auto x_pos = body.find('x');
    if (x_pos == std::string::npos || body.find('x', x_pos + 1) != std::string::npos)
        throw std::invalid_argument("board rendering needs a 2-D board, got '" + g.label + "'");
    const int m = std::stoi(body.substr(0, x_pos));
    const int n = std::stoi(body.substr(x_pos + 1));
    if (p.size() != m * n)
        throw std::invalid_argument("witness size does not match the board");

    std::string out;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < n; ++y) {
            const VertexId v = x * n + y;
            const VertexId w = p.succ[v];
            const int tx = w / n, ty = w % n;
            char c = '%';  // wrap move unless a unit grid step below
            if (w == v) c = '*';
            else if (tx == x && ty == y + 1) c = '>';
            else if (tx == x && ty == y - 1) c = '<';
            else if (ty == y && tx == x + 1) c = 'v';
            else if (ty == y && tx == x - 1) c = '^';
            out += c;
        }
        out += '\n';
    }
    return out;
}

}  // namespace derange
