#ifndef DERANGE_GRAPH_HPP
#define DERANGE_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace derange {

using VertexId = int;

// Immutable simple undirected graph with sorted adjacency lists.
// Vertices are densely indexed 0..n-1. Grid-family generators use row-major
// indexing: cell (x,y) of an m-by-n board, 1-based, gets index (x-1)*n + (y-1).
// Graphs are never mutated after construction, so sharing across threads is safe.
struct Graph {
    int n = 0;
    std::vector<std::vector<VertexId>> adj;  // per vertex: sorted, no duplicates
    std::string label;                       // generator spec string, e.g. "rect:3x4"

    int vertex_count() const { return n; }
    int degree(VertexId v) const { return static_cast<int>(adj[v].size()); }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj[v]; }
    bool has_edge(VertexId u, VertexId v) const;
    long long edge_count() const;
    std::vector<std::pair<VertexId, VertexId>> edges() const;  // u < v, sorted
};

// Builds a graph from an edge list. Rejects out-of-range endpoints and
// self-loops; parallel edges and repeated orientations collapse to one edge.
Graph build_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                  std::string label = "");

// Checkerboard graph on {1..d1} x ... x {1..dk}: cells are adjacent iff their
// coordinate L1-distance is 1. Any arity >= 1; every dimension >= 1.
Graph gen_checkerboard(const std::vector<int>& dims);

// Checkerboard plus the column wrap (x,n)~(x,1). For n == 1 the wrap rule
// degenerates to self-loops, so that case returns the cycle graph C_m instead;
// for n == 2 the wrap duplicates grid edges and dedup leaves the plain grid.
Graph gen_moebius(int m, int n);

// Moebius plus the row wrap (m,y)~(1,y); requires m,n >= 2.
Graph gen_torus(int m, int n);

Graph gen_cycle(int m);  // C_m, m >= 2
Graph gen_complete(int n);

// Union of open neighborhoods of X. May intersect X. Sorted output.
std::vector<VertexId> neighborhood(const Graph& g, const std::vector<VertexId>& xs);

// True iff no two members of X are adjacent; equivalent to X and N(X) disjoint.
bool is_independent(const Graph& g, const std::vector<VertexId>& xs);

struct Bipartition {
    std::vector<int> color;  // 0/1 per vertex; adjacent vertices differ
    std::vector<VertexId> side(int c) const;
};

// BFS 2-coloring with the lowest-index vertex of each component colored 0.
// Empty result iff the graph contains an odd cycle.
std::optional<Bipartition> two_color(const Graph& g);

// For a non-bipartite graph, a closed walk of odd length (first vertex repeated
// at the end); nullopt when the graph is bipartite.
std::optional<std::vector<VertexId>> odd_closed_walk(const Graph& g);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// Local certificates that no derangement exists: an isolated vertex, or two
// pendant vertices hanging off a common support vertex.
struct Obstruction {
    enum class Kind { IsolatedVertex, PendantPair };
    Kind kind = Kind::IsolatedVertex;
    VertexId a = -1;        // the isolated vertex, or the first pendant
    VertexId b = -1;        // the second pendant (PendantPair only)
    VertexId support = -1;  // the shared neighbor (PendantPair only)
};
std::vector<Obstruction> lemma_obstructions(const Graph& g);

// Two copies of the vertex set with every original edge {x,y} replaced by the
// crossing edges {x1,y2} and {y1,x2}. Side 1 keeps indices 0..n-1, side 2 is
// n..2n-1. The result is bipartite with the sides as color classes even when
// the input is not.
struct BipartiteDouble {
    Graph graph;
    int original_n = 0;

    int side(VertexId v) const { return v < original_n ? 1 : 2; }
    VertexId original(VertexId v) const { return v < original_n ? v : v - original_n; }
    VertexId side1(VertexId orig) const { return orig; }
    VertexId side2(VertexId orig) const { return orig + original_n; }
};
BipartiteDouble bipartite_double(const Graph& g);

}  // namespace derange

#endif
