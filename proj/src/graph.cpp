#include "derange/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace derange {

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (const auto& a : adj) deg_sum += static_cast<long long>(a.size());
    return deg_sum / 2;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : adj[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                  std::string label) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    g.label = std::move(label);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

namespace {

std::string dims_label(const std::string& prefix, const std::vector<int>& dims) {
    std::string s = prefix + ":";
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(dims[i]);
    }
    return s;
}

// Internal: edges that ignore duplicates and loops (wrap rules may produce both).
Graph build_dedup(int n, std::vector<std::pair<VertexId, VertexId>> edges, std::string label) {
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const auto& e) { return e.first == e.second; }),
                edges.end());
    return build_graph(n, edges, std::move(label));
}

std::vector<std::pair<VertexId, VertexId>> grid_edges(const std::vector<int>& dims) {
    // Row-major strides, last coordinate fastest.
    const int k = static_cast<int>(dims.size());
    std::vector<long long> stride(k);
    long long total = 1;
    for (int i = k - 1; i >= 0; --i) {
        stride[i] = total;
        total *= dims[i];
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> coord(k, 0);
    for (long long v = 0; v < total; ++v) {
        for (int i = 0; i < k; ++i)
            if (coord[i] + 1 < dims[i])
                edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(v + stride[i]));
        for (int i = k - 1; i >= 0; --i) {
            if (++coord[i] < dims[i]) break;
            coord[i] = 0;
        }
    }
    return edges;
}

}  // namespace

Graph gen_checkerboard(const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("checkerboard needs at least one dimension");
    long long total = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("checkerboard dimensions must be positive");
        total *= d;
        if (total > 1'000'000) throw std::invalid_argument("checkerboard too large");
    }
    return build_graph(static_cast<int>(total), grid_edges(dims), dims_label("rect", dims));
}

Graph gen_moebius(int m, int n) {
    if (m < 2) throw std::invalid_argument("moebius board needs m >= 2");
    if (n < 1) throw std::invalid_argument("moebius board needs n >= 1");
    if (n == 1) {
        // The wrap rule (x,1)~(x,1) would be a loop; the intended graph is C_m.
        auto g = gen_cycle(m);
        g.label = dims_label("mobius", {m, 1});
        return g;
    }
    auto edges = grid_edges({m, n});
    for (int x = 0; x < m; ++x) edges.emplace_back(x * n + (n - 1), x * n);
    return build_dedup(m * n, std::move(edges), dims_label("mobius", {m, n}));
}

Graph gen_torus(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("torus board needs m,n >= 2");
    auto edges = grid_edges({m, n});
    for (int x = 0; x < m; ++x) edges.emplace_back(x * n + (n - 1), x * n);
    for (int y = 0; y < n; ++y) edges.emplace_back((m - 1) * n + y, y);
    return build_dedup(m * n, std::move(edges), dims_label("torus", {m, n}));
}

Graph gen_cycle(int m) {
    if (m < 2) throw std::invalid_argument("cycle graph needs m >= 2");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(m - 1, 0);
    return build_dedup(m, std::move(edges), "cycle:" + std::to_string(m));
}

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges, "complete:" + std::to_string(n));
}

std::vector<VertexId> neighborhood(const Graph& g, const std::vector<VertexId>& xs) {
    std::vector<char> in(g.n, 0);
    for (VertexId x : xs) {
        if (x < 0 || x >= g.n) throw std::invalid_argument("vertex out of range");
        for (VertexId u : g.adj[x]) in[u] = 1;
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.n; ++v)
        if (in[v]) out.push_back(v);
    return out;
}

bool is_independent(const Graph& g, const std::vector<VertexId>& xs) {
    std::vector<char> in(g.n, 0);
    for (VertexId x : xs) {
        if (x < 0 || x >= g.n) throw std::invalid_argument("vertex out of range");
        in[x] = 1;
    }
    for (VertexId x : xs)
        for (VertexId u : g.adj[x])
            if (in[u]) return false;
    return true;
}

std::vector<VertexId> Bipartition::side(int c) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<VertexId>(color.size()); ++v)
        if (color[v] == c) out.push_back(v);
    return out;
}

std::optional<Bipartition> two_color(const Graph& g) {
    Bipartition bp;
    bp.color.assign(g.n, -1);
    std::queue<VertexId> q;
    for (VertexId s = 0; s < g.n; ++s) {
        if (bp.color[s] != -1) continue;
        bp.color[s] = 0;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId u : g.adj[v]) {
                if (bp.color[u] == -1) {
                    bp.color[u] = 1 - bp.color[v];
                    q.push(u);
                } else if (bp.color[u] == bp.color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return bp;
}

std::optional<std::vector<VertexId>> odd_closed_walk(const Graph& g) {
    std::vector<int> color(g.n, -1);
    std::vector<VertexId> parent(g.n, -1);
    std::queue<VertexId> q;
    for (VertexId s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId u : g.adj[v]) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    q.push(u);
                } else if (color[u] == color[v]) {
                    // v -> ... -> root -> ... -> u -> v closes with odd edge count.
                    std::vector<VertexId> up_v, up_u;
                    for (VertexId w = v; w != -1; w = parent[w]) up_v.push_back(w);
                    for (VertexId w = u; w != -1; w = parent[w]) up_u.push_back(w);
                    std::vector<VertexId> walk(up_v.begin(), up_v.end());
                    for (auto it = up_u.rbegin(); it != up_u.rend(); ++it) walk.push_back(*it);
                    walk.push_back(v);
                    return walk;
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<char> seen(g.n, 0);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp{s};
        seen[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (VertexId u : g.adj[comp[i]])
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<Obstruction> lemma_obstructions(const Graph& g) {
    std::vector<Obstruction> out;
    for (VertexId v = 0; v < g.n; ++v)
        if (g.degree(v) == 0) out.push_back({Obstruction::Kind::IsolatedVertex, v, -1, -1});
    // Pendant vertices grouped by their unique neighbor; any two in a group
    // certify an empty derangement set.
    std::vector<std::vector<VertexId>> pendants_at(g.n);
    for (VertexId v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) pendants_at[g.adj[v][0]].push_back(v);
    for (VertexId s = 0; s < g.n; ++s) {
        const auto& ps = pendants_at[s];
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j)
                out.push_back({Obstruction::Kind::PendantPair, ps[i], ps[j], s});
    }
    return out;
}

BipartiteDouble bipartite_double(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < g.n; ++v)
        for (VertexId u : g.adj[v])
            edges.emplace_back(v, g.n + u);  // covers both crossings over the edge scan
    BipartiteDouble d;
    d.original_n = g.n;
    d.graph = build_graph(2 * g.n, edges,
                          g.label.empty() ? std::string("double") : "double(" + g.label + ")");
    return d;
}

}  // namespace derange
