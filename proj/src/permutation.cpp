#include "derange/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace derange {

Classification validate(const Graph& g, const GraphPermutation& p) {
    if (p.size() != g.n)
        throw std::invalid_argument("successor mapping must be total on the vertex set");
    Classification c;
    std::vector<char> hit(g.n, 0);
    int fixed = 0;
    for (VertexId v = 0; v < g.n; ++v) {
        VertexId w = p.succ[v];
        if (w < 0 || w >= g.n) {
            c.kind = Classification::Kind::Invalid;
            c.offending = v;
            c.reason = "image-out-of-range";
            return c;
        }
        if (w == v) {
            ++fixed;
        } else if (!g.has_edge(v, w)) {
            c.kind = Classification::Kind::Invalid;
            c.offending = v;
            c.reason = "non-adjacent-image";
            return c;
        }
        if (hit[w]) {
            c.kind = Classification::Kind::Invalid;
            c.offending = v;
            c.reason = "not-injective";
            return c;
        }
        hit[w] = 1;
    }
    c.kind = fixed == 0 ? Classification::Kind::Derangement
                        : Classification::Kind::PermutationWithFixedPoints;
    c.fixed_points = fixed;
    return c;
}

CycleDecomposition cycle_decomposition(const GraphPermutation& p) {
    const int n = p.size();
    CycleDecomposition d;
    std::vector<char> seen(n, 0);
    // Scanning ascending makes each orbit start at its minimum vertex and
    // orders cycles by that minimum.
    for (VertexId v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<VertexId> cycle;
        VertexId w = v;
        while (!seen[w]) {
            seen[w] = 1;
            cycle.push_back(w);
            w = p.succ[w];
        }
        d.cycles.push_back(std::move(cycle));
    }
    for (const auto& c : d.cycles) d.type.push_back(static_cast<int>(c.size()));
    std::sort(d.type.rbegin(), d.type.rend());
    return d;
}

std::string cycle_type_string(const CycleType& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += "+";
        s += std::to_string(t[i]);
    }
    return s;
}

CycleType parse_cycle_type(const std::string& s) {
    CycleType t;
    size_t pos = 0;
    if (s.empty()) throw std::invalid_argument("empty partition");
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        if (next == std::string::npos) next = s.size();
        const std::string tok = s.substr(pos, next - pos);
        size_t used = 0;
        int part = 0;
        try {
            part = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part: '" + tok + "'");
        }
        if (used != tok.size() || part <= 0)
            throw std::invalid_argument("bad partition part: '" + tok + "'");
        t.push_back(part);
        pos = next + 1;
        if (pos == s.size() && next != s.size())
            throw std::invalid_argument("trailing '+' in partition");
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

GraphPermutation rings_permutation(int m) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("rings permutation needs an odd board size");
    GraphPermutation p;
    p.succ.assign(m * m, -1);
    auto idx = [m](int x, int y) { return (x - 1) * m + (y - 1); };  // 1-based coords
    for (int x = 1; x <= m; ++x) {
        for (int y = 1; y <= m; ++y) {
            const int r = std::min(std::min(x - 1, y - 1), std::min(m - x, m - y));
            const int lo = r + 1, hi = m - r;
            int tx = x, ty = y;
            if (lo == hi) {
                // center cell of an odd board: the single fixed point
            } else if (x == lo && y > lo) {
                ty = y - 1;  // top row moves left
            } else if (y == lo && x < hi) {
                tx = x + 1;  // left column moves down
            } else if (x == hi && y < hi) {
                ty = y + 1;  // bottom row moves right
            } else {
                tx = x - 1;  // right column moves up
            }
            p.succ[idx(x, y)] = idx(tx, ty);
        }
    }
    return p;
}

bool is_matching(const Graph& g, const Matching& m) {
    std::vector<char> used(g.n, 0);
    for (auto [u, v] : m) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
    return is_matching(g, m) && static_cast<int>(m.size()) * 2 == g.n;
}

GraphPermutation matching_to_dyadic(const Graph& g, const Matching& m) {
    GraphPermutation p;
    p.succ.resize(g.n);
    for (VertexId v = 0; v < g.n; ++v) p.succ[v] = v;
    std::vector<char> used(g.n, 0);
    for (auto [u, v] : m) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            throw std::invalid_argument("matching edge out of range");
        if (!g.has_edge(u, v)) throw std::invalid_argument("matching edge not in graph");
        if (used[u] || used[v]) throw std::invalid_argument("matching edges share a vertex");
        used[u] = used[v] = 1;
        p.succ[u] = v;
        p.succ[v] = u;
    }
    return p;
}

Matching dyadic_to_matching(const GraphPermutation& p) {
    Matching m;
    for (VertexId v = 0; v < p.size(); ++v) {
        VertexId w = p.succ[v];
        if (w == v) continue;
        if (w < 0 || w >= p.size() || p.succ[w] != v)
            throw std::invalid_argument("permutation has a cycle longer than 2");
        if (v < w) m.emplace_back(v, w);
    }
    std::sort(m.begin(), m.end());
    return m;
}

bool is_matchless(const GraphPermutation& p) {
    for (int len : cycle_decomposition(p).type)
        if (len < 3) return false;
    return true;
}

}  // namespace derange
