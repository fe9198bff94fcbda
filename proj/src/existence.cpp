#include "derange/existence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace derange {

const char* hall_method_name(HallMethod m) {
    return m == HallMethod::BruteIndependent ? "brute-independent" : "matching-deficiency";
}

namespace {

// Deterministic augmenting-path matching over explicit adjacency.
// match[v] = partner or -1. Augments from each left vertex ascending, scanning
// neighbors ascending.
struct Kuhn {
    const std::vector<std::vector<VertexId>>& adj;
    std::vector<VertexId> match;
    std::vector<char> visited;

    explicit Kuhn(const std::vector<std::vector<VertexId>>& a)
        : adj(a), match(a.size(), -1), visited(a.size(), 0) {}

    bool try_augment(VertexId v) {
        for (VertexId u : adj[v]) {
            if (visited[u]) continue;
            visited[u] = 1;
            if (match[u] == -1 || try_augment(match[u])) {
                match[u] = v;
                match[v] = u;
                return true;
            }
        }
        return false;
    }

    void run(const std::vector<VertexId>& left) {
        for (VertexId v : left) {
            if (match[v] != -1) continue;
            std::fill(visited.begin(), visited.end(), 0);
            try_augment(v);
        }
    }
};

// Hall check by independent-subset enumeration over <= 64 vertices.
// Include-first DFS ascending, so the first violator found is the least one
// in that order. Only independent subsets need checking: any violating subset
// contains an independent violating subset.
struct BruteHall {
    int n;
    std::vector<std::uint64_t> nbr;
    std::uint64_t witness = 0;
    bool found = false;

    explicit BruteHall(const Graph& g) : n(g.n), nbr(g.n, 0) {
        for (VertexId v = 0; v < g.n; ++v)
            for (VertexId u : g.adj[v]) nbr[v] |= std::uint64_t{1} << u;
    }

    void rec(int v, std::uint64_t xs, int count, std::uint64_t seen_nbrs) {
        if (found) return;
        if (count > std::popcount(seen_nbrs)) {
            witness = xs;
            found = true;
            return;
        }
        if (v == n) return;
        const bool independent_with = !((seen_nbrs >> v) & 1);
        if (independent_with)
            rec(v + 1, xs | (std::uint64_t{1} << v), count + 1, seen_nbrs | nbr[v]);
        if (!found) rec(v + 1, xs, count, seen_nbrs);
    }
};

}  // namespace

HallReport hall_check(const Graph& g, HallMethod method, int brute_cap) {
    HallReport report;
    report.method = method;
    if (method == HallMethod::BruteIndependent) {
        if (g.n > brute_cap)
            throw CapExceeded("hall brute-independent enumeration capped at " +
                              std::to_string(brute_cap) + " vertices (graph has " +
                              std::to_string(g.n) + ")");
        BruteHall brute(g);
        if (g.n > 0) brute.rec(0, 0, 0, 0);
        report.holds = !brute.found;
        if (brute.found)
            for (VertexId v = 0; v < g.n; ++v)
                if ((brute.witness >> v) & 1) report.witness.push_back(v);
        return report;
    }

    // Matching route: the Hall condition on G equals the one-sided Hall
    // condition of the bipartite double, i.e. a perfect matching there.
    const auto d = bipartite_double(g);
    Kuhn kuhn(d.graph.adj);
    std::vector<VertexId> left(g.n);
    std::iota(left.begin(), left.end(), 0);
    kuhn.run(left);

    std::vector<VertexId> unmatched;
    for (VertexId v = 0; v < g.n; ++v)
        if (kuhn.match[v] == -1) unmatched.push_back(v);
    if (unmatched.empty()) {
        report.holds = true;
        return report;
    }
    // Violating set: side-1 vertices reachable by alternating paths from the
    // unmatched side-1 vertices. All their neighbors are matched back inside
    // the reachable set, so #N(X) = #X - #unmatched < #X.
    std::vector<char> reach(2 * g.n, 0);
    std::vector<VertexId> stack = unmatched;
    for (VertexId v : stack) reach[v] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : d.graph.adj[v]) {
            if (reach[u]) continue;
            reach[u] = 1;  // side-2 vertex reached along a non-matching edge
            VertexId back = kuhn.match[u];
            if (back != -1 && !reach[back]) {
                reach[back] = 1;
                stack.push_back(back);
            }
        }
    }
    for (VertexId v = 0; v < g.n; ++v)
        if (reach[v]) report.witness.push_back(v);
    report.holds = false;
    return report;
}

Matching max_bipartite_matching(const Graph& g, const Bipartition& bp, int from_side) {
    if (static_cast<int>(bp.color.size()) != g.n)
        throw std::invalid_argument("bipartition size mismatch");
    Kuhn kuhn(g.adj);
    kuhn.run(bp.side(from_side));
    Matching m;
    for (VertexId v = 0; v < g.n; ++v)
        if (kuhn.match[v] > v) m.emplace_back(v, kuhn.match[v]);
    return m;
}

std::optional<Semiderangement> find_semiderangement(const Graph& g, const Bipartition& bp,
                                                    int from_side) {
    const auto m = max_bipartite_matching(g, bp, from_side);
    std::vector<VertexId> partner(g.n, -1);
    for (auto [u, v] : m) {
        partner[u] = v;
        partner[v] = u;
    }
    Semiderangement s;
    s.from_side = from_side;
    s.map.assign(g.n, -1);
    for (VertexId v = 0; v < g.n; ++v) {
        if (bp.color[v] != from_side) continue;
        if (partner[v] == -1) return std::nullopt;  // side not saturated
        s.map[v] = partner[v];
    }
    return s;
}

Matching merge_semiderangements(const Graph& g, const Bipartition& bp,
                                const Semiderangement& i1, const Semiderangement& i2) {
    if (i1.from_side == i2.from_side)
        throw std::invalid_argument("need semiderangements in opposite directions");
    auto check = [&](const Semiderangement& s) {
        if (static_cast<int>(s.map.size()) != g.n)
            throw std::invalid_argument("semiderangement size mismatch");
        std::vector<char> hit(g.n, 0);
        for (VertexId v = 0; v < g.n; ++v) {
            const bool on_side = bp.color[v] == s.from_side;
            if (!on_side) {
                if (s.map[v] != -1)
                    throw std::invalid_argument("semiderangement maps a vertex off its side");
                continue;
            }
            VertexId w = s.map[v];
            if (w < 0 || w >= g.n || bp.color[w] == s.from_side || !g.has_edge(v, w))
                throw std::invalid_argument("semiderangement image invalid at vertex " +
                                            std::to_string(v));
            if (hit[w]) throw std::invalid_argument("semiderangement not injective");
            hit[w] = 1;
        }
    };
    check(i1);
    check(i2);

    // Finite sets injecting into each other have equal size, so i1 is already
    // a bijection; the combined map can only decompose into closed cycles.
    const auto s1 = bp.side(i1.from_side);
    const auto s2 = bp.side(i2.from_side);
    if (s1.size() != s2.size())
        throw std::logic_error("injections both ways with unequal sides");
    std::vector<char> seen(g.n, 0);
    for (VertexId start : s1) {
        if (seen[start]) continue;
        VertexId v = start;
        do {
            seen[v] = 1;
            v = bp.color[v] == i1.from_side ? i1.map[v] : i2.map[v];
            if (v < 0) throw std::logic_error("open chain in merged semiderangements");
        } while (v != start);
    }

    Matching m;
    for (VertexId v : s1) m.emplace_back(std::min(v, i1.map[v]), std::max(v, i1.map[v]));
    std::sort(m.begin(), m.end());
    return m;
}

std::optional<GraphPermutation> find_derangement(const Graph& g) {
    if (g.n == 0) return GraphPermutation{};
    GraphPermutation p;
    p.succ.assign(g.n, -1);
    for (const auto& comp : connected_components(g)) {
        const int nc = static_cast<int>(comp.size());
        // Local double of the component; a perfect matching there is exactly a
        // derangement of the component.
        std::vector<int> local(g.n, -1);
        for (int i = 0; i < nc; ++i) local[comp[i]] = i;
        std::vector<std::vector<VertexId>> dadj(2 * nc);
        for (int i = 0; i < nc; ++i)
            for (VertexId u : g.adj[comp[i]]) {
                dadj[i].push_back(nc + local[u]);
                dadj[nc + local[u]].push_back(i);
            }
        for (auto& a : dadj) std::sort(a.begin(), a.end());
        Kuhn kuhn(dadj);
        std::vector<VertexId> left(nc);
        std::iota(left.begin(), left.end(), 0);
        kuhn.run(left);
        for (int i = 0; i < nc; ++i) {
            if (kuhn.match[i] == -1) return std::nullopt;
            p.succ[comp[i]] = comp[kuhn.match[i] - nc];
        }
    }
    // Split even cycles into swaps: consecutive cycle vertices are adjacent, so
    // pairing them keeps validity. Bipartite inputs end up dyadic this way.
    const auto dec = cycle_decomposition(p);
    for (const auto& cycle : dec.cycles) {
        if (cycle.size() % 2 != 0 || cycle.size() < 4) continue;
        for (size_t i = 0; i + 1 < cycle.size(); i += 2) {
            p.succ[cycle[i]] = cycle[i + 1];
            p.succ[cycle[i + 1]] = cycle[i];
        }
    }
    return p;
}

namespace {

// Number of odd components of the graph induced on the vertices outside `out`.
int odd_components_outside(const Graph& g, const std::vector<char>& out,
                           std::vector<int>& scratch_seen, int stamp) {
    int odd = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.n; ++s) {
        if (out[s] || scratch_seen[s] == stamp) continue;
        int size = 0;
        scratch_seen[s] = stamp;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            ++size;
            for (VertexId u : g.adj[v])
                if (!out[u] && scratch_seen[u] != stamp) {
                    scratch_seen[u] = stamp;
                    stack.push_back(u);
                }
        }
        odd += size & 1;
    }
    return odd;
}

}  // namespace

TutteReport tutte_check(const Graph& g, int cap) {
    if (g.n > cap)
        throw CapExceeded("tutte subset enumeration capped at " + std::to_string(cap) +
                          " vertices (graph has " + std::to_string(g.n) + ")");
    TutteReport report;
    std::vector<char> out(g.n, 0);
    std::vector<int> seen(g.n, -1);
    int stamp = 0;
    const std::uint64_t end = std::uint64_t{1} << g.n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        int size = 0;
        for (VertexId v = 0; v < g.n; ++v) {
            out[v] = (mask >> v) & 1;
            size += out[v];
        }
        if (odd_components_outside(g, out, seen, stamp++) > size) {
            for (VertexId v = 0; v < g.n; ++v)
                if (out[v]) report.witness.push_back(v);
            report.holds = false;
            return report;
        }
    }
    report.holds = true;
    return report;
}

namespace {

// Exhaustive maximum matching with the branch-and-bound cut
// current + floor(uncovered/2) <= best. The first matching reaching each new
// size is kept, so the result is deterministic.
struct MatchingSearch {
    const Graph& g;
    std::vector<char> covered;
    int uncovered;
    Matching current, best;

    explicit MatchingSearch(const Graph& g_) : g(g_), covered(g_.n, 0), uncovered(g_.n) {}

    void rec() {
        if (static_cast<int>(current.size()) + uncovered / 2 <= static_cast<int>(best.size()))
            return;
        VertexId v = -1;
        for (VertexId i = 0; i < g.n; ++i)
            if (!covered[i]) {
                v = i;
                break;
            }
        if (v == -1) {
            best = current;
            return;
        }
        covered[v] = 1;
        uncovered -= 1;
        for (VertexId u : g.adj[v]) {
            if (covered[u]) continue;
            covered[u] = 1;
            uncovered -= 1;
            current.emplace_back(v, u);
            rec();
            current.pop_back();
            covered[u] = 0;
            uncovered += 1;
        }
        rec();  // leave v unmatched
        covered[v] = 0;
        uncovered += 1;
    }
};

}  // namespace

Matching max_general_matching(const Graph& g, int brute_cap) {
    if (auto bp = two_color(g)) return max_bipartite_matching(g, *bp, 0);
    if (g.n > brute_cap)
        throw CapExceeded("general matching search capped at " + std::to_string(brute_cap) +
                          " vertices (graph has " + std::to_string(g.n) + ")");
    MatchingSearch search(g);
    search.rec();
    Matching m = search.best;
    for (auto& [u, v] : m)
        if (u > v) std::swap(u, v);
    std::sort(m.begin(), m.end());
    return m;
}

int berge_number(const Graph& g, int cap) {
    if (g.n > cap)
        throw CapExceeded("berge subset enumeration capped at " + std::to_string(cap) +
                          " vertices (graph has " + std::to_string(g.n) + ")");
    std::vector<char> out(g.n, 0);
    std::vector<int> seen(g.n, -1);
    int stamp = 0;
    int best = g.n;  // value of #X - odd(G-X), minimized
    const std::uint64_t end = std::uint64_t{1} << g.n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        int size = 0;
        for (VertexId v = 0; v < g.n; ++v) {
            out[v] = (mask >> v) & 1;
            size += out[v];
        }
        best = std::min(best, size - odd_components_outside(g, out, seen, stamp++));
    }
    return (best + g.n) / 2;
}

int min_fixed_points_dyadic(const Graph& g, int brute_cap) {
    // Fixed points of a dyadic permutation are exactly the vertices a matching
    // leaves uncovered, so the minimum is n minus twice the maximum matching.
    return g.n - 2 * static_cast<int>(max_general_matching(g, brute_cap).size());
}

}  // namespace derange
