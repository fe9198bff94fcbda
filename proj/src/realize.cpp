#include "derange/realize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace derange {

const char* status_name(RealizationResult::Status s) {
    switch (s) {
        case RealizationResult::Status::Realized: return "realized";
        case RealizationResult::Status::Unrealizable: return "unrealizable";
        case RealizationResult::Status::CapHit: return "cap";
    }
    return "unrealizable";
}

namespace {

constexpr int kInf = 1 << 29;

// All-pairs BFS distances; a lower bound for distances inside any uncovered
// region, which is what the in-cycle pruning needs.
std::vector<std::vector<int>> all_pairs_bfs(const Graph& g) {
    std::vector<std::vector<int>> dist(g.n, std::vector<int>(g.n, kInf));
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < g.n; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        queue.assign(1, s);
        for (size_t i = 0; i < queue.size(); ++i)
            for (VertexId u : g.adj[queue[i]])
                if (d[u] == kInf) {
                    d[u] = d[queue[i]] + 1;
                    queue.push_back(u);
                }
    }
    return dist;
}

// Backtracking cycle-cover search. Cycles are anchored at the smallest
// uncovered vertex (every cover has that vertex in some cycle, so anchoring
// loses nothing); equal parts never permute because the multiset is consumed
// by value; cycle direction is fixed by succ(anchor) < pred(anchor).
struct Searcher {
    const Graph& g;
    const std::vector<int>* color;  // two-coloring when bipartite, else null
    bool free_lengths;              // cover by any cycles >= 3, ignore `remaining`
    std::vector<int> remaining;     // part multiset, non-increasing
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool capped = false;

    std::vector<char> covered;
    std::vector<int> unc_deg;  // per vertex: uncovered neighbors
    std::vector<int> succ;
    std::vector<std::vector<int>> dist;

    // scratch for completion checks, stamped to avoid clears
    std::vector<int> support_stamp, comp_stamp;
    int stamp = 0;
    std::vector<VertexId> bfs_queue;

    Searcher(const Graph& g_, const std::vector<int>* color_, std::vector<int> parts,
             bool free_lengths_, std::uint64_t budget_)
        : g(g_),
          color(color_),
          free_lengths(free_lengths_),
          remaining(std::move(parts)),
          budget(budget_),
          covered(g_.n, 0),
          unc_deg(g_.n, 0),
          succ(g_.n, -1),
          support_stamp(g_.n, -1),
          comp_stamp(g_.n, -1) {
        for (VertexId v = 0; v < g.n; ++v) unc_deg[v] = g.degree(v);
        dist = all_pairs_bfs(g);
    }

    void cover(VertexId v) {
        covered[v] = 1;
        for (VertexId u : g.adj[v]) --unc_deg[u];
    }
    void uncover(VertexId v) {
        covered[v] = 0;
        for (VertexId u : g.adj[v]) ++unc_deg[u];
    }

    bool spend_node() {
        if (++nodes > budget) capped = true;
        return !capped;
    }

    // Sound only between cycles (no live path): degree-starved vertices,
    // two-part accounting, per-component color balance and achievable sums.
    bool completion_ok() {
        ++stamp;
        int needy = 0;
        for (VertexId w = 0; w < g.n; ++w) {
            if (covered[w]) continue;
            if (unc_deg[w] == 0) return false;
            if (unc_deg[w] == 1) {
                if (free_lengths) return false;  // a pendant needs a 2-part
                ++needy;
                VertexId u = -1;
                for (VertexId x : g.adj[w])
                    if (!covered[x]) {
                        u = x;
                        break;
                    }
                // Two pendants sharing their only support can never both pair.
                if (support_stamp[u] == stamp) return false;
                support_stamp[u] = stamp;
            }
        }
        if (!free_lengths) {
            int two_parts = 0;
            for (int p : remaining) two_parts += p == 2;
            if (needy > 2 * two_parts) return false;
        }

        // Components of the uncovered region. Cycles cannot cross components,
        // so each component needs a balanced coloring and, in fixed-type mode,
        // a size achievable as a sub-multiset sum of the remaining parts.
        std::vector<int> comp_sizes;
        for (VertexId s = 0; s < g.n; ++s) {
            if (covered[s] || comp_stamp[s] == stamp) continue;
            comp_stamp[s] = stamp;
            bfs_queue.assign(1, s);
            int size = 0, balance = 0;
            for (size_t i = 0; i < bfs_queue.size(); ++i) {
                VertexId v = bfs_queue[i];
                ++size;
                if (color) balance += (*color)[v] ? 1 : -1;
                for (VertexId u : g.adj[v])
                    if (!covered[u] && comp_stamp[u] != stamp) {
                        comp_stamp[u] = stamp;
                        bfs_queue.push_back(u);
                    }
            }
            if (color && balance != 0) return false;
            if (free_lengths && size < 3) return false;
            comp_sizes.push_back(size);
        }
        if (!free_lengths) {
            if (comp_sizes.size() > remaining.size()) return false;
            if (!comp_sizes.empty()) {
                int total = std::accumulate(remaining.begin(), remaining.end(), 0);
                std::vector<std::uint64_t> sums(static_cast<size_t>(total / 64 + 1), 0);
                sums[0] = 1;
                for (int p : remaining) {
                    const int word = p / 64, bit = p % 64;
                    for (int i = static_cast<int>(sums.size()) - 1; i >= 0; --i) {
                        std::uint64_t shifted = 0;
                        if (i - word >= 0) {
                            shifted = sums[i - word] << bit;
                            if (bit && i - word - 1 >= 0)
                                shifted |= sums[i - word - 1] >> (64 - bit);
                        }
                        sums[i] |= shifted;
                    }
                }
                for (int sz : comp_sizes)
                    if (!((sums[sz / 64] >> (sz % 64)) & 1)) return false;
            }
        }
        return true;
    }

    void record_cycle(const std::vector<VertexId>& path) {
        const size_t len = path.size();
        for (size_t i = 0; i < len; ++i) succ[path[i]] = path[(i + 1) % len];
    }

    // Extend the cycle under construction to exactly `length` vertices, then
    // close back to the anchor and recurse on the rest of the cover.
    bool place_fixed(VertexId anchor, int length, std::vector<VertexId>& path) {
        const int have = static_cast<int>(path.size());
        VertexId end = path.back();
        if (have == length) {
            if (!g.has_edge(end, anchor)) return false;
            if (length >= 3 && path[1] > path.back()) return false;  // direction symmetry
            record_cycle(path);
            return completion_ok() && solve();
        }
        for (VertexId u : g.adj[end]) {
            if (covered[u]) continue;
            if (dist[u][anchor] > length - have) continue;  // cannot close in time
            if (!spend_node()) return false;
            cover(u);
            path.push_back(u);
            if (place_fixed(anchor, length, path)) return true;
            path.pop_back();
            uncover(u);
            if (capped) return false;
        }
        return false;
    }

    // Free-length variant: try closing (shortest cycles first), then extend.
    bool place_free(VertexId anchor, std::vector<VertexId>& path) {
        const int have = static_cast<int>(path.size());
        VertexId end = path.back();
        if (have >= 3 && path[1] < end && g.has_edge(end, anchor)) {
            record_cycle(path);
            if (completion_ok() && solve()) return true;
        }
        for (VertexId u : g.adj[end]) {
            if (covered[u]) continue;
            if (!spend_node()) return false;
            cover(u);
            path.push_back(u);
            if (place_free(anchor, path)) return true;
            path.pop_back();
            uncover(u);
            if (capped) return false;
        }
        return false;
    }

    bool solve() {
        VertexId anchor = -1;
        for (VertexId v = 0; v < g.n; ++v)
            if (!covered[v]) {
                anchor = v;
                break;
            }
        if (anchor == -1) return true;

        if (free_lengths) {
            if (!spend_node()) return false;
            cover(anchor);
            std::vector<VertexId> path{anchor};
            bool ok = place_free(anchor, path);
            if (!ok) uncover(anchor);
            return ok;
        }

        // Branch over the distinct remaining lengths, largest first.
        int prev = -1;
        for (size_t i = 0; i < remaining.size(); ++i) {
            const int length = remaining[i];
            if (length == prev) continue;
            prev = length;
            if (!spend_node()) return false;
            remaining.erase(remaining.begin() + static_cast<long>(i));
            cover(anchor);
            std::vector<VertexId> path{anchor};
            if (place_fixed(anchor, length, path)) return true;
            uncover(anchor);
            remaining.insert(remaining.begin() + static_cast<long>(i), length);
            if (capped) return false;
        }
        return false;
    }
};

RealizationResult run_search(const Graph& g, std::vector<int> parts, bool free_lengths,
                             const SearchBudget& budget) {
    RealizationResult res;
    const auto bp = two_color(g);
    const std::vector<int>* color = bp ? &bp->color : nullptr;

    if (!free_lengths && color) {
        // Derangement cycles on a bipartite graph are even; a 2-part is an edge
        // traversed both ways and always parity-safe.
        for (int p : parts)
            if (p >= 3 && p % 2) {
                res.status = RealizationResult::Status::Unrealizable;
                return res;
            }
    }

    Searcher search(g, color, std::move(parts), free_lengths, budget.max_nodes);
    if (!search.completion_ok()) {
        res.status = RealizationResult::Status::Unrealizable;
        res.nodes = search.nodes;
        return res;
    }
    const bool found = search.solve();
    res.nodes = search.nodes;
    if (found) {
        res.status = RealizationResult::Status::Realized;
        res.witness.succ = search.succ;
    } else {
        res.status = search.capped ? RealizationResult::Status::CapHit
                                   : RealizationResult::Status::Unrealizable;
    }
    return res;
}

}  // namespace

RealizationResult realize(const Graph& g, const CycleType& parts, RealizeMode mode,
                          const SearchBudget& budget) {
    const int min_part = mode == RealizeMode::Matchless ? 3 : 2;
    int sum = 0;
    for (int p : parts) {
        if (p < min_part)
            throw std::invalid_argument("part " + std::to_string(p) + " below minimum " +
                                        std::to_string(min_part) + " for this mode");
        sum += p;
    }
    if (sum != g.n)
        throw std::invalid_argument("partition sums to " + std::to_string(sum) +
                                    " but the graph has " + std::to_string(g.n) + " vertices");
    std::vector<int> sorted(parts);
    std::sort(sorted.rbegin(), sorted.rend());
    return run_search(g, std::move(sorted), false, budget);
}

RealizationResult find_matchless_derangement(const Graph& g, const SearchBudget& budget) {
    return run_search(g, {}, true, budget);
}

LongestCycleResult longest_realizable_cycle(const Graph& g, const SearchBudget& budget) {
    if (g.n < 1) throw std::invalid_argument("longest cycle needs a nonempty graph");
    LongestCycleResult res;

    const auto bp = two_color(g);
    // A cycle alternates colors inside one component, which caps its length.
    int upper = 0;
    for (const auto& comp : connected_components(g)) {
        if (bp) {
            int c0 = 0;
            for (VertexId v : comp) c0 += bp->color[v] == 0;
            upper = std::max(upper, 2 * std::min(c0, static_cast<int>(comp.size()) - c0));
        } else {
            upper = std::max(upper, static_cast<int>(comp.size()));
        }
    }

    const auto dist = all_pairs_bfs(g);
    std::vector<char> used(g.n, 0);
    std::vector<VertexId> path;
    bool found = false;

    // Plain anchored DFS for a cycle of exactly `length`; candidates stay above
    // the anchor so each cycle is enumerated from its minimum vertex once.
    auto dfs = [&](auto&& self, VertexId anchor, int length) -> bool {
        VertexId end = path.back();
        if (static_cast<int>(path.size()) == length)
            return g.has_edge(end, anchor) && path[1] < path.back();
        for (VertexId u : g.adj[end]) {
            if (u <= anchor || used[u]) continue;
            if (dist[u][anchor] > length - static_cast<int>(path.size())) continue;
            if (++res.nodes > budget.max_nodes) {
                res.exact = false;
                return false;
            }
            used[u] = 1;
            path.push_back(u);
            if (self(self, anchor, length)) return true;
            path.pop_back();
            used[u] = 0;
            if (!res.exact) return false;
        }
        return false;
    };

    for (int length = upper; length >= 3 && !found; --length) {
        if (bp && length % 2) continue;
        for (VertexId anchor = 0; anchor < g.n && !found; ++anchor) {
            path.assign(1, anchor);
            used[anchor] = 1;
            found = dfs(dfs, anchor, length);
            used[anchor] = 0;
            if (!res.exact) break;
        }
        if (found) res.length = length;
        if (!res.exact) break;
    }

    res.witness.succ.resize(g.n);
    std::iota(res.witness.succ.begin(), res.witness.succ.end(), 0);
    if (found) {
        for (size_t i = 0; i < path.size(); ++i)
            res.witness.succ[path[i]] = path[(i + 1) % path.size()];
    } else {
        // No cycle (or none confirmed): an edge swap if possible, else identity.
        res.length = 1;
        for (VertexId v = 0; v < g.n && res.length == 1; ++v)
            if (g.degree(v) > 0) {
                VertexId u = g.adj[v][0];
                res.witness.succ[v] = u;
                res.witness.succ[u] = v;
                res.length = 2;
            }
    }
    return res;
}

}  // namespace derange
