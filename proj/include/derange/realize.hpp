#ifndef DERANGE_REALIZE_HPP
#define DERANGE_REALIZE_HPP

#include <cstdint>

#include "derange/graph.hpp"
#include "derange/permutation.hpp"

namespace derange {

enum class RealizeMode { Derangement, Matchless };

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;  // backtracking node expansions per search
};

// Three-valued outcome: Unrealizable is a proof (the backtracking tree was
// exhausted); CapHit means the node budget ran out first and nothing is known.
struct RealizationResult {
    enum class Status { Realized, Unrealizable, CapHit };
    Status status = Status::Unrealizable;
    GraphPermutation witness;  // populated iff status == Realized
    std::uint64_t nodes = 0;
};
const char* status_name(RealizationResult::Status s);

// Searches for vertex-disjoint simple cycles with the prescribed length
// multiset covering every vertex; a 2-part is a single edge traversed both
// ways. Cycles are anchored at the smallest uncovered vertex and part lengths
// are tried largest first; on bipartite graphs a partition with an odd part
// >= 3 is rejected without search.
RealizationResult realize(const Graph& g, const CycleType& parts,
                          RealizeMode mode = RealizeMode::Derangement,
                          const SearchBudget& budget = {});

// Covers the vertex set by cycles of any lengths >= 3, no prescribed type.
RealizationResult find_matchless_derangement(const Graph& g, const SearchBudget& budget = {});

struct LongestCycleResult {
    int length = 0;     // 1 = no edges (identity only), 2 = an edge swap at best
    bool exact = true;  // false when some longer length was abandoned at the cap
    GraphPermutation witness;  // the (length, 1, ..., 1) permutation
    std::uint64_t nodes = 0;
};

// Largest L such that the graph admits a permutation of type (L, 1, ..., 1),
// i.e. the longest simple cycle; searched descending from the vertex count
// (single-vertex graphs return 1 for the identity). The node budget spans the
// whole invocation.
LongestCycleResult longest_realizable_cycle(const Graph& g, const SearchBudget& budget = {});

}  // namespace derange

#endif
