#ifndef DERANGE_PERMUTATION_HPP
#define DERANGE_PERMUTATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "derange/graph.hpp"

namespace derange {

// Successor mapping over a graph's vertex set. A valid graph permutation moves
// every vertex to itself or to a neighbor, injectively (hence bijectively on a
// finite vertex set); a derangement additionally has no fixed points.
struct GraphPermutation {
    std::vector<VertexId> succ;

    int size() const { return static_cast<int>(succ.size()); }
};

struct Classification {
    enum class Kind { Derangement, PermutationWithFixedPoints, Invalid };
    Kind kind = Kind::Invalid;
    int fixed_points = 0;     // set for PermutationWithFixedPoints
    VertexId offending = -1;  // first vertex violating a rule (Invalid)
    std::string reason;       // "image-out-of-range" | "non-adjacent-image" | "not-injective"
};

// Classifies a successor mapping; throws if it is not total on the vertex set.
Classification validate(const Graph& g, const GraphPermutation& p);

// Orbit sizes of a permutation, non-increasing: a partition of the vertex count.
using CycleType = std::vector<int>;

struct CycleDecomposition {
    std::vector<std::vector<VertexId>> cycles;  // each starts at its minimum vertex,
                                                // ordered by that minimum
    CycleType type;
};

// Orbits of a valid (injective) permutation.
CycleDecomposition cycle_decomposition(const GraphPermutation& p);

std::string cycle_type_string(const CycleType& t);  // "16+8+1"
CycleType parse_cycle_type(const std::string& s);   // accepts any order, canonicalizes

// Concentric-ring rotation on the odd square board R_{m,m}: every ring turns one
// step counterclockwise (row 1 at top), the center cell stays put. The cycle
// type is (8k, ..., 16, 8, 1) with exactly one fixed point.
GraphPermutation rings_permutation(int m);

// Pairwise vertex-disjoint edges, each stored with u < v, sorted.
using Matching = std::vector<std::pair<VertexId, VertexId>>;

bool is_matching(const Graph& g, const Matching& m);
bool is_perfect_matching(const Graph& g, const Matching& m);

// Matched pairs swap, everyone else stays put: the dyadic permutation of a
// matching. A perfect matching yields a dyadic derangement.
GraphPermutation matching_to_dyadic(const Graph& g, const Matching& m);

// Inverse of matching_to_dyadic. Rejects permutations with a cycle longer than 2.
Matching dyadic_to_matching(const GraphPermutation& p);

// No cycle of length 1 or 2.
bool is_matchless(const GraphPermutation& p);

}  // namespace derange

#endif
