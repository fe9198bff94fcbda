#ifndef DERANGE_EXISTENCE_HPP
#define DERANGE_EXISTENCE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "derange/graph.hpp"
#include "derange/permutation.hpp"

namespace derange {

// Thrown when a configured enumeration cap would be exceeded. A cap is always a
// distinct resource error, never a silently wrong answer.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class HallMethod { BruteIndependent, MatchingDeficiency };
const char* hall_method_name(HallMethod m);

struct HallReport {
    bool holds = false;
    std::vector<VertexId> witness;  // nonempty iff !holds; then #X > #N(X)
    HallMethod method = HallMethod::MatchingDeficiency;
};

// Neighborhood condition: #X <= #N(X) for every vertex subset X.
// BruteIndependent enumerates independent subsets only (a violating subset
// always contains an independent violating subset) and requires n <= brute_cap.
// MatchingDeficiency reads the answer off a maximum matching of the bipartite
// double and, on failure, extracts the violating set as the side-1 vertices
// reachable by alternating paths from an unmatched side-1 vertex.
// Both methods agree on the verdict.
HallReport hall_check(const Graph& g, HallMethod method = HallMethod::MatchingDeficiency,
                      int brute_cap = 24);

// Deterministic augmenting-path maximum matching on a 2-colored graph:
// augment from the lowest-index unmatched from-side vertex, scanning neighbors
// ascending.
Matching max_bipartite_matching(const Graph& g, const Bipartition& bp, int from_side = 0);

// Injection from one side of a bipartitioned graph into the other along edges.
struct Semiderangement {
    int from_side = 0;
    std::vector<VertexId> map;  // map[v] = image for from-side vertices, -1 elsewhere
};

// Present iff a maximum matching saturates the chosen side.
std::optional<Semiderangement> find_semiderangement(const Graph& g, const Bipartition& bp,
                                                    int from_side);

// Merges opposite-direction semiderangements into a perfect matching. On a
// finite graph the two injections force equal side sizes, every orbit of the
// combined map closes into a finite cycle, and the resulting matching is
// exactly the edge set of the first injection. The open-chain repair that the
// infinite case would need is unreachable here and is asserted against.
Matching merge_semiderangements(const Graph& g, const Bipartition& bp,
                                const Semiderangement& i1, const Semiderangement& i2);

// Derangement existence and witness, decided per connected component via a
// perfect matching of the component's bipartite double. Even cycles of the
// pushed-down permutation are split into swaps, so bipartite inputs always
// receive a dyadic (matching) witness. Present iff the Hall condition holds.
std::optional<GraphPermutation> find_derangement(const Graph& g);

struct TutteReport {
    bool holds = false;
    std::vector<VertexId> witness;  // X with more odd components of G-X than #X
};

// Odd-component condition over all subsets X of V; requires n <= cap.
// Holds iff the graph has a perfect matching (equivalently a dyadic derangement).
TutteReport tutte_check(const Graph& g, int cap = 20);

// Maximum-cardinality matching on an arbitrary graph. Bipartite inputs take the
// augmenting-path route at any size; the rest run a branch-and-bound exhaustive
// search and require n <= brute_cap.
Matching max_general_matching(const Graph& g, int brute_cap = 20);

// (#V + min over X of (#X - odd(G-X))) / 2, by subset enumeration; n <= cap.
// Equals the size of a maximum matching.
int berge_number(const Graph& g, int cap = 20);

// Least number of fixed points over dyadic graph permutations:
// n - 2 * (maximum matching size).
int min_fixed_points_dyadic(const Graph& g, int brute_cap = 20);

}  // namespace derange

#endif
