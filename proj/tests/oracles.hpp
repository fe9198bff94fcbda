#ifndef DERANGE_TEST_ORACLES_HPP
#define DERANGE_TEST_ORACLES_HPP

// Brute-force reference implementations for tests. These deliberately share no
// code with the library paths they check: plain enumeration, no pruning beyond
// feasibility, written for smallness rather than speed.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "derange/graph.hpp"
#include "derange/permutation.hpp"

namespace derange::test {

// All graph derangements (injective successor maps into neighborhoods with no
// fixed point), counted by exhaustive backtracking.
long long count_derangements(const Graph& g);
bool derangement_exists(const Graph& g);

// Is there a derangement with the given cycle type? Enumerates derangements
// and checks orbit sizes directly.
bool derangement_of_type_exists(const Graph& g, const std::vector<int>& type);

// Hall condition checked over ALL vertex subsets, not only independent ones.
bool hall_all_subsets(const Graph& g);

// Largest deficiency #X - #N(X) over all subsets of the chosen side vertices.
int max_deficiency(const Graph& g, const std::vector<VertexId>& side);

// Matching enumeration: maximum size and perfect existence, plain recursion.
int max_matching_size(const Graph& g);
bool perfect_matching_exists(const Graph& g);
// Every matching of the graph (including the empty one).
std::vector<Matching> all_matchings(const Graph& g);

// Longest simple cycle by anchored DFS with no pruning; 0 when acyclic.
int longest_cycle(const Graph& g);

// Partition count p(n) by the bounded-largest-part recurrence.
long long partition_count(int n);

// All simple cycles of exactly the given length, as sorted vertex sets.
std::vector<std::vector<VertexId>> cycles_of_length(const Graph& g, int length);

// Can the vertex set be covered by disjoint cycles with the given length
// multiset, using pre-enumerated cycle vertex sets? An independent route to
// the realization question (a cycle exists on a set iff the set was enumerated).
bool cycle_cover_exists(const Graph& g, const std::vector<int>& lengths);

// Deterministic random graphs: each pair becomes an edge when
// rng() % 100 < density_percent. mt19937 keeps this portable.
Graph random_graph(std::mt19937& rng, int n, int density_percent);

}  // namespace derange::test

#endif
