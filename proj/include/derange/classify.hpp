#ifndef DERANGE_CLASSIFY_HPP
#define DERANGE_CLASSIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "derange/graph.hpp"
#include "derange/partitions.hpp"
#include "derange/realize.hpp"

namespace derange {

struct ClassifyOptions {
    SearchBudget budget;
    int workers = 1;  // partitions may run in parallel; each search is sequential
};

struct ClassificationRow {
    CycleType partition;
    RealizationResult result;
};

struct ClassificationTable {
    std::string graph_label;
    std::string family;  // partition filter name
    std::vector<ClassificationRow> rows;
    int realized = 0;
    int unrealizable = 0;
    int capped = 0;
};

// Runs realize on every partition of the family, in enumeration order.
ClassificationTable classify_all(const Graph& g, PartitionFilter family,
                                 const ClassifyOptions& opt = {});

struct UniversalityResult {
    bool universal = false;
    bool decided = true;        // false when a cap prevented a verdict
    CycleType first_excluded;   // set when a partition was refused (or capped)
    bool short_circuit = false; // bipartite parity exclusion, no search run
    std::uint64_t nodes = 0;
};

// Every all-even partition realizable. Requires a bipartite graph of even order.
UniversalityResult is_even_universal(const Graph& g, const ClassifyOptions& opt = {});

// Every partition with parts >= 2 realizable. Bipartite graphs on 5 or more
// vertices short-circuit to false: some such partition has an odd part, and a
// derangement of a bipartite graph has even cycles only.
UniversalityResult is_universal(const Graph& g, const ClassifyOptions& opt = {});

// Families of excluded cycle types, each verified by exhaustive search:
//   four-forces-two  {n}    R_{3,n}, n even >= 4: types (a1,...,ak,4), ai even >= 4
//   all-fours        {m,n}  m odd, n divisible by 4: the all-4s type on R_{m,n}
//   sixes-then-four  {k}    R_{4,6k+4}: the type (6,...,6,4)
//   six-then-fours   {m,k}  m odd, k >= 1: R_{m,4k+2}, the type (6,4,...,4)
//   matchless-fours  {n}    R_{4,n}, n = 2k+1 >= 3: matchless types with >= 2k-1 fours
struct FamilyReport {
    std::string family_id;
    std::string graph_label;
    std::vector<ClassificationRow> scheduled;  // every row should come back Unrealizable
    bool confirmed = false;                    // all unrealizable, nothing capped
    bool cap_hit = false;
    std::vector<CycleType> counterexamples;    // realized types: a bug or a wrong claim —
                                               // reported, never suppressed
};
FamilyReport verify_exclusion_family(const std::string& family_id,
                                     const std::vector<int>& params,
                                     const SearchBudget& budget = {});
std::vector<std::string> exclusion_family_ids();

// Even-universality sweep over even-by-even boards. Results stream to an
// append-only JSONL file so an interrupted scan resumes where it stopped
// (realized/unrealizable rows are reused; capped rows are retried).
struct ScanOptions {
    ClassifyOptions classify;
    double time_cap_seconds = 7200.0;
    std::string results_path;   // empty = no persistence
    std::ostream* progress = nullptr;  // optional per-row progress stream
};

struct ScanCell {
    int rows = 0, cols = 0;
    int realized = 0;
    int capped = 0;
    std::vector<CycleType> exclusions;
    bool completed = false;  // false when the time cap stopped this cell early
};

struct ScanReport {
    std::vector<ScanCell> cells;
    bool time_capped = false;
};

// Scans R_{m,n} for m in [row_lo, row_hi], n in [col_lo, col_hi]; all four
// bounds must be even (the sweep targets even-by-even boards). Empty ranges
// yield an empty report.
ScanReport conjecture_scan(int row_lo, int row_hi, int col_lo, int col_hi,
                           const ScanOptions& opt);

}  // namespace derange

#endif
