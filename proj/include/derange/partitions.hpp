#ifndef DERANGE_PARTITIONS_HPP
#define DERANGE_PARTITIONS_HPP

#include <string>
#include <vector>

#include "derange/permutation.hpp"

namespace derange {

struct PartitionFilter {
    enum class Kind { All, Even, MinPart };
    Kind kind = Kind::All;
    int min_part = 1;

    static PartitionFilter all() { return {Kind::All, 1}; }
    static PartitionFilter even() { return {Kind::Even, 2}; }
    static PartitionFilter min(int k) { return {Kind::MinPart, k}; }
    std::string name() const;
};

// Partitions of n in reverse-lexicographic order: (n) first, finest last.
// Even keeps partitions whose parts are all even (there are p(n/2) of them);
// MinPart k keeps partitions with every part >= k.
std::vector<CycleType> enumerate_partitions(int n, PartitionFilter f = {});

}  // namespace derange

#endif
