#include "derange/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace derange {

std::string PartitionFilter::name() const {
    switch (kind) {
        case Kind::All: return "all";
        case Kind::Even: return "even";
        case Kind::MinPart: return "min" + std::to_string(min_part);
    }
    return "all";
}

namespace {

// Non-increasing parts, largest first part first: reverse-lexicographic order.
void descend(int rem, int max_part, int min_part, int step, CycleType& cur,
             std::vector<CycleType>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    int start = std::min(rem, max_part);
    if (step == 2 && start % 2) --start;
    for (int p = start; p >= min_part; p -= step) {
        cur.push_back(p);
        descend(rem - p, p, min_part, step, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<CycleType> enumerate_partitions(int n, PartitionFilter f) {
    if (n < 0) throw std::invalid_argument("partition target must be non-negative");
    int min_part = 1, step = 1;
    switch (f.kind) {
        case PartitionFilter::Kind::All:
            break;
        case PartitionFilter::Kind::Even:
            min_part = 2;
            step = 2;
            break;
        case PartitionFilter::Kind::MinPart:
            if (f.min_part < 1) throw std::invalid_argument("min part must be positive");
            min_part = f.min_part;
            break;
    }
    std::vector<CycleType> out;
    CycleType cur;
    descend(n, n, min_part, step, cur, out);
    return out;
}

}  // namespace derange
