#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "derange/partitions.hpp"
#include "oracles.hpp"

using namespace derange;

TEST_CASE("partition enumeration order and counts") {
    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == CycleType{4});
    CHECK(p4[1] == CycleType{3, 1});
    CHECK(p4[2] == CycleType{2, 2});
    CHECK(p4[3] == CycleType{2, 1, 1});
    CHECK(p4[4] == CycleType{1, 1, 1, 1});

    CHECK(enumerate_partitions(0).size() == 1);  // the empty partition
    CHECK(enumerate_partitions(1).size() == 1);

    for (int n = 1; n <= 18; ++n)
        CHECK(enumerate_partitions(n).size() ==
              static_cast<size_t>(test::partition_count(n)));
}

TEST_CASE("even partition counts match the halving correspondence") {
    // Even partitions of n are partitions of n/2 with parts doubled.
    const std::pair<int, size_t> expected[] = {{12, 11}, {16, 22}, {18, 30}, {20, 42}, {24, 77}};
    for (auto [n, count] : expected) {
        auto ps = enumerate_partitions(n, PartitionFilter::even());
        CHECK(ps.size() == count);
        CHECK(ps.size() == static_cast<size_t>(test::partition_count(n / 2)));
        for (const auto& p : ps) {
            CHECK(std::accumulate(p.begin(), p.end(), 0) == n);
            for (int part : p) CHECK(part % 2 == 0);
        }
    }
    CHECK(enumerate_partitions(2, PartitionFilter::even()) ==
          std::vector<CycleType>{CycleType{2}});
    CHECK(enumerate_partitions(7, PartitionFilter::even()).empty());
    CHECK(enumerate_partitions(36, PartitionFilter::even()).size() == 385);
}

TEST_CASE("min-part filter") {
    auto ps = enumerate_partitions(6, PartitionFilter::min(2));
    CHECK(ps == std::vector<CycleType>{{6}, {4, 2}, {3, 3}, {2, 2, 2}});
    auto ms = enumerate_partitions(7, PartitionFilter::min(3));
    CHECK(ms == std::vector<CycleType>{{7}, {4, 3}});
    CHECK(enumerate_partitions(5, PartitionFilter::min(6)).empty());
}

TEST_CASE("partitions are non-increasing and deterministic") {
    auto a = enumerate_partitions(14, PartitionFilter::even());
    auto b = enumerate_partitions(14, PartitionFilter::even());
    CHECK(a == b);
    for (const auto& p : a) CHECK(std::is_sorted(p.rbegin(), p.rend()));
    // reverse-lexicographic: strictly decreasing as sequences
    for (size_t i = 0; i + 1 < a.size(); ++i) CHECK(a[i] > a[i + 1]);
}
