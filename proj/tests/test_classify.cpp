#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "derange/classify.hpp"
#include "derange/existence.hpp"
#include "oracles.hpp"

using namespace derange;

namespace {

std::set<CycleType> excluded_types(const ClassificationTable& t) {
    std::set<CycleType> out;
    for (const auto& row : t.rows)
        if (row.result.status == RealizationResult::Status::Unrealizable)
            out.insert(row.partition);
    return out;
}

}  // namespace

TEST_CASE("classification of the 3x4 board") {
    auto table = classify_all(gen_checkerboard({3, 4}), PartitionFilter::even());
    CHECK(table.rows.size() == 11);
    CHECK(table.realized == 9);
    CHECK(table.unrealizable == 2);
    CHECK(table.capped == 0);
    CHECK(excluded_types(table) == std::set<CycleType>{{8, 4}, {4, 4, 4}});
    // Every realized row carries a witness of exactly its type.
    auto g = gen_checkerboard({3, 4});
    for (const auto& row : table.rows)
        if (row.result.status == RealizationResult::Status::Realized) {
            CHECK(validate(g, row.result.witness).kind == Classification::Kind::Derangement);
            CHECK(cycle_decomposition(row.result.witness).type == row.partition);
        }
}

TEST_CASE("classification is identical across worker counts") {
    auto g = gen_checkerboard({3, 4});
    auto seq = classify_all(g, PartitionFilter::even(), {SearchBudget{}, 1});
    auto par = classify_all(g, PartitionFilter::even(), {SearchBudget{}, 4});
    REQUIRE(seq.rows.size() == par.rows.size());
    for (size_t i = 0; i < seq.rows.size(); ++i) {
        CHECK(seq.rows[i].partition == par.rows[i].partition);
        CHECK(seq.rows[i].result.status == par.rows[i].result.status);
        CHECK(seq.rows[i].result.witness.succ == par.rows[i].result.witness.succ);
    }
}

TEST_CASE("classification marks something realized iff a derangement exists") {
    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 5; ++n) {
            if (m * n > 20) continue;
            auto g = gen_checkerboard({m, n});
            auto table = classify_all(g, PartitionFilter::min(2));
            CHECK((table.realized > 0) == find_derangement(g).has_value());
        }
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            if (m * n > 20) continue;
            auto g = gen_moebius(m, n);
            auto table = classify_all(g, PartitionFilter::min(2));
            CHECK((table.realized > 0) == find_derangement(g).has_value());
        }
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            if (m * n > 20) continue;
            auto g = gen_torus(m, n);
            auto table = classify_all(g, PartitionFilter::min(2));
            CHECK((table.realized > 0) == find_derangement(g).has_value());
        }
}

TEST_CASE("even universality") {
    CHECK(is_even_universal(gen_checkerboard({2, 4})).universal);
    CHECK(is_even_universal(gen_checkerboard({2, 6})).universal);

    auto r34 = is_even_universal(gen_checkerboard({3, 4}));
    CHECK_FALSE(r34.universal);
    CHECK(r34.decided);
    CHECK(r34.first_excluded == CycleType{8, 4});  // first in enumeration order

    CHECK_THROWS_AS(is_even_universal(gen_cycle(5)), std::invalid_argument);
    CHECK_THROWS_AS(is_even_universal(gen_checkerboard({3, 3})), std::invalid_argument);
}

TEST_CASE("universality") {
    CHECK(is_universal(gen_complete(4)).universal);
    CHECK(is_universal(gen_complete(6)).universal);
    CHECK(is_universal(gen_cycle(3)).universal);  // only the (3) partition

    auto r23 = is_universal(gen_checkerboard({2, 3}));
    CHECK_FALSE(r23.universal);
    CHECK(r23.short_circuit);  // bipartite with 6 vertices: (3,3) can never appear
    CHECK(r23.first_excluded == CycleType{3, 3});

    auto c4 = is_universal(gen_cycle(4));  // n = 4: no odd-part partition exists
    CHECK(c4.universal);

    CHECK_THROWS_AS(is_universal(gen_complete(1)), std::invalid_argument);
}

TEST_CASE("exclusion family: four-forces-two") {
    auto rep = verify_exclusion_family("four-forces-two", {4});
    CHECK(rep.graph_label == "rect:3x4");
    CHECK(rep.confirmed);
    CHECK(rep.scheduled.size() == 2);  // (8,4) and (4,4,4)
    std::set<CycleType> scheduled;
    for (const auto& row : rep.scheduled) scheduled.insert(row.partition);
    CHECK(scheduled == std::set<CycleType>{{8, 4}, {4, 4, 4}});

    auto rep6 = verify_exclusion_family("four-forces-two", {6});
    CHECK(rep6.confirmed);
    std::set<CycleType> s6;
    for (const auto& row : rep6.scheduled) s6.insert(row.partition);
    CHECK(s6 == std::set<CycleType>{{14, 4}, {10, 4, 4}, {8, 6, 4}, {6, 4, 4, 4}});

    CHECK_THROWS_AS(verify_exclusion_family("four-forces-two", {5}), std::invalid_argument);
}

TEST_CASE("exclusion family: all-fours and the six families") {
    auto rep = verify_exclusion_family("all-fours", {3, 4});
    CHECK(rep.graph_label == "rect:3x4");
    REQUIRE(rep.scheduled.size() == 1);
    CHECK(rep.scheduled[0].partition == CycleType{4, 4, 4});
    CHECK(rep.confirmed);

    auto cj = verify_exclusion_family("sixes-then-four", {0});
    CHECK(cj.graph_label == "rect:4x4");
    REQUIRE(cj.scheduled.size() == 1);
    CHECK(cj.scheduled[0].partition == CycleType{6, 6, 4});
    CHECK(cj.confirmed);

    auto sf = verify_exclusion_family("six-then-fours", {3, 1});
    CHECK(sf.graph_label == "rect:3x6");
    REQUIRE(sf.scheduled.size() == 1);
    CHECK(sf.scheduled[0].partition == CycleType{6, 4, 4, 4});
    CHECK(sf.confirmed);

    CHECK_THROWS_AS(verify_exclusion_family("all-fours", {2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(verify_exclusion_family("nope", {}), std::invalid_argument);
}

TEST_CASE("exclusion family: matchless-fours") {
    // 4x3 board, k = 1: matchless types with at least one 4-cycle.
    auto rep = verify_exclusion_family("matchless-fours", {3});
    CHECK(rep.graph_label == "rect:4x3");
    std::set<CycleType> scheduled;
    for (const auto& row : rep.scheduled) scheduled.insert(row.partition);
    CHECK(scheduled == std::set<CycleType>{{8, 4}, {4, 4, 4}});
    CHECK(rep.confirmed);
}

TEST_CASE("conjecture scan control: 4x4 re-finds its exclusions") {
    ScanOptions opt;
    opt.time_cap_seconds = 600;
    auto rep = conjecture_scan(4, 4, 4, 4, opt);
    REQUIRE(rep.cells.size() == 1);
    const auto& cell = rep.cells[0];
    CHECK(cell.completed);
    CHECK(cell.realized == 20);
    CHECK(cell.exclusions == std::vector<CycleType>{{10, 6}, {6, 6, 4}});
}

TEST_CASE("conjecture scan persists and resumes") {
    const std::string path = "scan_test_results.jsonl";
    std::remove(path.c_str());
    ScanOptions opt;
    opt.results_path = path;
    opt.time_cap_seconds = 600;
    auto first = conjecture_scan(4, 4, 4, 6, opt);
    REQUIRE(first.cells.size() == 2);

    // Second run must reuse every persisted verdict: no new lines appear.
    std::ifstream in(path);
    size_t lines = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    in.close();
    CHECK(lines == 22 + 77);  // even partitions of 16 and of 24

    auto second = conjecture_scan(4, 4, 4, 6, opt);
    std::ifstream in2(path);
    size_t lines2 = 0;
    while (std::getline(in2, line))
        if (!line.empty()) ++lines2;
    CHECK(lines2 == lines);
    REQUIRE(second.cells.size() == 2);
    CHECK(second.cells[0].realized == first.cells[0].realized);
    CHECK(second.cells[1].realized == first.cells[1].realized);
    CHECK(second.cells[1].exclusions.empty());  // 4x6 realizes everything
    std::remove(path.c_str());
}

TEST_CASE("conjecture scan rejects odd bounds and empty ranges") {
    ScanOptions opt;
    CHECK_THROWS_AS(conjecture_scan(3, 4, 4, 4, opt), std::invalid_argument);
    auto rep = conjecture_scan(6, 4, 6, 4, opt);  // empty range
    CHECK(rep.cells.empty());
}
