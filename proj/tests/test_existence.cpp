#include <doctest.h>

#include <algorithm>
#include <random>

#include "derange/existence.hpp"
#include "derange/graph.hpp"
#include "oracles.hpp"

using namespace derange;

TEST_CASE("hall check on boards") {
    auto r55 = gen_checkerboard({5, 5});
    for (auto method : {HallMethod::BruteIndependent, HallMethod::MatchingDeficiency}) {
        auto rep = hall_check(r55, method, 25);
        CHECK_FALSE(rep.holds);
        REQUIRE(!rep.witness.empty());
        CHECK(rep.witness.size() > neighborhood(r55, rep.witness).size());
        if (method == HallMethod::BruteIndependent) CHECK(is_independent(r55, rep.witness));
    }
    // The matching route lands exactly on the 13 majority-color cells here.
    auto rep = hall_check(r55, HallMethod::MatchingDeficiency);
    CHECK(rep.witness == two_color(r55)->side(0));

    CHECK(hall_check(gen_cycle(4), HallMethod::BruteIndependent).holds);
    CHECK(hall_check(gen_cycle(4), HallMethod::MatchingDeficiency).holds);
    CHECK_FALSE(hall_check(gen_checkerboard({3, 3}), HallMethod::BruteIndependent).holds);

    CHECK_THROWS_AS(hall_check(gen_checkerboard({5, 5}), HallMethod::BruteIndependent, 24),
                    CapExceeded);
}

TEST_CASE("hall methods agree and match the all-subsets oracle") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = test::random_graph(rng, 1 + static_cast<int>(rng() % 12),
                                    10 + static_cast<int>(rng() % 60));
        const bool brute = hall_check(g, HallMethod::BruteIndependent).holds;
        const bool matching = hall_check(g, HallMethod::MatchingDeficiency).holds;
        const bool oracle = test::hall_all_subsets(g);
        CHECK(brute == oracle);  // independent subsets suffice
        CHECK(matching == oracle);
    }
}

TEST_CASE("maximum bipartite matching") {
    // Complete bipartite 3+3.
    auto k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                               {2, 3}, {2, 4}, {2, 5}});
    auto bp = two_color(k33);
    REQUIRE(bp.has_value());
    CHECK(max_bipartite_matching(k33, *bp).size() == 3);

    auto star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    auto bps = two_color(star);
    REQUIRE(bps.has_value());
    CHECK(max_bipartite_matching(star, *bps, 0).size() == 1);
    CHECK(max_bipartite_matching(star, *bps, 1).size() == 1);

    // The 5x5 double misses a perfect matching by one edge: 24 of 25, so 48 of
    // the 50 vertices are covered. Checked against the deficiency search.
    auto d = bipartite_double(gen_checkerboard({5, 5}));
    auto bpd = two_color(d.graph);
    REQUIRE(bpd.has_value());
    auto m = max_bipartite_matching(d.graph, *bpd);
    CHECK(m.size() == 24);
    std::vector<VertexId> side1(25);
    for (int i = 0; i < 25; ++i) side1[i] = i;
    CHECK(25 - test::max_deficiency(d.graph, side1) == 24);
    CHECK(is_matching(d.graph, m));
}

TEST_CASE("bipartite matching size equals the oracle on random graphs") {
    std::mt19937 rng(31337);
    int done = 0;
    while (done < 40) {
        auto g = test::random_graph(rng, 2 + static_cast<int>(rng() % 9),
                                    20 + static_cast<int>(rng() % 50));
        auto bp = two_color(g);
        if (!bp) continue;
        ++done;
        CHECK(static_cast<int>(max_bipartite_matching(g, *bp).size()) ==
              test::max_matching_size(g));
    }
}

TEST_CASE("semiderangements on the 5x5 board") {
    auto r55 = gen_checkerboard({5, 5});
    auto bp = two_color(r55);
    REQUIRE(bp.has_value());
    // Minority side (12 white cells) injects into the 13 black cells...
    auto from_minority = find_semiderangement(r55, *bp, 1);
    REQUIRE(from_minority.has_value());
    for (VertexId v : bp->side(1)) {
        CHECK(r55.has_edge(v, from_minority->map[v]));
    }
    // ...but the majority side cannot.
    CHECK_FALSE(find_semiderangement(r55, *bp, 0).has_value());

    auto k2 = gen_complete(2);
    auto bp2 = two_color(k2);
    CHECK(find_semiderangement(k2, *bp2, 0).has_value());
    CHECK(find_semiderangement(k2, *bp2, 1).has_value());
}

TEST_CASE("merging semiderangements yields the first injection's matching") {
    // C_4 as a bipartitioned graph has exactly two semiderangements per side.
    auto c4 = gen_cycle(4);
    auto bp = two_color(c4);
    REQUIRE(bp.has_value());
    const auto s0 = bp->side(0);  // {0, 2}
    const auto s1 = bp->side(1);  // {1, 3}
    REQUIRE(s0 == std::vector<VertexId>{0, 2});
    REQUIRE(s1 == std::vector<VertexId>{1, 3});

    // Enumerate both directions by hand: 0->{1,3}, 2->{1,3} injectively.
    std::vector<Semiderangement> fwd, bwd;
    for (VertexId img0 : {1, 3}) {
        Semiderangement s;
        s.from_side = 0;
        s.map.assign(4, -1);
        s.map[0] = img0;
        s.map[2] = img0 == 1 ? 3 : 1;
        fwd.push_back(s);
    }
    for (VertexId img1 : {0, 2}) {
        Semiderangement s;
        s.from_side = 1;
        s.map.assign(4, -1);
        s.map[1] = img1;
        s.map[3] = img1 == 0 ? 2 : 0;
        bwd.push_back(s);
    }
    for (const auto& i1 : fwd)
        for (const auto& i2 : bwd) {
            auto m = merge_semiderangements(c4, *bp, i1, i2);
            Matching expect;
            for (VertexId v : s0)
                expect.emplace_back(std::min(v, i1.map[v]), std::max(v, i1.map[v]));
            std::sort(expect.begin(), expect.end());
            CHECK(m == expect);  // output is exactly the graph of the first injection
            CHECK(is_perfect_matching(c4, m));
        }

    Semiderangement broken = fwd[0];
    broken.map[2] = broken.map[0];  // not injective
    CHECK_THROWS_AS(merge_semiderangements(c4, *bp, broken, bwd[0]), std::invalid_argument);
}

TEST_CASE("find_derangement on the named families") {
    CHECK_FALSE(find_derangement(gen_checkerboard({5, 5})).has_value());
    CHECK_FALSE(find_derangement(gen_checkerboard({3, 3})).has_value());
    CHECK(find_derangement(gen_checkerboard({2, 3})).has_value());
    CHECK(find_derangement(gen_checkerboard({3, 3, 2})).has_value());
    CHECK(find_derangement(gen_moebius(3, 3)).has_value());

    // Boards exist iff some dimension is even.
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto w = find_derangement(gen_checkerboard({m, n}));
            CHECK(w.has_value() == (m % 2 == 0 || n % 2 == 0));
        }
}

TEST_CASE("find_derangement witnesses validate; bipartite ones are dyadic") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = test::random_graph(rng, 1 + static_cast<int>(rng() % 10),
                                    15 + static_cast<int>(rng() % 70));
        auto w = find_derangement(g);
        CHECK(w.has_value() == test::derangement_exists(g));
        if (!w) continue;
        auto cls = validate(g, *w);
        CHECK(cls.kind == Classification::Kind::Derangement);
        auto type = cycle_decomposition(*w).type;
        if (two_color(g)) {
            for (int part : type) CHECK(part == 2);  // split down to a matching
        }
        // Orbits never leave a component.
        auto comps = connected_components(g);
        auto comp_of = [&](VertexId x) {
            for (size_t i = 0; i < comps.size(); ++i)
                if (std::binary_search(comps[i].begin(), comps[i].end(), x)) return i;
            return comps.size();
        };
        for (const auto& cyc : cycle_decomposition(*w).cycles)
            for (VertexId v : cyc) CHECK(comp_of(v) == comp_of(cyc.front()));
    }
}

TEST_CASE("second existence chain on bipartite graphs") {
    // perfect matching <=> dyadic derangement <=> derangement <=> Hall,
    // each side computed by a separate route.
    std::mt19937 rng(8080);
    int done = 0;
    while (done < 50) {
        auto g = test::random_graph(rng, 2 + static_cast<int>(rng() % 13),
                                    15 + static_cast<int>(rng() % 45));
        if (!two_color(g)) continue;
        ++done;
        const bool pm = test::perfect_matching_exists(g);
        const bool hall = hall_check(g, HallMethod::BruteIndependent).holds;
        const bool der = test::derangement_exists(g);
        auto witness = find_derangement(g);
        const bool dyadic_der = witness.has_value() && dyadic_to_matching(*witness).size() * 2 ==
                                                           static_cast<size_t>(g.n);
        CHECK(pm == hall);
        CHECK(pm == der);
        CHECK(pm == dyadic_der);
    }
}

TEST_CASE("tutte check") {
    auto star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    auto rep = tutte_check(star);
    CHECK_FALSE(rep.holds);
    CHECK(rep.witness == std::vector<VertexId>{0});  // three odd pieces vs one removed

    CHECK(tutte_check(gen_checkerboard({2, 2})).holds);

    auto odd = gen_checkerboard({3, 3});
    auto rep2 = tutte_check(odd);
    CHECK_FALSE(rep2.holds);
    CHECK(rep2.witness.empty());  // fails already at the empty set

    CHECK_THROWS_AS(tutte_check(gen_checkerboard({5, 5}), 20), CapExceeded);
}

TEST_CASE("tutte agrees with perfect matching existence") {
    std::mt19937 rng(6060);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = test::random_graph(rng, 1 + static_cast<int>(rng() % 10),
                                    20 + static_cast<int>(rng() % 60));
        CHECK(tutte_check(g).holds == test::perfect_matching_exists(g));
    }
}

TEST_CASE("general matching and the berge formula") {
    CHECK(max_general_matching(gen_cycle(3)).size() == 1);
    auto p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(max_general_matching(p3).size() == 1);
    CHECK(max_general_matching(gen_checkerboard({3, 3})).size() == 4);

    CHECK(berge_number(p3) == 1);
    CHECK(berge_number(gen_checkerboard({2, 2})) == 2);
    CHECK(berge_number(gen_checkerboard({3, 3})) == 4);

    CHECK(min_fixed_points_dyadic(gen_checkerboard({3, 3})) == 1);
    CHECK(min_fixed_points_dyadic(gen_checkerboard({2, 2})) == 0);
    // The bipartite route keeps large boards in reach of the matching engine.
    CHECK(min_fixed_points_dyadic(gen_checkerboard({5, 5}), 25) == 1);

    CHECK_THROWS_AS(berge_number(gen_checkerboard({5, 5})), CapExceeded);
}

TEST_CASE("berge equals maximum matching on random graphs") {
    std::mt19937 rng(909090);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = test::random_graph(rng, 1 + static_cast<int>(rng() % 11),
                                    15 + static_cast<int>(rng() % 60));
        const int via_formula = berge_number(g);
        const int via_search = static_cast<int>(max_general_matching(g).size());
        const int via_oracle = test::max_matching_size(g);
        CHECK(via_formula == via_oracle);
        CHECK(via_search == via_oracle);
        CHECK(min_fixed_points_dyadic(g) == g.n - 2 * via_oracle);
    }
}

TEST_CASE("derangement counts of complete graphs") {
    const long long expected[] = {0, 1, 2, 9, 44, 265};
    for (int n = 1; n <= 6; ++n)
        CHECK(test::count_derangements(gen_complete(n)) == expected[n - 1]);
}
