#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "selfsim/aut.hpp"
#include "selfsim/constructions.hpp"
#include "selfsim/errors.hpp"
#include "test_support.hpp"

using namespace selfsim;
using Cells = std::vector<std::vector<Vertex>>;

TEST(Refinement, ExamplesFromTrivialSeed) {
    EXPECT_EQ(equitable_refinement(cycle_graph(6), Partition::trivial(6)).cell_count(), 1u);
    EXPECT_EQ(equitable_refinement(path_graph(5), Partition::trivial(5)).cells(), (Cells{{0, 4}, {1, 3}, {2}}));
    EXPECT_EQ(equitable_refinement(star_graph(3), Partition::trivial(4)).cells(), (Cells{{1, 2, 3}, {0}}));
}

TEST(Refinement, RespectsSeedAndIsEquitable) {
    const Graph g = cycle_graph(6);
    const Partition seed(6, {{0}, {1, 2, 3, 4, 5}});
    const Partition r = equitable_refinement(g, seed);
    EXPECT_TRUE(r.refines(seed));
    EXPECT_EQ(r.cells(), (Cells{{1, 5}, {2, 4}, {0}, {3}}));
    EXPECT_THROW(equitable_refinement(g, Partition::trivial(5)), InvalidArgument);
}

TEST(Refinement, RegularNonTransitiveGraphStaysOneCell) {
    // colour refinement cannot split a regular graph even when Aut is trivial
    for (const auto& rec : fixtures::oracle_graphs()) {
        if (rec.at("name") != "frucht") continue;
        const Graph g = fixtures::oracle_graph(rec);
        EXPECT_EQ(equitable_refinement(g, Partition::trivial(g.order())).cell_count(), 1u);
        EXPECT_EQ(orbit_partition(g).cell_count(), 12u);
    }
}

TEST(AutGroup, SmallGroupOrders) {
    EXPECT_EQ(automorphism_group(cycle_graph(7)).order, 14);
    EXPECT_EQ(automorphism_group(complete_graph(6)).order, 720);
    EXPECT_EQ(automorphism_group(path_graph(5)).order, 2);
    EXPECT_EQ(automorphism_group(star_graph(5)).order, 120);
    EXPECT_EQ(automorphism_group(Graph(1, {})).order, 1);
    EXPECT_EQ(automorphism_group(torus({3, 3})).order, 72);
}

TEST(AutGroup, LargeOrdersUseBigIntegers) {
    // K_1,30: 30! does not fit in 64 bits
    BigInt expected = 1;
    for (int i = 2; i <= 30; ++i) expected *= i;
    EXPECT_EQ(automorphism_group(star_graph(30)).order, expected);
}

TEST(AutGroup, GeneratorsAreAutomorphisms) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = fixtures::random_connected_graph(10, 0.3, rng);
        for (const auto& p : automorphism_group(g).generators) EXPECT_TRUE(p.is_automorphism_of(g));
    }
    for (const auto& p : automorphism_group(circular_ladder(6)).generators) {
        EXPECT_TRUE(p.is_automorphism_of(circular_ladder(6)));
    }
}

TEST(AutGroup, MatchesFrozenOracle) {
    for (const auto& rec : fixtures::oracle_graphs()) {
        const Graph g = fixtures::oracle_graph(rec);
        const AutGroup aut = automorphism_group(g);
        EXPECT_EQ(aut.order.str(), rec.at("group_order").get<std::string>()) << rec.at("name");
        EXPECT_EQ(aut.orbits.cells(), rec.at("orbits").get<Cells>()) << rec.at("name");
    }
}

TEST(Orbits, AgreeWithEnumerationOnAllGraphsUpToFive) {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : fixtures::all_connected_graphs(n)) {
            ASSERT_EQ(orbit_partition(g).cells(), fixtures::orbits_by_enumeration(g)) << to_edge_list(g);
        }
    }
}

TEST(Orbits, AgreeWithLibraryBruteForceOnRandomGraphs) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6 + trial % 3;
        const Graph g = fixtures::random_connected_graph(n, 0.25 + 0.05 * (trial % 5), rng);
        ASSERT_EQ(orbit_partition(g), brute_force_orbits(g)) << to_edge_list(g);
    }
}

TEST(Orbits, InvariantUnderRelabeling) {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = fixtures::random_connected_graph(12, 0.2, rng);
        std::vector<Vertex> image(12);
        std::iota(image.begin(), image.end(), 0);
        std::shuffle(image.begin(), image.end(), rng);
        const Graph h = g.relabeled(image);
        const Partition og = orbit_partition(g);
        std::vector<std::vector<Vertex>> mapped;
        for (const auto& cell : og.cells()) {
            std::vector<Vertex> c;
            for (Vertex v : cell) c.push_back(image[static_cast<std::size_t>(v)]);
            mapped.push_back(c);
        }
        EXPECT_EQ(Partition(12, mapped).canonical(), orbit_partition(h));
        EXPECT_EQ(automorphism_group(g).order, automorphism_group(h).order);
    }
}

TEST(Orbits, BruteForceRefusesLargeGraphs) {
    EXPECT_THROW(brute_force_orbits(cycle_graph(9)), ResourceError);
}

TEST(Limits, VertexAndNodeCaps) {
    SearchLimits tight;
    tight.max_vertices = 10;
    EXPECT_THROW(automorphism_group(cycle_graph(11), tight), ResourceError);
    EXPECT_NO_THROW(automorphism_group(cycle_graph(10), tight));
    SearchLimits few;
    few.max_nodes = 3;
    EXPECT_THROW(automorphism_group(complete_graph(8), few), ResourceError);
}

TEST(Transitivity, VertexTransitiveFamilies) {
    for (int n = 3; n <= 12; ++n) {
        EXPECT_TRUE(is_vertex_transitive(circular_ladder(n))) << n;
        EXPECT_TRUE(is_vertex_transitive(moebius_ladder(n))) << n;
        EXPECT_TRUE(is_vertex_transitive(antiprism(n))) << n;
        if (n % 2 == 0 && n >= 4) EXPECT_TRUE(is_vertex_transitive(crossed_prism(n))) << n;
    }
    EXPECT_FALSE(is_vertex_transitive(path_graph(4)));
    EXPECT_FALSE(is_vertex_transitive(generalized_sun(5, 2, 1)));
}

TEST(Transitivity, EdgeTransitivity) {
    EXPECT_TRUE(is_edge_transitive(circular_ladder(4)));
    EXPECT_FALSE(is_edge_transitive(circular_ladder(3)));
    EXPECT_TRUE(is_edge_transitive(star_graph(4)));
    EXPECT_TRUE(is_edge_transitive(cycle_graph(9)));
    EXPECT_TRUE(is_edge_transitive(complete_graph(5)));
    EXPECT_FALSE(is_edge_transitive(path_graph(4)));
    EXPECT_THROW(is_edge_transitive(Graph(3, {})), InvalidArgument);
}
