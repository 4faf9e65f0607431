#include "gqaoa/error.hpp"
#include "gqaoa/problems.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

using namespace gqaoa;

TEST(MaxCutHamiltonian, EnergyIsEdgesMinusTwiceCut) {
    const Graph g = preset_graph("paw");
    const auto h = build_maxcut_hamiltonian(g);
    ASSERT_EQ(h.num_qubits(), 4u);
    for (BasisIndex x = 0; x < 16; ++x) {
        EXPECT_DOUBLE_EQ(h.energy(x), 4.0 - 2.0 * static_cast<double>(cut_value(g, x)));
    }
    EXPECT_DOUBLE_EQ(h.ground_energy(), -2.0);
    EXPECT_DOUBLE_EQ(h.max_energy(), 4.0);
}

TEST(MaxCutHamiltonian, SquareGroundSet) {
    const auto h = build_maxcut_hamiltonian(preset_graph("square"));
    EXPECT_EQ(h.ground_set(), (std::vector<BasisIndex>{5, 10}));
    EXPECT_DOUBLE_EQ(h.ground_energy(), -4.0);
}

TEST(EdgeCoverHamiltonian, CountsUncoveredVertices) {
    const auto h = build_edge_cover_hamiltonian(preset_graph("triangle"));
    ASSERT_EQ(h.dimension(), 8u);
    // all edges excluded leaves every vertex uncovered
    EXPECT_DOUBLE_EQ(h.energy(0b111), 3.0);
    // only edge (0,1) taken leaves vertex 2 bare
    EXPECT_DOUBLE_EQ(h.energy(0b110), 1.0);
    EXPECT_DOUBLE_EQ(h.energy(0b000), 0.0);
    EXPECT_EQ(h.ground_set(), (std::vector<BasisIndex>{0, 1, 2, 4}));
}

TEST(EdgeCoverHamiltonian, IsolatedVertexRejected) {
    const Graph g({"a", "b", "c"}, {{"a", "b"}});
    EXPECT_THROW(build_edge_cover_hamiltonian(g), Error);
}

TEST(MaxCutHamiltonian, EmptyEdgeSetRejected) {
    const Graph g({"a", "b"}, {});
    EXPECT_THROW(build_maxcut_hamiltonian(g), Error);
}

TEST(Hamiltonians, GroundSetsMatchBruteForce) {
    for (const auto &name : preset_names()) {
        const Graph g = preset_graph(name);
        EXPECT_EQ(build_hamiltonian(g, ProblemKind::EdgeCover).ground_set(),
                  enumerate_edge_covers(g));
        EXPECT_EQ(build_hamiltonian(g, ProblemKind::MaxCut).ground_set(),
                  enumerate_max_cuts(g));
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rg = oracle::random_graph(rng, 5);
        EXPECT_EQ(build_edge_cover_hamiltonian(rg.graph).ground_set(),
                  oracle::edge_covers(rg.nv, rg.edges));
        EXPECT_EQ(build_maxcut_hamiltonian(rg.graph).ground_set(),
                  oracle::max_cuts(rg.nv, rg.edges));
    }
}

TEST(Weights, ProductFormula) {
    // (1-q)^{included} q^{excluded}, bit 0 = included
    EXPECT_DOUBLE_EQ(product_weight(4, 0.75, 0b0000), std::pow(0.25, 4));
    EXPECT_DOUBLE_EQ(product_weight(4, 0.75, 0b0101), 0.25 * 0.25 * 0.75 * 0.75);
    EXPECT_DOUBLE_EQ(product_weight(3, 0.5, 0b011), 0.125);
}

TEST(Weights, TableSumsToOne) {
    const WeightTable w(5, 0.3);
    double total = 0.0;
    for (double x : w.weights()) {
        total += x;
    }
    EXPECT_NEAR(total, 1.0, 1e-14);
}

TEST(Weights, NormalizedOverSquareCovers) {
    const WeightTable w(4, 0.75);
    const std::vector<BasisIndex> covers{0, 1, 2, 4, 5, 8, 10};
    const auto p = w.normalized_over(covers);
    // 0.25^4, four of 0.25^3*0.75, two of 0.25^2*0.75^2
    const double z = std::pow(0.25, 4) + 4 * std::pow(0.25, 3) * 0.75 +
                     2 * std::pow(0.25 * 0.75, 2);
    EXPECT_NEAR(p[0], std::pow(0.25, 4) / z, 1e-15);
    EXPECT_NEAR(p[4], std::pow(0.25 * 0.75, 2) / z, 1e-15);
    EXPECT_NEAR(p[6], p[4], 1e-15);
}

TEST(Weights, SubgraphWeightNeedsQ) {
    EXPECT_THROW(subgraph_weight(preset_graph("paw"), 0), Error);
    const Graph g = preset_graph("paw").with_weight(0.7);
    EXPECT_DOUBLE_EQ(subgraph_weight(g, 0b0110), 0.3 * 0.3 * 0.7 * 0.7);
    EXPECT_DOUBLE_EQ(WeightTable::for_graph(g)(0b0110), subgraph_weight(g, 0b0110));
}

TEST(Weights, UnweightedIsUniform) {
    const WeightTable w(3, 0.5);
    for (double x : w.weights()) {
        EXPECT_DOUBLE_EQ(x, 0.125);
    }
}
