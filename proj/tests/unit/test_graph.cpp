#include "gqaoa/error.hpp"
#include "gqaoa/graph.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gqaoa;

namespace {

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no gqaoa::Error thrown";
    return ErrorKind::InvalidArgument;
}

std::string message_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Presets, Shapes) {
    const Graph t = preset_graph("triangle");
    EXPECT_EQ(t.num_vertices(), 3u);
    EXPECT_EQ(t.num_edges(), 3u);
    const Graph s = preset_graph("square");
    EXPECT_EQ(s.num_vertices(), 4u);
    EXPECT_EQ(s.num_edges(), 4u);
    const Graph p = preset_graph("paw");
    EXPECT_EQ(p.num_vertices(), 4u);
    EXPECT_EQ(p.num_edges(), 4u);
    EXPECT_EQ(p.degree(2), 3u);
    EXPECT_EQ(p.degree(3), 1u);
    EXPECT_FALSE(p.weight_q().has_value());
    EXPECT_DOUBLE_EQ(p.effective_q(), 0.5);
}

TEST(Presets, UnknownNameListsPresets) {
    const auto msg = message_of([] { preset_graph("bridge"); });
    EXPECT_NE(msg.find("triangle"), std::string::npos);
    EXPECT_NE(msg.find("paw"), std::string::npos);
}

TEST(EdgeCovers, FrozenPresetSets) {
    EXPECT_EQ(enumerate_edge_covers(preset_graph("triangle")),
              (std::vector<BasisIndex>{0, 1, 2, 4}));
    EXPECT_EQ(enumerate_edge_covers(preset_graph("square")),
              (std::vector<BasisIndex>{0, 1, 2, 4, 5, 8, 10}));
    EXPECT_EQ(enumerate_edge_covers(preset_graph("paw")),
              (std::vector<BasisIndex>{0, 1, 2, 4, 6}));
}

TEST(EdgeCovers, IsolatedVertexIsDomainError) {
    const Graph g({"a", "b", "c"}, {{"a", "b"}});
    EXPECT_EQ(kind_of([&] { enumerate_edge_covers(g); }), ErrorKind::Domain);
}

TEST(MaxCut, FrozenPresetSets) {
    EXPECT_EQ(enumerate_max_cuts(preset_graph("triangle")),
              (std::vector<BasisIndex>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(enumerate_max_cuts(preset_graph("square")),
              (std::vector<BasisIndex>{5, 10}));
    EXPECT_EQ(enumerate_max_cuts(preset_graph("paw")).size(), 6u);
    EXPECT_EQ(cut_value(preset_graph("paw"), 0b0101), 3u);
}

TEST(Enumeration, MatchesOracleOnRandomGraphs) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rg = oracle::random_graph(rng, 6);
        EXPECT_EQ(enumerate_edge_covers(rg.graph), oracle::edge_covers(rg.nv, rg.edges));
        EXPECT_EQ(enumerate_max_cuts(rg.graph), oracle::max_cuts(rg.nv, rg.edges));
    }
}

TEST(GraphConstruction, Validation) {
    EXPECT_EQ(kind_of([] { Graph({"a", "b"}, {{"a", "a"}}); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Graph({"a", "b"}, {{"a", "z"}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Graph({"a", "a"}, {}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Graph({"a b"}, {}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Graph({"a", "b"}, {{"a", "b"}}, 1.0); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Graph({"a", "b"}, {{"a", "b"}}, 0.0); }),
              ErrorKind::InvalidArgument);
}

TEST(GraphFile, ParsesCommentsAndWeight) {
    const Graph g = load_graph("# paw with a weight\n"
                               "vertices 0 1 2 3\n"
                               "\n"
                               "edge 0 1   # first\n"
                               "edge 1 2\n"
                               "edge 2 0\n"
                               "edge 2 3\n"
                               "q 0.7\n");
    EXPECT_EQ(g.with_weight(std::nullopt), preset_graph("paw"));
    ASSERT_TRUE(g.weight_q().has_value());
    EXPECT_DOUBLE_EQ(*g.weight_q(), 0.7);
}

TEST(GraphFile, RoundTripIsExact) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto rg = oracle::random_graph(rng, 6);
        const Graph g = rg.graph.with_weight(std::uniform_real_distribution<>(0.01, 0.99)(rng));
        const std::string text = serialize_graph(g);
        const Graph back = load_graph(text);
        EXPECT_EQ(back, g);
        EXPECT_EQ(serialize_graph(back), text);
    }
}

TEST(GraphFile, ErrorsCarryLineAndField) {
    auto parse_msg = [](const char *text) {
        try {
            load_graph(text);
        } catch (const ParseError &e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_EQ(parse_msg("vertices a b\nedge a c\n"),
              "line 2: field 3: dangling endpoint 'c'");
    EXPECT_EQ(parse_msg("edge a b\n"), "line 1: edge before 'vertices' declaration");
    EXPECT_EQ(parse_msg("vertices a b\nq 1.5\n"),
              "line 2: field 2: q = 1.5 outside the open interval (0, 1)");
    EXPECT_EQ(parse_msg("vertices a b\nq x\n"), "line 2: field 2: 'x' is not a number");
    EXPECT_EQ(parse_msg("vertices a b\nedge a b\nedge b a\n"),
              "line 3: duplicate edge (b, a)");
    EXPECT_EQ(parse_msg("vertices a b\nedge a a\n"), "line 2: self-loop on vertex 'a'");
    EXPECT_EQ(parse_msg("vertices a b\nvertices c\n"), "line 2: 'vertices' declared twice");
    EXPECT_EQ(parse_msg("vertices a\nbogus\n"), "line 2: unknown keyword 'bogus'");
    EXPECT_EQ(parse_msg("# nothing\n"), "line 2: missing 'vertices' declaration");
    EXPECT_EQ(parse_msg("vertices a a\n"), "line 1: field 3: duplicate vertex 'a'");
}
