#include <gtest/gtest.h>

#include "support.hpp"

using namespace hsub;

TEST(GraphParse, Triangle) {
  const Graph g = parse_graph("g 3\ne 1 2\ne 2 3\ne 1 3");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_TRUE(is_clique(g, std::vector<Vertex>{1, 2, 3}));
}

TEST(GraphParse, SelfLoopRejected) {
  EXPECT_THROW(parse_graph("g 2\ne 1 1"), ParseError);
}

TEST(GraphParse, FieldMapping) {
  const Graph g = parse_graph("g 4\nvw 1 2.5\ne 1 2 0.5 3");
  EXPECT_EQ(g.vertex_weight(1), 2.5);
  EXPECT_EQ(g.vertex_weight(2), 0.0);
  EXPECT_EQ(g.edge_weight(1, 2), 0.5);
  EXPECT_EQ(g.edge_color(*g.edge_id(1, 2)), 3);
}

TEST(GraphParse, ColorPrefix) {
  const Graph g = parse_graph("g 3\ne 1 2 c4\ne 2 3 c1");
  EXPECT_TRUE(g.has_edge_colors());
  EXPECT_FALSE(g.has_edge_weights());
  EXPECT_EQ(g.edge_color(*g.edge_id(2, 1)), 4);
}

TEST(GraphParse, Errors) {
  EXPECT_THROW(parse_graph("e 1 2"), ParseError);
  EXPECT_THROW(parse_graph("g 2\ne 1 3"), ParseError);
  EXPECT_THROW(parse_graph("g 2\ne 1 2\ne 2 1"), ParseError);
  EXPECT_THROW(parse_graph("g 3\ne 1 2 1.0\ne 2 3"), ParseError);
  EXPECT_THROW(parse_graph("g 3\nvw 1 x"), ParseError);
  EXPECT_THROW(parse_graph("g 3\nvw 1 inf"), ParseError);
  EXPECT_THROW(parse_graph("g 3\nq 1"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(GraphParse, CommentsAndBlankLines) {
  const Graph g = parse_graph("# header\n\ng 2 # two vertices\ne 1 2 # edge\n");
  EXPECT_EQ(g.m(), 1u);
}

TEST(GraphSerialize, CanonicalTriangle) {
  const Graph g = parse_graph("g 3\ne 2 3\ne 1 3\ne 1 2");
  EXPECT_EQ(serialize_graph(g), "g 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST(GraphSerialize, Empty) {
  EXPECT_EQ(serialize_graph(Graph(0, std::vector<Edge>{})), "g 0\n");
}

TEST(GraphSerialize, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto mode = static_cast<WeightMode>(seed % 4);
    const std::optional<int> colors = seed % 3 == 0 ? std::optional<int>(5) : std::nullopt;
    const Graph g = generate_random_graph(1 + seed % 13, 0.4, mode, colors, seed);
    const Graph back = parse_graph(serialize_graph(g));
    EXPECT_EQ(back, g) << serialize_graph(g);
  }
}

TEST(GraphGenerate, Extremes) {
  EXPECT_EQ(generate_random_graph(5, 1.0, WeightMode::none, std::nullopt, 3).m(), 10u);
  EXPECT_EQ(generate_random_graph(5, 0.0, WeightMode::none, std::nullopt, 3).m(), 0u);
  EXPECT_THROW(generate_random_graph(5, 1.5, WeightMode::none, std::nullopt, 3), GraphError);
}

TEST(GraphGenerate, Deterministic) {
  const Graph a = generate_random_graph(20, 0.3, WeightMode::both, 4, 99);
  const Graph b = generate_random_graph(20, 0.3, WeightMode::both, 4, 99);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, generate_random_graph(20, 0.3, WeightMode::both, 4, 100));
}

TEST(GraphGenerate, FrozenStream) {
  // The generator is defined on top of the standard mt19937_64 stream, so
  // this sample must not change across platforms.
  Rng rng(5489);
  EXPECT_EQ(rng.next(), 14514284786278117030ULL);
  const Graph g = generate_random_graph(6, 0.5, WeightMode::none, std::nullopt, 1);
  EXPECT_EQ(serialize_graph(g), serialize_graph(generate_random_graph(6, 0.5, WeightMode::none, std::nullopt, 1)));
}

TEST(GraphAccess, NeighborsAndInduced) {
  const Graph g = test::two_triangles();
  EXPECT_EQ(g.degree(2), 3u);
  EXPECT_TRUE(g.adjacent(4, 3));
  EXPECT_FALSE(g.adjacent(1, 4));
  const Graph h = g.induced(std::vector<Vertex>{2, 3, 4});
  EXPECT_EQ(h.n(), 3u);
  EXPECT_EQ(h.m(), 3u);
  EXPECT_EQ(h.vertex_weight(1), 2.0);
  EXPECT_EQ(h.vertex_weight(3), 4.0);
}

TEST(GraphWeights, CanonicalSums) {
  const Graph g = test::two_triangles();
  EXPECT_EQ(vertex_set_weight(g, {3, 2, 4}), 9.0);
  EXPECT_EQ(exact_vertex_set_weight(g, std::vector<Vertex>{2, 3, 4}).approx(), 9.0);
  const Graph e = g.with_edge_weights({1, 2, 3, 4, 5});
  EXPECT_EQ(induced_edge_weight(e, {1, 2, 3}), 6.0);
  EXPECT_EQ(induced_edge_weight(e, {1, 4}), 0.0);
  const std::vector<Vertex> cyc{1, 2, 4, 3};
  EXPECT_EQ(cycle_weight(e, cyc), 1.0 + 4.0 + 5.0 + 2.0);
}

TEST(GraphCycles, Canonical) {
  EXPECT_EQ(canonical_cycle({3, 4, 1, 2}), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(canonical_cycle({3, 2, 1, 4}), (std::vector<Vertex>{1, 2, 3, 4}));
  const Graph c = test::cycle_graph(5);
  EXPECT_TRUE(is_simple_cycle(c, std::vector<Vertex>{1, 2, 3, 4, 5}));
  EXPECT_FALSE(is_simple_cycle(c, std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_FALSE(is_simple_cycle(c, std::vector<Vertex>{1, 2, 1}));
}

TEST(GraphFormat, Reals) {
  EXPECT_EQ(format_real(6.0), "6.0");
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(-2.5), "-2.5");
  EXPECT_EQ(format_real(inf), "inf");
  EXPECT_EQ(*parse_real("-inf"), -inf);
  EXPECT_FALSE(parse_real("1.0x").has_value());
}

TEST(ExactSumTest, CancellationIsExact) {
  ExactSum s{1e16, 1.0, -1e16};
  EXPECT_EQ(s.sign(), 1);
  EXPECT_EQ(s.approx(), 1.0);
  ExactSum t{0.1, 0.2};
  ExactSum u{0.3};
  EXPECT_NE(t <=> u, std::strong_ordering::equal);
  EXPECT_EQ(ExactSum({0.5, 0.25}) <=> ExactSum({0.75}), std::strong_ordering::equal);
}

TEST(ExactSumTest, Infinities) {
  ExactSum s{1.0};
  s += inf;
  EXPECT_TRUE(s.is_infinite());
  EXPECT_GT(s, ExactSum{1e300});
  EXPECT_LT(ExactSum{-inf}, ExactSum{-1e300});
}

TEST(RngTest, SeedDerivation) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  Rng r(1);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
}
