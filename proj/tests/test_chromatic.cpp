#include <gtest/gtest.h>

#include "support.hpp"

using namespace hsub;

namespace {

Graph colored(std::size_t n, double p, int colors, std::uint64_t seed) {
  return generate_random_graph(n, p, WeightMode::none, colors, seed);
}

Graph colored_complete(std::size_t n, const std::vector<int>& colors) {
  return test::complete(n).with_edge_colors(colors);
}

}  // namespace

TEST(Partition, Sizes) {
  for (int h = 3; h <= 9; ++h) {
    const auto s = partition_sizes(h);
    int sum = 0;
    for (int x : s) sum += x;
    EXPECT_EQ(sum, h * (h - 1) / 2) << h;
  }
  EXPECT_EQ(partition_sizes(3), (std::array<int, 6>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(partition_sizes(5), (std::array<int, 6>{0, 0, 3, 1, 3, 3}));
}

TEST(Rainbow, Examples) {
  const Graph k3 = colored_complete(3, {1, 2, 3});
  EXPECT_TRUE(rainbow_clique(k3, 3));
  EXPECT_FALSE(rainbow_clique(colored_complete(3, {1, 1, 2}), 3));
  EXPECT_THROW(rainbow_clique(test::complete(3), 3), std::invalid_argument);
  EXPECT_THROW(rainbow_clique(k3, 5), std::invalid_argument);
  // Proper 3-edge-coloring of K_4: every triangle is rainbow, no K_4 is.
  const Graph k4 = colored_complete(4, {1, 2, 3, 3, 2, 1});
  EXPECT_TRUE(rainbow_clique(k4, 3));
  EXPECT_FALSE(rainbow_clique(k4, 4));
  EXPECT_TRUE(rainbow_clique(colored_complete(4, {1, 2, 3, 4, 5, 6}), 4));
}

TEST(Rainbow, RandomAgainstOracle) {
  int agree = 0;
  const int instances = 100;
  for (std::uint64_t seed = 0; seed < instances; ++seed) {
    const Graph g = colored(10, 0.8, 12, 3000 + seed);
    RainbowOptions opt;
    opt.seed = seed;
    const auto got = rainbow_clique(g, 3, opt);
    const auto want = oracle::rainbow(g, 3);
    if (got) {
      ASSERT_TRUE(want) << "false positive at seed " << seed;
      ASSERT_TRUE(is_rainbow(g, got->vertices));
      ASSERT_TRUE(is_clique(g, got->vertices));
    }
    agree += got.has_value() == want.has_value();
  }
  EXPECT_GE(agree, 99);
}

TEST(Rainbow, FourCliquesFewColors) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = colored(8, 0.8, 6, 3500 + seed);
    const auto got = rainbow_clique(g, 4);
    EXPECT_EQ(got.has_value(), oracle::rainbow(g, 4).has_value()) << seed;
    if (got) EXPECT_TRUE(is_rainbow(g, got->vertices));
  }
}

TEST(Rainbow, ReductionLaw) {
  Rng rng(51);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = colored(9, 0.7, 10, 3700 + seed);
    for (int trial = 0; trial < 10; ++trial) {
      const ColorReduction red = reduce_colors(g, 3, rng);
      for (const auto& t : oracle::enumerate_cliques(g, 3)) {
        std::vector<int> reduced;
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = i + 1; j < 3; ++j) reduced.push_back(red(g.edge_color(t[i], t[j])));
        }
        std::sort(reduced.begin(), reduced.end());
        const bool reduced_rainbow = std::adjacent_find(reduced.begin(), reduced.end()) == reduced.end();
        if (!is_rainbow(g, t)) EXPECT_FALSE(reduced_rainbow);
      }
    }
  }
}

TEST(MonoTriangle, Examples) {
  const Graph g = test::make_graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}).with_edge_colors({2, 2, 2, 1, 1, 3});
  const auto r = mono_triangle(g);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->vertices, (Tuple{1, 2, 3}));
  EXPECT_FALSE(mono_triangle(colored_complete(4, {1, 2, 3, 4, 5, 6})));
}

TEST(MonoTriangle, RandomAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = colored(20, 0.5, 3, 4000 + seed);
    for (double omega : {2.0, 2.376, 3.0}) {
      const auto got = mono_triangle(g, omega);
      ASSERT_EQ(got.has_value(), oracle::mono(g, 3).has_value()) << seed;
      if (got) EXPECT_TRUE(is_monochromatic(g, got->vertices));
    }
  }
}

TEST(MonoK4, Examples) {
  const Graph base(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {1, 6}, {5, 6}});
  std::vector<int> cs;
  for (const auto& e : base.edges()) cs.push_back(e.v <= 4 ? 7 : static_cast<int>(e.u + e.v));
  const auto r = mono_k4(base.with_edge_colors(cs));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->vertices, (Tuple{1, 2, 3, 4}));
  EXPECT_FALSE(mono_k4(colored_complete(4, {1, 2, 3, 3, 2, 1})));
}

TEST(MonoK4, RandomAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = colored(12, 0.8, 2, 4200 + seed);
    const auto got = mono_k4(g);
    ASSERT_EQ(got.has_value(), oracle::mono(g, 4).has_value()) << seed;
    if (got) EXPECT_TRUE(is_monochromatic(g, got->vertices) && is_clique(g, got->vertices));
  }
}

TEST(MonoClique, Examples) {
  EXPECT_TRUE(mono_clique(colored_complete(5, std::vector<int>(10, 4)), 5));
  std::vector<int> rainbow(15);
  for (int i = 0; i < 15; ++i) rainbow[static_cast<std::size_t>(i)] = i + 1;
  EXPECT_FALSE(mono_clique(colored_complete(6, rainbow), 5));
  EXPECT_THROW(mono_clique(colored_complete(5, std::vector<int>(10, 4)), 7), std::invalid_argument);
}

TEST(MonoClique, RandomAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = colored(10, 0.9, 2, 4400 + seed);
    for (int h : {3, 4, 5, 6}) {
      const auto got = mono_clique(g, h);
      ASSERT_EQ(got.has_value(), oracle::mono(g, static_cast<std::size_t>(h)).has_value())
          << seed << " h=" << h;
      if (got) {
        EXPECT_EQ(got->vertices.size(), static_cast<std::size_t>(h));
        EXPECT_TRUE(is_monochromatic(g, got->vertices) && is_clique(g, got->vertices));
      }
    }
  }
}
