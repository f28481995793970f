#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <set>

#include "support.hpp"

using namespace hsub;

namespace {

Graph edge_random(std::size_t n, double p, std::uint64_t seed) {
  return test::with_int_edge_weights(generate_random_graph(n, p, WeightMode::none, std::nullopt, seed), -5, 20,
                                     seed + 7);
}

bool colorful(const VertexColoring& col, const Tuple& t) {
  std::set<int> seen;
  for (Vertex v : t) seen.insert(col.of(v));
  return seen.size() == t.size();
}

// Every simple path on k vertices, in both directions.
void each_path(const Graph& g, std::size_t k, const std::function<void(const Tuple&)>& fn) {
  Tuple path;
  std::vector<char> used(g.n() + 1, 0);
  std::function<void()> grow = [&] {
    if (path.size() == k) {
      fn(path);
      return;
    }
    for (Vertex x : g.neighbors(path.back())) {
      if (used[x]) continue;
      used[x] = 1;
      path.push_back(x);
      grow();
      path.pop_back();
      used[x] = 0;
    }
  };
  for (Vertex s = 1; s <= g.n(); ++s) {
    path = {s};
    used[s] = 1;
    grow();
    used[s] = 0;
  }
}

double path_weight(const Graph& g, const Tuple& t) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) es.push_back(make_edge(t[i], t[i + 1]));
  return edge_list_weight(g, es);
}

// Heaviest colorful k-cycle through u, by enumeration.
std::optional<double> colorful_cycle_oracle(const Graph& g, const VertexColoring& col, Vertex u) {
  std::optional<double> best;
  each_path(g, static_cast<std::size_t>(col.k), [&](const Tuple& t) {
    if (t.front() != u || !g.adjacent(t.back(), u) || !colorful(col, t)) return;
    const double w = cycle_weight(g, canonical_cycle(t));
    if (!best || w > *best) best = w;
  });
  return best;
}

void expect_valid_cycle(const Graph& g, const SubgraphResult& r, std::size_t k) {
  ASSERT_EQ(r.vertices.size(), k);
  EXPECT_TRUE(is_simple_cycle(g, r.vertices));
  EXPECT_EQ(r.weight, cycle_weight(g, r.vertices));
}

}  // namespace

TEST(ColorfulCycle, Examples) {
  const Graph c5 = test::cycle_graph(5).with_edge_weights(std::vector<double>(5, 1.0));
  const VertexColoring rainbow{5, {1, 2, 3, 4, 5}};
  for (Vertex u = 1; u <= 5; ++u) EXPECT_EQ(colorful_cycle_through(c5, rainbow, u)->weight, 5.0);
  const VertexColoring repeated{5, {1, 2, 3, 4, 1}};
  EXPECT_FALSE(colorful_cycle_through(c5, repeated, 1));
}

TEST(ColorfulCycle, RandomAgainstEnumeration) {
  Rng rng(41);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = edge_random(16, 0.4, 60 + seed);
    for (int k : {3, 4, 5}) {
      const VertexColoring col = random_coloring(g.n(), k, rng);
      for (Vertex u = 1; u <= g.n(); ++u) {
        const auto got = colorful_cycle_through(g, col, u);
        const auto want = colorful_cycle_oracle(g, col, u);
        ASSERT_EQ(got.has_value(), want.has_value()) << seed << " k=" << k << " u=" << u;
        if (!got) continue;
        EXPECT_EQ(got->weight, *want);
        expect_valid_cycle(g, *got, static_cast<std::size_t>(k));
        EXPECT_TRUE(colorful(col, got->vertices));
      }
    }
  }
}

TEST(Cycles, Examples) {
  const Graph c4 = test::cycle_graph(4).with_edge_weights({1, 2, 3, 4});
  ColorTrialPlan plan;
  EXPECT_EQ(heaviest_k_cycle_sparse(c4, 4, plan)->weight, 10.0);
  EXPECT_EQ(heaviest_k_cycle_dense(c4, 4, plan)->weight, 10.0);
  const Graph c5 = test::cycle_graph(5).with_edge_weights(std::vector<double>(5, 1.0));
  EXPECT_EQ(heaviest_k_cycle_dense(c5, 5, plan)->weight, 5.0);
  EXPECT_EQ(heaviest_k_cycle_sparse(c5, 5, plan)->weight, 5.0);
  EXPECT_FALSE(heaviest_k_cycle_sparse(c4, 3, plan));
  // K_{3,3} has no odd cycle.
  const Graph k33 = test::make_graph(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}})
                        .with_edge_weights(std::vector<double>(9, 1.0));
  EXPECT_FALSE(heaviest_k_cycle_dense(k33, 3, plan));
  EXPECT_FALSE(heaviest_k_cycle_dense(k33, 5, plan));
  EXPECT_THROW(heaviest_k_cycle_dense(c4, 2, plan), std::invalid_argument);
  EXPECT_THROW(heaviest_k_cycle_sparse(test::cycle_graph(4), 4, plan), std::invalid_argument);
}

TEST(Cycles, SoundAndMostlyComplete) {
  int misses = 0, runs = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = edge_random(14, 0.35, 200 + seed);
    for (int k : {3, 4, 5}) {
      const auto want = oracle::k_cycle(g, static_cast<std::size_t>(k));
      ColorTrialPlan plan;
      plan.seed = seed;
      for (const auto& got : {heaviest_k_cycle_sparse(g, k, plan), heaviest_k_cycle_dense(g, k, plan)}) {
        ++runs;
        if (!got) {
          misses += want.has_value();
          continue;
        }
        ASSERT_TRUE(want);
        expect_valid_cycle(g, *got, static_cast<std::size_t>(k));
        ASSERT_LE(got->weight, want->weight);
        misses += got->weight < want->weight;
      }
    }
  }
  EXPECT_LE(misses, 2) << "of " << runs;
}

TEST(Cycles, DeterministicForSeed) {
  const Graph g = edge_random(14, 0.4, 9);
  ColorTrialPlan plan;
  plan.trials = 3;
  plan.seed = 77;
  const auto a = heaviest_k_cycle_sparse(g, 5, plan), b = heaviest_k_cycle_sparse(g, 5, plan);
  ASSERT_EQ(a.has_value(), b.has_value());
  if (a) EXPECT_EQ(a->vertices, b->vertices);
  EXPECT_EQ(ColorTrialPlan{}.effective_trials(), static_cast<std::size_t>(std::ceil(std::exp(3.0) * std::log(100.0))));
}

TEST(Cycles, ColorfulHitRate) {
  const std::size_t n = 12;
  const Graph g = edge_random(n, 0.5, 4);
  for (int k : {3, 4, 5}) {
    const auto best = oracle::k_cycle(g, static_cast<std::size_t>(k));
    ASSERT_TRUE(best);
    const int trials = 2000;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
      Rng rng(derive_seed(99, static_cast<std::uint64_t>(t)));
      hits += colorful(random_coloring(n, k, rng), best->vertices);
    }
    double p = 1.0;
    for (int i = 1; i <= k; ++i) p *= static_cast<double>(i) / k;
    const double sd = std::sqrt(trials * p * (1 - p));
    EXPECT_NEAR(hits, trials * p, 3 * sd) << "k=" << k;
  }
}

TEST(PathTable, Examples) {
  const Graph e = Graph(2, {{1, 2}}).with_edge_weights({2.5});
  const PathTable t = all_pairs_heaviest_k_path(e, VertexColoring{2, {1, 2}}, 2);
  EXPECT_EQ(t.value(1, 2), 2.5);
  EXPECT_EQ(t.value(2, 1), 2.5);
  const Graph g = edge_random(5, 0.5, 1);
  const PathTable one = all_pairs_heaviest_k_path(g, VertexColoring{1, std::vector<int>(5, 1)}, 1);
  for (Vertex u = 1; u <= 5; ++u) {
    EXPECT_EQ(one.value(u, u), 0.0);
    for (Vertex v = 1; v <= 5; ++v) {
      if (u != v) EXPECT_EQ(one.value(u, v), -inf);
    }
  }
}

TEST(PathTable, RandomAgainstEnumeration) {
  Rng rng(43);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = edge_random(12, 0.5, 400 + seed);
    for (std::size_t k : {2, 3, 4, 5}) {
      const VertexColoring col = random_coloring(g.n(), static_cast<int>(k), rng);
      const PathTable t = all_pairs_heaviest_k_path(g, col, k);
      std::vector<double> want((g.n() + 1) * (g.n() + 1), -inf);
      each_path(g, k, [&](const Tuple& p) {
        if (!colorful(col, p)) return;
        double& slot = want[p.front() * (g.n() + 1) + p.back()];
        slot = std::max(slot, path_weight(g, p));
      });
      for (Vertex u = 1; u <= g.n(); ++u) {
        for (Vertex v = 1; v <= g.n(); ++v) {
          if (u == v) continue;
          ASSERT_EQ(t.value(u, v), want[u * (g.n() + 1) + v]) << seed << " k=" << k;
          EXPECT_EQ(t.value(u, v), t.value(v, u));
          const auto p = t.path(u, v);
          ASSERT_EQ(p.has_value(), t.value(u, v) != -inf);
          if (!p) continue;
          ASSERT_EQ(p->size(), k);
          EXPECT_EQ(p->front(), u);
          EXPECT_EQ(p->back(), v);
          EXPECT_TRUE(colorful(col, *p));
          for (std::size_t i = 0; i + 1 < k; ++i) EXPECT_TRUE(g.adjacent((*p)[i], (*p)[i + 1]));
          EXPECT_EQ(*t.weight(u, v), t.value(u, v));
        }
      }
    }
  }
}

TEST(DistanceProduct, Examples) {
  const Graph k3 = Graph(3, {{1, 2}, {1, 3}, {2, 3}}).with_edge_weights({1, 2, 3});
  EXPECT_EQ(heaviest_subgraph_distance_product(k3, 3, {1, 1, 1})->weight, 6.0);
  EXPECT_FALSE(heaviest_subgraph_distance_product(test::cycle_graph(5).with_edge_weights(std::vector<double>(5, 1)), 3,
                                                  {1, 1, 1}));
  EXPECT_THROW(heaviest_subgraph_distance_product(k3, 3, {1, 1, 2}), std::invalid_argument);
}

TEST(DistanceProduct, RandomAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = edge_random(12, 0.6, 500 + seed);
    for (auto [h, split] : std::vector<std::pair<int, Split>>{
             {3, {1, 1, 1}}, {4, {1, 2, 1}}, {4, {2, 1, 1}}, {5, {2, 1, 2}}, {5, default_split(5)}}) {
      const auto got = heaviest_subgraph_distance_product(g, h, split);
      const auto want = oracle::max_clique(g, static_cast<std::size_t>(h));
      ASSERT_TRUE(test::same_weight(got, want)) << seed << " h=" << h;
      if (got) {
        EXPECT_TRUE(is_clique(g, got->vertices));
        EXPECT_EQ(got->weight, induced_edge_weight(g, got->vertices));
      }
    }
  }
}

TEST(Densest, Examples) {
  const Graph k4e = Graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}).with_edge_weights(std::vector<double>(5, 1.0));
  const SubgraphResult r = densest_k_subgraph(k4e, 3);
  EXPECT_EQ(r.weight, 3.0);
  EXPECT_TRUE(is_clique(k4e, r.vertices));
  const Graph empty(5, std::vector<Edge>{});
  EXPECT_EQ(densest_k_subgraph(empty, 3).weight, 0.0);
  EXPECT_EQ(densest_k_subgraph(empty, 3).vertices.size(), 3u);
  EXPECT_THROW(densest_k_subgraph(empty, 6), std::invalid_argument);
}

TEST(Densest, RandomAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = edge_random(12, 0.5, 600 + seed);
    for (int k : {2, 3, 4, 5}) {
      const SubgraphResult got = densest_k_subgraph(g, k);
      EXPECT_EQ(got.weight, oracle::densest(g, static_cast<std::size_t>(k)).weight) << seed << " k=" << k;
      EXPECT_EQ(got.weight, induced_edge_weight(g, got.vertices));
    }
  }
}
