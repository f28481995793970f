#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "support.hpp"

using namespace hsub;

namespace {

struct Tri {
  Tuple t;
  double w;
};

std::vector<Tri> triangles(const Graph& g) {
  std::vector<Tri> out;
  for (const auto& t : oracle::enumerate_cliques(g, 3)) out.push_back({t, vertex_set_weight(g, t)});
  return out;
}

Graph weighted_random(std::size_t n, double p, std::uint64_t seed, int lo = 1, int hi = 100) {
  return test::with_int_vertex_weights(generate_random_graph(n, p, WeightMode::none, std::nullopt, seed), lo, hi,
                                       seed + 1000);
}

void expect_valid_triangle(const Graph& g, const SubgraphResult& r) {
  ASSERT_EQ(r.vertices.size(), 3u);
  EXPECT_TRUE(is_clique(g, r.vertices));
  EXPECT_EQ(r.weight, vertex_set_weight(g, r.vertices));
}

}  // namespace

TEST(AllPairsClique, Examples) {
  const Graph k3 = test::make_graph(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 2, 3});
  const AllPairsBest best = all_pairs_max_clique(k3, 3);
  for (Vertex u = 1; u <= 3; ++u) {
    for (Vertex v = 1; v <= 3; ++v) {
      if (u == v) continue;
      ASSERT_TRUE(best.at(u, v));
      EXPECT_EQ(best.at(u, v)->vertices, (Tuple{1, 2, 3}));
      EXPECT_EQ(best.at(u, v)->weight, 6.0);
    }
  }
  const AllPairsBest two = all_pairs_max_clique(test::two_triangles(), 3);
  EXPECT_EQ(two.at(2, 3)->vertices, (Tuple{2, 3, 4}));
  EXPECT_EQ(two.at(2, 3)->weight, 9.0);
  EXPECT_EQ(two.at(1, 2)->vertices, (Tuple{1, 2, 3}));
  EXPECT_EQ(two.at(1, 2)->weight, 6.0);
  EXPECT_FALSE(two.at(1, 4));
  EXPECT_THROW(all_pairs_max_clique(Graph(3, {{1, 2}}), 3), std::invalid_argument);
}

TEST(AllPairsClique, RandomAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    for (int h : {3, 4, 5}) {
      const Graph g = weighted_random(12, 0.5 + 0.03 * h, seed * 7 + h, -20, 50);
      const AllPairsBest got = all_pairs_max_clique(g, h);
      const AllPairsBest want = oracle::all_pairs(g, h);
      for (Vertex u = 1; u <= g.n(); ++u) {
        for (Vertex v = 1; v <= g.n(); ++v) {
          if (u == v) continue;
          ASSERT_TRUE(test::same_weight(got.at(u, v), want.at(u, v))) << "seed=" << seed << " h=" << h;
          if (!got.at(u, v)) continue;
          const auto& vs = got.at(u, v)->vertices;
          EXPECT_TRUE(std::find(vs.begin(), vs.end(), u) != vs.end());
          EXPECT_TRUE(std::find(vs.begin(), vs.end(), v) != vs.end());
          EXPECT_EQ(vs.size(), static_cast<std::size_t>(h));
          EXPECT_TRUE(is_clique(g, vs));
          EXPECT_EQ(got.at(u, v)->weight, vertex_set_weight(g, vs));
        }
      }
    }
  }
}

TEST(AllPairsClique, IndependentOfSplit) {
  const Graph g = weighted_random(11, 0.7, 5);
  const AllPairsBest base = all_pairs_max_clique(g, 5);
  for (double omega : {2.0, 2.376, 3.0}) {
    const AllPairsBest other = all_pairs_max_clique(g, 5, plan_parameters(omega, 5));
    for (Vertex u = 1; u <= g.n(); ++u) {
      for (Vertex v = 1; v <= g.n(); ++v) {
        if (u != v) EXPECT_EQ(other.at(u, v).has_value(), base.at(u, v).has_value());
        if (u != v && base.at(u, v)) EXPECT_EQ(other.at(u, v)->vertices, base.at(u, v)->vertices);
      }
    }
  }
}

TEST(AllPairsPattern, Examples) {
  const Graph g = weighted_random(10, 0.5, 8);
  const AllPairsBest a = all_pairs_max_pattern(g, Pattern::clique(3));
  const AllPairsBest b = all_pairs_max_clique(g, 3);
  for (Vertex u = 1; u <= g.n(); ++u) {
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (u != v) EXPECT_TRUE(test::same_weight(a.at(u, v), b.at(u, v)));
    }
  }
  const Graph k3 = test::make_graph(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 2, 3});
  EXPECT_FALSE(all_pairs_max_pattern(k3, Pattern::path(3)).overall());
}

TEST(AllPairsPattern, RandomAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = weighted_random(10, 0.4, 40 + seed, -10, 30);
    for (const Pattern& p : {Pattern::cycle(4), Pattern::path(3), Pattern::path(4)}) {
      const AllPairsBest got = all_pairs_max_pattern(g, p);
      const AllPairsBest want = oracle::all_pairs_pattern(g, p);
      for (Vertex u = 1; u <= g.n(); ++u) {
        for (Vertex v = 1; v <= g.n(); ++v) {
          if (u == v) continue;
          ASSERT_TRUE(test::same_weight(got.at(u, v), want.at(u, v))) << seed;
          if (got.at(u, v)) EXPECT_EQ(got.at(u, v)->weight, vertex_set_weight(g, got.at(u, v)->vertices));
        }
      }
    }
  }
}

TEST(ThresholdEdge, Examples) {
  const Graph k3 = test::make_graph(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 2, 3});
  EXPECT_TRUE(triangle_threshold_edge(k3, 6.0));
  EXPECT_FALSE(triangle_threshold_edge(k3, 6.5));
  EXPECT_FALSE(triangle_threshold_edge(k3, 6.0, true));
}

TEST(ThresholdEdge, SweepAgainstEnumeration) {
  const Graph g = weighted_random(20, 0.5, 77);
  const auto tris = triangles(g);
  for (const auto& t : tris) {
    for (double eps : {-0.5, 0.0, 0.5}) {
      const double k = t.w + eps;
      const bool want = std::any_of(tris.begin(), tris.end(), [&](const Tri& x) { return x.w >= k; });
      const auto e = triangle_threshold_edge(g, k);
      ASSERT_EQ(e.has_value(), want) << k;
      if (e) {
        bool ok = false;
        for (const auto& x : tris) {
          const bool has_u = std::count(x.t.begin(), x.t.end(), e->u), has_v = std::count(x.t.begin(), x.t.end(), e->v);
          ok |= has_u && has_v && x.w >= k;
        }
        EXPECT_TRUE(ok);
      }
    }
  }
}

TEST(HeaviestTriangle, Examples) {
  const Graph k3 = test::make_graph(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 2, 3});
  const Graph star = test::make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}, {1, 2, 3, 4, 5});
  const Graph path = test::make_graph(4, {{1, 2}, {2, 3}, {3, 4}}, {1, 1, 1, 1});
  const Graph disjoint = test::make_graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}, {1, 1, 1, 2, 2, 2});
  EXPECT_EQ(heaviest_triangle_det(k3)->weight, 6.0);
  EXPECT_EQ(heaviest_triangle_rand(k3, 1)->weight, 6.0);
  EXPECT_EQ(heaviest_triangle_sparse(k3)->weight, 6.0);
  EXPECT_FALSE(heaviest_triangle_det(star));
  EXPECT_FALSE(heaviest_triangle_rand(star, 1));
  EXPECT_FALSE(heaviest_triangle_sparse(path));
  EXPECT_EQ(heaviest_triangle_sparse(disjoint)->weight, 6.0);
  EXPECT_EQ(heaviest_triangle_det(disjoint)->vertices, (Tuple{4, 5, 6}));
}

TEST(HeaviestTriangle, AllRoutinesAgree) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = weighted_random(24, 0.4, 300 + seed, seed % 2 ? -50 : 1, 100);
    const auto want = oracle::max_clique(g, 3);
    const auto det = heaviest_triangle_det(g);
    const auto rnd = heaviest_triangle_rand(g, seed);
    const auto sp = heaviest_triangle_sparse(g);
    const auto ap = all_pairs_max_clique(g, 3).overall();
    for (const auto* r : {&det, &rnd, &sp, &ap}) {
      ASSERT_TRUE(test::same_weight(*r, want)) << seed;
      if (*r) expect_valid_triangle(g, **r);
    }
  }
}

TEST(HeaviestTriangle, RealWeightsAndTies) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = generate_random_graph(18, 0.5, WeightMode::vertex, std::nullopt, 500 + seed);
    if (seed % 3 == 0) g = g.with_vertex_weights(std::vector<double>(g.n(), 0.1));
    const auto want = oracle::max_clique(g, 3);
    EXPECT_TRUE(test::same_weight(heaviest_triangle_det(g), want));
    EXPECT_TRUE(test::same_weight(heaviest_triangle_rand(g, seed), want));
    EXPECT_TRUE(test::same_weight(heaviest_triangle_sparse(g), want));
  }
}

TEST(HeaviestTriangle, SparseGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = weighted_random(64, 8.0 / 64, 900 + seed);
    for (double omega : {2.376, 3.0}) {
      EXPECT_TRUE(test::same_weight(heaviest_triangle_sparse(g, omega), oracle::max_clique(g, 3, 64))) << seed;
    }
  }
}

TEST(HeaviestTriangle, RandIterationCount) {
  double total = 0.0, bound = 0.0;
  int counted = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = weighted_random(24, 0.4, 1300 + seed);
    TriangleStats st;
    const auto r = heaviest_triangle_rand(g, seed, &st);
    ASSERT_TRUE(test::same_weight(r, oracle::max_clique(g, 3)));
    const auto count = oracle::enumerate_cliques(g, 3).size();
    if (count == 0) continue;
    total += static_cast<double>(st.iterations);
    bound += 2 * std::log(static_cast<double>(count)) + 4;
    ++counted;
  }
  ASSERT_GT(counted, 0);
  EXPECT_LE(total / counted, bound / counted);
}

TEST(Sampling, Examples) {
  const Graph g = test::two_triangles();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = sample_triangle(g, 7, 10, seed);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->vertices, (Tuple{2, 3, 4}));
  }
  EXPECT_FALSE(sample_triangle(g, 10, 20, 1));
  EXPECT_THROW(sample_triangle(g, 2, 1, 1), std::invalid_argument);
}

TEST(Sampling, WindowCountsMatchEnumeration) {
  const Graph g = weighted_random(16, 0.5, 61, 0, 20);
  for (double w1 : {-inf, 10.0, 25.0}) {
    for (double w2 : {25.0, 40.0, inf}) {
      if (w1 > w2) continue;
      const CountMatrix f = triangle_window_counts(g, w1, w2);
      for (const auto& e : g.edges()) {
        std::uint32_t want = 0;
        for (Vertex k = 1; k <= g.n(); ++k) {
          if (k == e.u || k == e.v || !g.adjacent(k, e.u) || !g.adjacent(k, e.v)) continue;
          const double w = g.vertex_weight(e.u) + g.vertex_weight(e.v) + g.vertex_weight(k);
          want += w >= w1 && w <= w2;
        }
        ASSERT_EQ(f(e.u - 1, e.v - 1), want);
      }
    }
  }
}

TEST(Sampling, UniformOverK6) {
  const Graph k6 = test::complete(6).with_vertex_weights({1, 2, 4, 8, 16, 32});
  std::map<Tuple, int> freq;
  Rng rng(2024);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) ++freq[sample_triangle(k6, -inf, inf, rng)->vertices];
  ASSERT_EQ(freq.size(), 20u);
  double chi2 = 0.0;
  const double expected = draws / 20.0;
  for (const auto& [t, c] : freq) chi2 += (c - expected) * (c - expected) / expected;
  // Upper 0.001 point of chi-square with 19 degrees of freedom.
  EXPECT_LT(chi2, 43.820);
}

TEST(Sampling, StaysInWindow) {
  const Graph g = weighted_random(14, 0.6, 71, 0, 30);
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const double lo = static_cast<double>(rng.below(60)), hi = lo + static_cast<double>(rng.below(30));
    const auto r = sample_triangle(g, lo, hi, rng);
    const auto tris = triangles(g);
    const bool any = std::any_of(tris.begin(), tris.end(), [&](const Tri& t) { return t.w >= lo && t.w <= hi; });
    ASSERT_EQ(r.has_value(), any);
    if (r) {
      expect_valid_triangle(g, *r);
      EXPECT_GE(r->weight, lo);
      EXPECT_LE(r->weight, hi);
    }
  }
}

TEST(Monotone, MaxComponent) {
  auto fmax = [](double a, double b, double c) { return std::max({a, b, c}); };
  auto fprod = [](double a, double b, double c) { return a * b * c; };
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = weighted_random(16, 0.4, 1700 + seed);
    const auto tris = triangles(g);
    for (const auto& f : {std::function<double(double, double, double)>(fmax),
                          std::function<double(double, double, double)>(fprod)}) {
      const auto r = heaviest_triangle_monotone(g, f);
      ASSERT_EQ(r.has_value(), !tris.empty());
      if (!r) continue;
      double want = -inf;
      for (const auto& t : tris) {
        want = std::max(want, f(g.vertex_weight(t.t[0]), g.vertex_weight(t.t[1]), g.vertex_weight(t.t[2])));
      }
      EXPECT_TRUE(is_clique(g, r->vertices));
      EXPECT_EQ(r->weight, want);
    }
  }
}

TEST(K2k, Examples) {
  const Graph k23 = test::make_graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}, {1, 1, 1, 1, 1});
  EXPECT_EQ(heaviest_k2k(k23, 3)->weight, 5.0);
  const Graph star = test::make_graph(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}, {1, 1, 1, 1, 1, 1});
  EXPECT_FALSE(heaviest_k2k(star, 2));
}

TEST(K2k, RandomAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = weighted_random(14, 0.5, 2100 + seed, -10, 40);
    for (std::size_t k : {1, 2, 3}) {
      const auto got = heaviest_k2k(g, k);
      ASSERT_TRUE(test::same_weight(got, oracle::k2k(g, k))) << seed << " k=" << k;
      if (!got) continue;
      const auto& t = got->vertices;
      for (std::size_t x = 2; x < t.size(); ++x) {
        EXPECT_TRUE(g.adjacent(t[0], t[x]) && g.adjacent(t[1], t[x]));
      }
    }
  }
}

TEST(EdgeCover, Examples) {
  EXPECT_EQ(edge_cover_number(Graph(3, {{1, 2}, {1, 3}, {2, 3}}), 3), 3u);
  EXPECT_EQ(edge_cover_number(test::cycle_graph(6), 3), 0u);
  EXPECT_THROW(edge_cover_number(Graph(3, std::vector<Edge>{}), 2), std::invalid_argument);
}

TEST(EdgeCover, RandomAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = generate_random_graph(14, 0.5, WeightMode::none, std::nullopt, 2500 + seed);
    for (int k : {3, 4}) EXPECT_EQ(edge_cover_number(g, k), oracle::edge_cover_number(g, k)) << seed;
  }
}
