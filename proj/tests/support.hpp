#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "hsub/hsub.hpp"

namespace hsub::test {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
                        std::vector<double> vertex_weights = {}) {
  Graph g(n, edges);
  if (!vertex_weights.empty()) g = g.with_vertex_weights(std::move(vertex_weights));
  return g;
}

// Vertices 1..4, triangles {1,2,3} and {2,3,4}, weights 1..4.
inline Graph two_triangles() {
  return make_graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}, {1, 2, 3, 4});
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) es.push_back({u, v});
  }
  return Graph(n, es);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v, v + 1});
  es.push_back({1, static_cast<Vertex>(n)});
  return Graph(n, es);
}

// Random integer weights in [lo, hi] on vertices and/or edges.
inline Graph with_int_vertex_weights(const Graph& g, int lo, int hi, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> w(g.n());
  for (auto& x : w) x = lo + static_cast<double>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  return g.with_vertex_weights(std::move(w));
}

inline Graph with_int_edge_weights(const Graph& g, int lo, int hi, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> w(g.m());
  for (auto& x : w) x = lo + static_cast<double>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  return g.with_edge_weights(std::move(w));
}

inline double weight_or_nan(const std::optional<SubgraphResult>& r) {
  return r ? r->weight : std::numeric_limits<double>::quiet_NaN();
}

inline bool same_weight(const std::optional<SubgraphResult>& a, const std::optional<SubgraphResult>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || a->weight == b->weight;
}

inline BoolMatrix random_bool(std::size_t r, std::size_t c, double density, Rng& rng) {
  return bench::random_bool(r, c, density, rng);
}

inline ExtMatrix random_int_matrix(std::size_t r, std::size_t c, int hi, double inf_rate, Rng& rng) {
  ExtMatrix m(r, c);
  for (auto& x : m.data()) {
    x = rng.bernoulli(inf_rate) ? inf : static_cast<double>(rng.below(static_cast<std::uint64_t>(hi + 1)));
  }
  return m;
}

}  // namespace hsub::test
