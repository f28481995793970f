#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hsub/extmat.hpp"
#include "hsub/graph.hpp"
#include "hsub/rng.hpp"
#include "hsub/vertexmax.hpp"

namespace hsub {

struct ColorTrialPlan {
  int k = 3;
  std::size_t trials = 0;  // 0: derive from failure_bound
  double failure_bound = 0.01;
  std::uint64_t seed = 1;

  /// ceil(e^k ln(1/delta)): a fixed k-set is colorful with probability
  /// k!/k^k > e^-k per trial.
  std::size_t effective_trials() const {
    if (trials) return trials;
    if (!(failure_bound > 0.0 && failure_bound < 1.0)) {
      throw std::invalid_argument("color trials: failure bound must lie in (0, 1)");
    }
    return static_cast<std::size_t>(std::ceil(std::exp(static_cast<double>(k)) * std::log(1.0 / failure_bound)));
  }
};

namespace detail {

inline void require_edge_weights(const Graph& g, const char* op) {
  if (!g.has_edge_weights()) throw std::invalid_argument(std::string(op) + ": edge weights required");
}

inline SubgraphResult make_cycle(const Graph& g, Tuple cycle) {
  cycle = canonical_cycle(std::move(cycle));
  if (!is_simple_cycle(g, cycle)) throw std::logic_error("k-cycle: produced an invalid cycle");
  const double w = cycle_weight(g, cycle);
  return {std::move(cycle), w, SubgraphKind::cycle};
}

inline void keep_better(std::optional<SubgraphResult>& best, std::optional<SubgraphResult> r) {
  if (r && (!best || better_result(*r, *best))) best = std::move(r);
}

/// Layered DP for the heaviest colorful k-cycle through u, skipping dead
/// vertices.  Layer j holds vertices of color pi(j) reached by a colorful
/// path u = x_1, ..., x_j.
inline std::optional<SubgraphResult> colorful_cycle_through(const Graph& g, const VertexColoring& col,
                                                            Vertex u, const std::vector<char>& alive) {
  const int k = col.k;
  const std::size_t n = g.n();
  std::vector<int> rest;
  for (int c = 1; c <= k; ++c) {
    if (c != col.of(u)) rest.push_back(c);
  }
  std::vector<std::vector<double>> val(static_cast<std::size_t>(k), std::vector<double>(n + 1, -inf));
  std::vector<std::vector<Vertex>> pred(static_cast<std::size_t>(k), std::vector<Vertex>(n + 1, 0));
  std::vector<std::vector<Vertex>> layer(static_cast<std::size_t>(k));

  std::optional<SubgraphResult> best;
  double best_v = -inf;
  Tuple best_cycle;
  do {
    layer[0] = {u};
    val[0][u] = 0.0;
    for (int j = 1; j < k; ++j) {
      const int c = rest[static_cast<std::size_t>(j - 1)];
      auto& cur = layer[static_cast<std::size_t>(j)];
      auto& cv = val[static_cast<std::size_t>(j)];
      auto& cp = pred[static_cast<std::size_t>(j)];
      for (Vertex x : layer[static_cast<std::size_t>(j - 1)]) {
        const double base = val[static_cast<std::size_t>(j - 1)][x];
        auto nb = g.neighbors(x);
        auto ids = g.incident(x);
        for (std::size_t t = 0; t < nb.size(); ++t) {
          const Vertex y = nb[t];
          if (!alive[y] || col.of(y) != c) continue;
          const double cand = base + g.edge_weight(ids[t]);
          if (cv[y] == -inf) cur.push_back(y);
          if (cand > cv[y]) {
            cv[y] = cand;
            cp[y] = x;
          }
        }
      }
    }
    for (Vertex y : layer[static_cast<std::size_t>(k - 1)]) {
      if (!g.adjacent(y, u)) continue;
      const double total = val[static_cast<std::size_t>(k - 1)][y] + g.edge_weight(y, u);
      if (total > best_v) {
        best_v = total;
        best_cycle.assign(static_cast<std::size_t>(k), 0);
        Vertex x = y;
        for (int j = k - 1; j >= 0; --j) {
          best_cycle[static_cast<std::size_t>(j)] = x;
          x = pred[static_cast<std::size_t>(j)][x];
        }
      }
    }
    for (int j = 0; j < k; ++j) {
      for (Vertex y : layer[static_cast<std::size_t>(j)]) val[static_cast<std::size_t>(j)][y] = -inf;
      layer[static_cast<std::size_t>(j)].clear();
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  if (best_cycle.empty()) return std::nullopt;
  return make_cycle(g, best_cycle);
}

inline void check_cycle_args(const Graph& g, int k, const char* op) {
  require_edge_weights(g, op);
  if (k < 3) throw std::invalid_argument(std::string(op) + ": k must be at least 3");
}

}  // namespace detail

/// Heaviest cycle on k = coloring.k vertices through u whose vertices carry
/// distinct colors.
inline std::optional<SubgraphResult> colorful_cycle_through(const Graph& g, const VertexColoring& coloring,
                                                            Vertex u) {
  detail::check_cycle_args(g, coloring.k, "colorful_cycle_through");
  coloring.validate(g.n());
  return detail::colorful_cycle_through(g, coloring, u, std::vector<char>(g.n() + 1, 1));
}

namespace detail {

// Heaviest colorful k-cycle under one coloring, sparse strategy.
inline std::optional<SubgraphResult> sparse_cycle_trial(const Graph& g, const VertexColoring& col) {
  const int k = col.k;
  const std::size_t n = g.n();
  std::optional<SubgraphResult> best;
  std::vector<char> alive(n + 1, 1);
  alive[0] = 0;
  const double delta = std::pow(static_cast<double>(g.m()), 2.0 / k);
  for (Vertex v = 1; v <= n; ++v) {
    if (static_cast<double>(g.degree(v)) >= delta) {
      keep_better(best, colorful_cycle_through(g, col, v, alive));
      alive[v] = 0;
    }
  }

  // Remaining cycles avoid the removed vertices.  Split each at its color-1
  // vertex x and at the vertex y in position L1+1: x..y has L1 edges, y..x
  // the remaining k - L1.
  const int l1 = (k + 1) / 2;
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) perm[static_cast<std::size_t>(c)] = c + 1;
  using Key = std::uint64_t;
  auto key = [n](Vertex x, Vertex y) { return static_cast<Key>(x) * (n + 1) + y; };
  struct Half {
    double w;
    Tuple path;
  };
  do {
    // colors along x .. y, then along y .. x (closing on color 1).
    std::vector<int> c1(perm.begin(), perm.begin() + l1 + 1);
    std::vector<int> c2(perm.begin() + l1, perm.end());
    c2.push_back(perm[0]);

    auto enumerate = [&](const std::vector<int>& colors, auto&& sink) {
      Tuple path;
      auto dfs = [&](auto&& self, Vertex x, double w) -> void {
        if (path.size() == colors.size()) {
          sink(path, w);
          return;
        }
        const int c = colors[path.size()];
        auto nb = g.neighbors(x);
        auto ids = g.incident(x);
        for (std::size_t t = 0; t < nb.size(); ++t) {
          const Vertex y = nb[t];
          if (!alive[y] || col.of(y) != c) continue;
          path.push_back(y);
          self(self, y, w + g.edge_weight(ids[t]));
          path.pop_back();
        }
      };
      for (Vertex x = 1; x <= n; ++x) {
        if (!alive[x] || col.of(x) != colors[0]) continue;
        path.assign(1, x);
        dfs(dfs, x, 0.0);
      }
    };

    std::unordered_map<Key, Half> first;
    enumerate(c1, [&](const Tuple& p, double w) {
      auto [it, fresh] = first.try_emplace(key(p.front(), p.back()), Half{w, p});
      if (!fresh && w > it->second.w) it->second = Half{w, p};
    });
    if (first.empty()) continue;
    std::unordered_map<Key, Half> second;
    enumerate(c2, [&](const Tuple& p, double w) {
      if (!first.count(key(p.back(), p.front()))) return;
      auto [it, fresh] = second.try_emplace(key(p.back(), p.front()), Half{w, p});
      if (!fresh && w > it->second.w) it->second = Half{w, p};
    });
    const Half* bf = nullptr;
    const Half* bs = nullptr;
    double bv = -inf;
    for (const auto& [kk, h2] : second) {
      const Half& h1 = first.at(kk);
      const double v = h1.w + h2.w;
      if (!bf || v > bv || (v == bv && h1.path < bf->path)) {
        bv = v;
        bf = &h1;
        bs = &h2;
      }
    }
    if (bf) {
      Tuple cycle = bf->path;
      cycle.insert(cycle.end(), bs->path.begin() + 1, bs->path.end() - 1);
      keep_better(best, make_cycle(g, cycle));
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

}  // namespace detail

/// Heaviest simple k-cycle by color coding with the degree split at
/// Delta = m^(2/k).  Any returned cycle is valid; the optimum is found with
/// probability at least 1 - delta.
inline std::optional<SubgraphResult> heaviest_k_cycle_sparse(const Graph& g, int k, const ColorTrialPlan& plan) {
  detail::check_cycle_args(g, k, "heaviest_k_cycle_sparse");
  ColorTrialPlan p = plan;
  p.k = k;
  std::optional<SubgraphResult> best;
  if (g.n() < static_cast<std::size_t>(k)) return best;
  const std::size_t trials = p.effective_trials();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(p.seed, t));
    const VertexColoring col = random_coloring(g.n(), k, rng);
    detail::keep_better(best, detail::sparse_cycle_trial(g, col));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Recursive color-split paths.

/// Heaviest colorful path on k vertices between every vertex pair.
class PathTable {
 public:
  std::size_t k() const { return k_; }
  std::size_t n() const { return g_.n(); }

  /// Best path value from u to v, -inf when there is none.
  double value(Vertex u, Vertex v) const {
    const Block& b = *memo_[full_mask()];
    return std::max(b.d(b.pos[u], b.pos[v]), b.d(b.pos[v], b.pos[u]));
  }

  /// Vertices of the best path from u to v.
  std::optional<Tuple> path(Vertex u, Vertex v) const {
    const Block& b = *memo_[full_mask()];
    const double uv = b.d(b.pos[u], b.pos[v]);
    const double vu = b.d(b.pos[v], b.pos[u]);
    if (std::max(uv, vu) == -inf) return std::nullopt;
    const bool forward = uv > vu || (uv == vu && u <= v);
    Tuple out;
    if (forward) {
      reconstruct(full_mask(), u, v, out);
    } else {
      reconstruct(full_mask(), v, u, out);
      std::reverse(out.begin(), out.end());
    }
    return out;
  }

  /// Edge weight of path(u, v), summed in canonical order.
  std::optional<double> weight(Vertex u, Vertex v) const {
    auto p = path(u, v);
    if (!p) return std::nullopt;
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < p->size(); ++i) es.push_back(make_edge((*p)[i], (*p)[i + 1]));
    return edge_list_weight(g_, es);
  }

  PathTable(const Graph& g, const VertexColoring& col, std::size_t k)
      : g_(g), col_(col), k_(k), memo_(std::size_t{1} << col.k) {
    compute(full_mask());
  }

 private:
  struct Block {
    std::vector<Vertex> verts;
    std::vector<std::size_t> pos;  // vertex -> row, SIZE_MAX if absent
    ExtMatrix d;
  };

  std::uint32_t full_mask() const { return static_cast<std::uint32_t>((std::size_t{1} << col_.k) - 1); }

  bool in_mask(std::uint32_t mask, Vertex v) const { return (mask >> (col_.of(v) - 1)) & 1u; }

  std::vector<std::uint32_t> splits(std::uint32_t mask) const {
    const int s = std::popcount(mask);
    const int first = (s + 1) / 2;
    std::vector<std::uint32_t> out;
    for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
      if (std::popcount(sub) == first) out.push_back(sub);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ExtMatrix bridge(const Block& x, const Block& y) const {
    ExtMatrix b(x.verts.size(), y.verts.size(), -inf);
    for (std::size_t i = 0; i < x.verts.size(); ++i) {
      auto nb = g_.neighbors(x.verts[i]);
      auto ids = g_.incident(x.verts[i]);
      for (std::size_t t = 0; t < nb.size(); ++t) {
        const std::size_t j = y.pos[nb[t]];
        if (j != SIZE_MAX) b(i, j) = g_.edge_weight(ids[t]);
      }
    }
    return b;
  }

  const Block& compute(std::uint32_t mask) {
    if (memo_[mask]) return *memo_[mask];
    Block blk;
    blk.pos.assign(g_.n() + 1, SIZE_MAX);
    for (Vertex v = 1; v <= g_.n(); ++v) {
      if (in_mask(mask, v)) {
        blk.pos[v] = blk.verts.size();
        blk.verts.push_back(v);
      }
    }
    const std::size_t m = blk.verts.size();
    blk.d = ExtMatrix(m, m, -inf);
    const int s = std::popcount(mask);
    if (s == 1) {
      for (std::size_t i = 0; i < m; ++i) blk.d(i, i) = 0.0;
    } else if (s == 2) {
      for (std::size_t i = 0; i < m; ++i) {
        auto nb = g_.neighbors(blk.verts[i]);
        auto ids = g_.incident(blk.verts[i]);
        for (std::size_t t = 0; t < nb.size(); ++t) {
          const std::size_t j = blk.pos[nb[t]];
          if (j != SIZE_MAX && col_.of(nb[t]) != col_.of(blk.verts[i])) blk.d(i, j) = g_.edge_weight(ids[t]);
        }
      }
    } else {
      for (std::uint32_t c1 : splits(mask)) {
        const Block& x = compute(c1);
        const Block& y = compute(mask ^ c1);
        const ExtMatrix r = max_plus_product(max_plus_product(x.d, bridge(x, y)), y.d);
        for (std::size_t i = 0; i < x.verts.size(); ++i) {
          for (std::size_t j = 0; j < y.verts.size(); ++j) {
            double& slot = blk.d(blk.pos[x.verts[i]], blk.pos[y.verts[j]]);
            slot = std::max(slot, r(i, j));
          }
        }
      }
    }
    memo_[mask] = std::move(blk);
    return *memo_[mask];
  }

  // Re-evaluates the products for one entry to find the split and the
  // bridging edge that produced it.
  void reconstruct(std::uint32_t mask, Vertex u, Vertex v, Tuple& out) const {
    const Block& blk = *memo_[mask];
    const double target = blk.d(blk.pos[u], blk.pos[v]);
    const int s = std::popcount(mask);
    if (s == 1) {
      out.push_back(u);
      return;
    }
    if (s == 2) {
      out.push_back(u);
      out.push_back(v);
      return;
    }
    for (std::uint32_t c1 : splits(mask)) {
      const Block& x = *memo_[c1];
      const Block& y = *memo_[mask ^ c1];
      if (x.pos[u] == SIZE_MAX || y.pos[v] == SIZE_MAX) continue;
      const std::size_t i = x.pos[u];
      for (std::size_t j = 0; j < y.verts.size(); ++j) {
        const Vertex z = y.verts[j];
        double t = -inf;
        Vertex arg = 0;
        auto nb = g_.neighbors(z);
        auto ids = g_.incident(z);
        for (std::size_t q = 0; q < x.verts.size(); ++q) {
          // Same summation as the product kernel: D1[u,y1] + w(y1,z).
          const Vertex y1 = x.verts[q];
          auto it = std::find(nb.begin(), nb.end(), y1);
          if (it == nb.end()) continue;
          const double sum = detail::max_plus_add(x.d(i, q), g_.edge_weight(ids[static_cast<std::size_t>(it - nb.begin())]));
          if (sum > t) {
            t = sum;
            arg = y1;
          }
        }
        if (t == -inf) continue;
        const double total = detail::max_plus_add(t, y.d(j, y.pos[v]));
        if (total == target) {
          reconstruct(c1, u, arg, out);
          reconstruct(mask ^ c1, z, v, out);
          return;
        }
      }
    }
    throw std::logic_error("PathTable: reconstruction failed");
  }

  Graph g_;
  VertexColoring col_;
  std::size_t k_;
  std::vector<std::optional<Block>> memo_;
};

/// Table of heaviest colorful k-vertex paths; the coloring must use k colors.
inline PathTable all_pairs_heaviest_k_path(const Graph& g, const VertexColoring& coloring, std::size_t k) {
  if (k >= 2) detail::require_edge_weights(g, "all_pairs_heaviest_k_path");
  if (k == 0 || static_cast<int>(k) != coloring.k) {
    throw std::invalid_argument("all_pairs_heaviest_k_path: coloring must use exactly k colors");
  }
  if (k > 20) throw std::invalid_argument("all_pairs_heaviest_k_path: k too large");
  coloring.validate(g.n());
  return PathTable(g, coloring, k);
}

/// Heaviest simple k-cycle by color coding with the recursive path table.
inline std::optional<SubgraphResult> heaviest_k_cycle_dense(const Graph& g, int k, const ColorTrialPlan& plan) {
  detail::check_cycle_args(g, k, "heaviest_k_cycle_dense");
  ColorTrialPlan p = plan;
  p.k = k;
  std::optional<SubgraphResult> best;
  if (g.n() < static_cast<std::size_t>(k)) return best;
  const std::size_t trials = p.effective_trials();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(p.seed, t));
    const VertexColoring col = random_coloring(g.n(), k, rng);
    const PathTable table = all_pairs_heaviest_k_path(g, col, static_cast<std::size_t>(k));
    std::optional<Edge> arg;
    double bv = -inf;
    for (EdgeId id = 0; id < g.m(); ++id) {
      const Edge e = g.edge(id);
      const double pv = table.value(e.u, e.v);
      if (pv == -inf) continue;
      const double v = pv + g.edge_weight(id);
      if (v > bv) {
        bv = v;
        arg = e;
      }
    }
    if (arg) detail::keep_better(best, detail::make_cycle(g, *table.path(arg->u, arg->v)));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Distance-product subgraph search.

namespace detail {

inline std::vector<Tuple> all_subsets(std::size_t n, std::size_t size) {
  std::vector<Tuple> out;
  Tuple cur;
  auto rec = [&](auto&& self, Vertex from) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = from; v + (size - cur.size()) <= n + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Sum of edge weights inside `x` and between `x` and `y` (non-edges count 0).
inline double own_and_cross_weight(const Graph& g, const Tuple& x, const Tuple& y) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (g.adjacent(x[i], x[j])) es.push_back(make_edge(x[i], x[j]));
    }
    for (Vertex v : y) {
      if (g.adjacent(x[i], v)) es.push_back(make_edge(x[i], v));
    }
  }
  return es.empty() ? 0.0 : edge_list_weight(g, es);
}

inline double cross_weight(const Graph& g, const Tuple& x, const Tuple& y) {
  std::vector<Edge> es;
  for (Vertex u : x) {
    for (Vertex v : y) {
      if (g.adjacent(u, v)) es.push_back(make_edge(u, v));
    }
  }
  return es.empty() ? 0.0 : edge_list_weight(g, es);
}

// A[U,U''] = w(U) + w(U'') + w(U,U''); B[U'',U'] = w(U') + w(U'',U');
// C = A max-plus B; the answer is max over (U,U') of C + w(U,U').
inline std::optional<SubgraphResult> split_max_plus(const Graph& g, const std::vector<Tuple>& sa,
                                                    const std::vector<Tuple>& sb, const std::vector<Tuple>& sc,
                                                    bool clique, SubgraphKind kind) {
  if (sa.empty() || sb.empty() || sc.empty()) return std::nullopt;
  auto compatible = [&](const Tuple& x, const Tuple& y) {
    for (Vertex u : x) {
      for (Vertex v : y) {
        if (u == v || (clique && !g.adjacent(u, v))) return false;
      }
    }
    return true;
  };
  ExtMatrix a(sa.size(), sb.size(), -inf), b(sb.size(), sc.size(), -inf);
  for (std::size_t x = 0; x < sa.size(); ++x) {
    for (std::size_t y = 0; y < sb.size(); ++y) {
      if (!compatible(sa[x], sb[y])) continue;
      Tuple both = sa[x];
      both.insert(both.end(), sb[y].begin(), sb[y].end());
      a(x, y) = induced_edge_weight(g, both);
    }
  }
  for (std::size_t y = 0; y < sb.size(); ++y) {
    for (std::size_t z = 0; z < sc.size(); ++z) {
      if (compatible(sb[y], sc[z])) b(y, z) = own_and_cross_weight(g, sc[z], sb[y]);
    }
  }
  const ExtMatrix c = max_plus_product(a, b);
  double bv = -inf;
  std::size_t bx = 0, bz = 0;
  for (std::size_t x = 0; x < sa.size(); ++x) {
    for (std::size_t z = 0; z < sc.size(); ++z) {
      if (c(x, z) == -inf || !compatible(sa[x], sc[z])) continue;
      const double v = c(x, z) + cross_weight(g, sa[x], sc[z]);
      if (v > bv) {
        bv = v;
        bx = x;
        bz = z;
      }
    }
  }
  if (bv == -inf) return std::nullopt;
  for (std::size_t y = 0; y < sb.size(); ++y) {
    if (max_plus_add(a(bx, y), b(y, bz)) != c(bx, bz)) continue;
    Tuple all = sa[bx];
    all.insert(all.end(), sb[y].begin(), sb[y].end());
    all.insert(all.end(), sc[bz].begin(), sc[bz].end());
    std::sort(all.begin(), all.end());
    return SubgraphResult{all, induced_edge_weight(g, all), kind};
  }
  throw std::logic_error("split_max_plus: middle part not recovered");
}

}  // namespace detail

struct Split {
  int a = 1, b = 1, c = 1;
};

/// Heaviest K_h by total edge weight, via one max-plus product over the
/// parts of sizes (a, b, c).
inline std::optional<SubgraphResult> heaviest_subgraph_distance_product(const Graph& g, int h, Split split) {
  detail::require_edge_weights(g, "heaviest_subgraph_distance_product");
  if (h < 3 || split.a < 1 || split.b < 1 || split.c < 1 || split.a + split.b + split.c != h) {
    throw std::invalid_argument("heaviest_subgraph_distance_product: split must be positive and sum to h");
  }
  const auto sa = detail::clique_subsets(g, static_cast<std::size_t>(split.a));
  const auto sb = detail::clique_subsets(g, static_cast<std::size_t>(split.b));
  const auto sc = split.c == split.a ? sa : detail::clique_subsets(g, static_cast<std::size_t>(split.c));
  return detail::split_max_plus(g, sa, sb, sc, true, h == 3 ? SubgraphKind::triangle : SubgraphKind::clique);
}

inline Split default_split(int h) {
  const int a = h / 3;
  return {a, h - 2 * a, a};
}

/// k-set of maximum total induced edge weight.  A graph without edge weights
/// counts every edge as 1.
inline SubgraphResult densest_k_subgraph(const Graph& graph, int k) {
  if (k < 2) throw std::invalid_argument("densest_k_subgraph: k must be at least 2");
  if (static_cast<std::size_t>(k) > graph.n()) throw std::invalid_argument("densest_k_subgraph: k exceeds n");
  const Graph g = graph.has_edge_weights() ? graph : graph.with_edge_weights(std::vector<double>(graph.m(), 1.0));
  if (k == 2) {
    SubgraphResult best{{1, 2}, g.adjacent(1, 2) ? g.edge_weight(1, 2) : 0.0, SubgraphKind::pattern};
    for (EdgeId id = 0; id < g.m(); ++id) {
      SubgraphResult r{{g.edge(id).u, g.edge(id).v}, g.edge_weight(id), SubgraphKind::pattern};
      if (better_result(r, best)) best = r;
    }
    return best;
  }
  const Split s = default_split(k);
  const auto sa = detail::all_subsets(g.n(), static_cast<std::size_t>(s.a));
  const auto sb = detail::all_subsets(g.n(), static_cast<std::size_t>(s.b));
  return *detail::split_max_plus(g, sa, sb, sa, false, SubgraphKind::pattern);
}

}  // namespace hsub
