#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsub/dominance.hpp"
#include "hsub/exact_sum.hpp"
#include "hsub/extmat.hpp"
#include "hsub/graph.hpp"
#include "hsub/market.hpp"
#include "hsub/vertexmax.hpp"

// Exhaustive reference implementations.  Every routine here follows the
// definition it checks directly and shares no code path with the fast
// algorithms beyond the graph container and the canonical weight helpers.

namespace hsub::oracle {

constexpr std::size_t default_cap = 32;

inline void check_cap(std::size_t n, std::size_t cap, const char* op) {
  if (n > cap) {
    throw std::length_error(std::string(op) + ": n = " + std::to_string(n) + " exceeds oracle cap " +
                            std::to_string(cap));
  }
}

/// All vertex sets of size h inducing a clique, ascending.
inline std::vector<Tuple> enumerate_cliques(const Graph& g, std::size_t h, std::size_t cap = default_cap) {
  check_cap(g.n(), cap, "enumerate_cliques");
  std::vector<Tuple> out;
  Tuple cur;
  auto rec = [&](auto&& self, Vertex from) -> void {
    if (cur.size() == h) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = from; v <= g.n(); ++v) {
      bool ok = true;
      for (Vertex u : cur) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// All ordered tuples of distinct vertices whose induced adjacency equals
/// the pattern's, label by label.
inline std::vector<Tuple> enumerate_pattern(const Graph& g, const Pattern& p, std::size_t cap = default_cap) {
  check_cap(g.n(), cap, "enumerate_pattern");
  std::vector<Tuple> out;
  Tuple cur;
  std::vector<char> used(g.n() + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == p.h) {
      for (std::size_t x = 0; x < p.h; ++x) {
        for (std::size_t y = x + 1; y < p.h; ++y) {
          if (g.adjacent(cur[x], cur[y]) != p.adj[x][y]) return;
        }
      }
      out.push_back(cur);
      return;
    }
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
  return out;
}

inline ExactSum exact_edge_weight(const Graph& g, const Tuple& vs) {
  ExactSum s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (auto id = g.edge_id(vs[i], vs[j])) s += g.edge_weight(*id);
    }
  }
  return s;
}

/// Heaviest K_h by vertex weight (or edge weight when the graph has no
/// vertex weights); ties go to the smallest vertex set.
inline std::optional<SubgraphResult> max_clique(const Graph& g, std::size_t h, std::size_t cap = default_cap) {
  const bool by_vertex = g.has_vertex_weights();
  std::optional<SubgraphResult> best;
  std::optional<ExactSum> best_w;
  for (auto& c : enumerate_cliques(g, h, cap)) {
    const ExactSum w = by_vertex ? exact_vertex_set_weight(g, c) : exact_edge_weight(g, c);
    if (best && !(w > *best_w)) continue;
    const double dw = by_vertex ? vertex_set_weight(g, c) : induced_edge_weight(g, c);
    best = SubgraphResult{c, dw, h == 3 ? SubgraphKind::triangle : SubgraphKind::clique};
    best_w = w;
  }
  return best;
}

/// Heaviest K_h by vertex weight through every vertex pair.
inline AllPairsBest all_pairs(const Graph& g, std::size_t h, std::size_t cap = default_cap) {
  AllPairsBest best(g.n());
  for (auto& c : enumerate_cliques(g, h, cap)) {
    const SubgraphResult r{c, vertex_set_weight(g, c), h == 3 ? SubgraphKind::triangle : SubgraphKind::clique};
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = x + 1; y < c.size(); ++y) best.offer(c[x], c[y], r);
    }
  }
  return best;
}

inline AllPairsBest all_pairs_pattern(const Graph& g, const Pattern& p, std::size_t cap = default_cap) {
  AllPairsBest best(g.n());
  for (auto& t : enumerate_pattern(g, p, cap)) {
    const SubgraphResult r{t, vertex_set_weight(g, t), SubgraphKind::pattern};
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (std::size_t y = x + 1; y < t.size(); ++y) best.offer(t[x], t[y], r);
    }
  }
  return best;
}

inline std::optional<SubgraphResult> max_pattern(const Graph& g, const Pattern& p, std::size_t cap = default_cap) {
  std::optional<SubgraphResult> best;
  for (auto& t : enumerate_pattern(g, p, cap)) {
    SubgraphResult r{t, vertex_set_weight(g, t), SubgraphKind::pattern};
    if (!best || better_result(r, *best)) best = std::move(r);
  }
  return best;
}

/// Heaviest simple k-cycle by edge weight, by DFS from each cycle's smallest
/// vertex.
inline std::optional<SubgraphResult> k_cycle(const Graph& g, std::size_t k, std::size_t cap = default_cap) {
  check_cap(g.n(), cap, "oracle k_cycle");
  if (k < 3) throw std::invalid_argument("oracle k_cycle: k must be at least 3");
  std::optional<SubgraphResult> best;
  Tuple path;
  std::vector<char> on(g.n() + 1, 0);
  auto rec = [&](auto&& self) -> void {
    const Vertex s = path.front(), last = path.back();
    if (path.size() == k) {
      if (!g.adjacent(last, s)) return;
      Tuple c = canonical_cycle(path);
      SubgraphResult r{c, cycle_weight(g, c), SubgraphKind::cycle};
      if (!best || better_result(r, *best)) best = std::move(r);
      return;
    }
    for (Vertex v : g.neighbors(last)) {
      if (v <= s || on[v]) continue;
      on[v] = 1;
      path.push_back(v);
      self(self);
      path.pop_back();
      on[v] = 0;
    }
  };
  for (Vertex s = 1; s <= g.n(); ++s) {
    path = {s};
    on[s] = 1;
    rec(rec);
    on[s] = 0;
  }
  return best;
}

/// Heaviest (not necessarily induced) K_{2,k} by vertex weight, as
/// (i, j, c_1..c_k) with i < j.
inline std::optional<SubgraphResult> k2k(const Graph& g, std::size_t k, std::size_t cap = default_cap) {
  check_cap(g.n(), cap, "oracle k2k");
  std::optional<SubgraphResult> best;
  std::optional<ExactSum> best_w;
  for (Vertex i = 1; i <= g.n(); ++i) {
    for (Vertex j = i + 1; j <= g.n(); ++j) {
      Tuple common;
      for (Vertex c = 1; c <= g.n(); ++c) {
        if (g.adjacent(i, c) && g.adjacent(j, c)) common.push_back(c);
      }
      if (common.size() < k) continue;
      // Every k-subset of the common neighbors.
      Tuple pick;
      auto rec = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() == k) {
          Tuple t{i, j};
          t.insert(t.end(), pick.begin(), pick.end());
          const ExactSum w = exact_vertex_set_weight(g, t);
          if (!best || w > *best_w) {
            best = SubgraphResult{t, vertex_set_weight(g, t), SubgraphKind::pattern};
            best_w = w;
          }
          return;
        }
        for (std::size_t x = from; x < common.size(); ++x) {
          pick.push_back(common[x]);
          self(self, x + 1);
          pick.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
  return best;
}

/// Most edges with at least one endpoint in a single K_k.
inline std::size_t edge_cover_number(const Graph& g, std::size_t k, std::size_t cap = default_cap) {
  std::size_t best = 0;
  for (auto& c : enumerate_cliques(g, k, cap)) {
    std::size_t count = 0;
    for (const auto& e : g.edges()) {
      if (std::find(c.begin(), c.end(), e.u) != c.end() || std::find(c.begin(), c.end(), e.v) != c.end()) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

/// k-set of maximum induced edge weight (edge count when unweighted).
inline SubgraphResult densest(const Graph& g, std::size_t k, std::size_t cap = default_cap) {
  check_cap(g.n(), cap, "oracle densest");
  if (k < 2 || k > g.n()) throw std::invalid_argument("oracle densest: k must lie in [2, n]");
  const Graph w = g.has_edge_weights() ? g : g.with_edge_weights(std::vector<double>(g.m(), 1.0));
  std::optional<SubgraphResult> best;
  std::optional<ExactSum> best_w;
  Tuple pick;
  auto rec = [&](auto&& self, Vertex from) -> void {
    if (pick.size() == k) {
      const ExactSum x = exact_edge_weight(w, pick);
      if (!best || x > *best_w) {
        best = SubgraphResult{pick, induced_edge_weight(w, pick), SubgraphKind::pattern};
        best_w = x;
      }
      return;
    }
    for (Vertex v = from; v <= g.n(); ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return *best;
}

inline std::vector<int> clique_colors(const Graph& g, const Tuple& c) {
  std::vector<int> colors;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) colors.push_back(g.edge_color(*g.edge_id(c[i], c[j])));
  }
  std::sort(colors.begin(), colors.end());
  return colors;
}

inline SubgraphResult colored_result(const Graph& g, const Tuple& c) {
  double w = 0.0;
  if (g.has_edge_weights()) {
    w = induced_edge_weight(g, c);
  } else if (g.has_vertex_weights()) {
    w = vertex_set_weight(g, c);
  }
  return {c, w, c.size() == 3 ? SubgraphKind::triangle : SubgraphKind::clique};
}

/// First K_h (in vertex-set order) whose edge colors are pairwise distinct.
inline std::optional<SubgraphResult> rainbow(const Graph& g, std::size_t h, std::size_t cap = default_cap) {
  for (auto& c : enumerate_cliques(g, h, cap)) {
    const auto colors = clique_colors(g, c);
    if (std::adjacent_find(colors.begin(), colors.end()) == colors.end()) return colored_result(g, c);
  }
  return std::nullopt;
}

/// First K_h (in vertex-set order) whose edges all share one color.
inline std::optional<SubgraphResult> mono(const Graph& g, std::size_t h, std::size_t cap = default_cap) {
  for (auto& c : enumerate_cliques(g, h, cap)) {
    const auto colors = clique_colors(g, c);
    if (colors.empty() || colors.front() == colors.back()) return colored_result(g, c);
  }
  return std::nullopt;
}

/// D[i,j] = #{k : P_i[k] <= Q_j[k]} (strict: <).
template <class T>
CountMatrix dominance(const PointSet<T>& p, const PointSet<T>& q, bool strict = false) {
  if (p.cols() != q.cols()) throw DimensionError("oracle dominance: dimensions differ");
  CountMatrix d(p.rows(), q.rows(), 0);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < q.rows(); ++j) {
      for (std::size_t k = 0; k < p.cols(); ++k) {
        if (strict ? p(i, k) < q(j, k) : p(i, k) <= q(j, k)) ++d(i, j);
      }
    }
  }
  return d;
}

inline ExtMatrix weighted_dominance(const PointSet<double>& p, const PointSet<double>& q, const ExtMatrix& values,
                                    bool strict = false) {
  ExtMatrix s(p.rows(), q.rows(), 0.0);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < q.rows(); ++j) {
      for (std::size_t k = 0; k < p.cols(); ++k) {
        if (strict ? p(i, k) < q(j, k) : p(i, k) <= q(j, k)) s(i, j) += values(i, k);
      }
    }
  }
  return s;
}

inline ExtMatrix min_plus(const ExtMatrix& a, const ExtMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("oracle min_plus: inner dimensions differ");
  ExtMatrix c(a.rows(), b.cols(), inf);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const double x = (a(i, k) == inf || b(k, j) == inf) ? inf : a(i, k) + b(k, j);
        c(i, j) = std::min(c(i, j), x);
      }
    }
  }
  return c;
}

inline ExtMatrix max_plus(const ExtMatrix& a, const ExtMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("oracle max_plus: inner dimensions differ");
  ExtMatrix c(a.rows(), b.cols(), -inf);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const double x = (a(i, k) == -inf || b(k, j) == -inf) ? -inf : a(i, k) + b(k, j);
        c(i, j) = std::max(c(i, j), x);
      }
    }
  }
  return c;
}

/// Smallest power of two above max finite A + max finite B.
inline double msb_scale(const ExtMatrix& a, const ExtMatrix& b) {
  double ma = 0.0, mb = 0.0;
  for (double x : a.data()) {
    if (x != inf) ma = std::max(ma, x);
  }
  for (double x : b.data()) {
    if (x != inf) mb = std::max(mb, x);
  }
  double w = 1.0;
  while (w <= ma + mb) w *= 2.0;
  return w;
}

/// Top `bits` bits of each finite product entry at scale W (MSB first);
/// infinite entries are all ones.
inline std::vector<std::vector<std::vector<int>>> msb_bits(const ExtMatrix& product, double scale, std::size_t bits) {
  std::vector<std::vector<std::vector<int>>> out(product.rows(),
                                                 std::vector<std::vector<int>>(product.cols(), std::vector<int>(bits, 1)));
  for (std::size_t i = 0; i < product.rows(); ++i) {
    for (std::size_t j = 0; j < product.cols(); ++j) {
      if (product(i, j) == inf) continue;
      const auto top = static_cast<std::uint64_t>(std::floor(product(i, j) * std::ldexp(1.0, static_cast<int>(bits)) / scale));
      for (std::size_t l = 0; l < bits; ++l) out[i][j][l] = static_cast<int>((top >> (bits - 1 - l)) & 1u);
    }
  }
  return out;
}

/// C, P, R straight from the transaction-set definition, items ascending.
inline TransactionMatrices market(const MarketInstance& inst) {
  inst.validate();
  const std::size_t n = inst.n();
  TransactionMatrices tm{CountMatrix(n, n, 0), ExtMatrix(n, n, 0.0), ExtMatrix(n, n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [l, p] : inst.buyers[i]) {
        auto it = inst.sellers[j].find(l);
        if (it == inst.sellers[j].end() || p < it->second) continue;
        ++tm.count(i, j);
        tm.price(i, j) += p;
        tm.reserve(i, j) += it->second;
      }
    }
  }
  return tm;
}

}  // namespace hsub::oracle
