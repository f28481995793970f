#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hsub/dominance.hpp"
#include "hsub/exact_sum.hpp"
#include "hsub/extmat.hpp"
#include "hsub/graph.hpp"
#include "hsub/rng.hpp"
#include "hsub/witness.hpp"

namespace hsub {

using Tuple = std::vector<Vertex>;

/// Labeled pattern graph on vertices 0..h-1.
struct Pattern {
  std::size_t h = 0;
  std::vector<std::vector<bool>> adj;

  explicit Pattern(std::size_t size = 0) : h(size), adj(size, std::vector<bool>(size, false)) {}

  void add_edge(std::size_t x, std::size_t y) { adj[x][y] = adj[y][x] = true; }
  bool is_clique() const {
    for (std::size_t x = 0; x < h; ++x) {
      for (std::size_t y = x + 1; y < h; ++y) {
        if (!adj[x][y]) return false;
      }
    }
    return true;
  }

  static Pattern from_graph(const Graph& g) {
    Pattern p(g.n());
    for (const auto& e : g.edges()) p.add_edge(e.u - 1, e.v - 1);
    return p;
  }
  static Pattern clique(std::size_t h) {
    Pattern p(h);
    for (std::size_t x = 0; x < h; ++x) {
      for (std::size_t y = x + 1; y < h; ++y) p.add_edge(x, y);
    }
    return p;
  }
  static Pattern path(std::size_t h) {
    Pattern p(h);
    for (std::size_t x = 0; x + 1 < h; ++x) p.add_edge(x, x + 1);
    return p;
  }
  static Pattern cycle(std::size_t h) {
    Pattern p = path(h);
    if (h >= 3) p.add_edge(h - 1, 0);
    return p;
  }

  /// Pattern whose label x is this pattern's label perm[x].
  Pattern relabeled(const std::vector<std::size_t>& perm) const {
    Pattern p(h);
    for (std::size_t x = 0; x < h; ++x) {
      for (std::size_t y = 0; y < h; ++y) p.adj[x][y] = adj[perm[x]][perm[y]];
    }
    return p;
  }
};

/// Best subgraph containing each vertex pair.
class AllPairsBest {
 public:
  explicit AllPairsBest(std::size_t n = 0) : n_(n), table_(n * n) {}

  std::size_t n() const { return n_; }

  const std::optional<SubgraphResult>& at(Vertex u, Vertex v) const {
    return table_[(u - 1) * n_ + (v - 1)];
  }

  /// Keeps r for (u,v) if it beats the stored result.
  void offer(Vertex u, Vertex v, const SubgraphResult& r) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      auto& slot = table_[(x - 1) * n_ + (y - 1)];
      if (!slot || better_result(r, *slot)) slot = r;
    }
  }

  std::optional<SubgraphResult> overall() const {
    std::optional<SubgraphResult> best;
    for (const auto& r : table_) {
      if (r && (!best || better_result(*r, *best))) best = r;
    }
    return best;
  }

 private:
  std::size_t n_;
  std::vector<std::optional<SubgraphResult>> table_;
};

namespace detail {

inline void require_vertex_weights(const Graph& g, const char* op) {
  if (!g.has_vertex_weights()) throw std::invalid_argument(std::string(op) + ": vertex weights required");
}

inline ExactSum tuple_weight(const Graph& g, const Tuple& t) {
  ExactSum s;
  for (Vertex v : t) s += g.vertex_weight(v);
  return s;
}

/// Sorted vertex sets of `size` vertices inducing a clique.
inline std::vector<Tuple> clique_subsets(const Graph& g, std::size_t size) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(Vertex)> extend = [&](Vertex from) {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = from; v <= g.n(); ++v) {
      bool ok = true;
      for (Vertex u : cur) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      cur.push_back(v);
      extend(v + 1);
      cur.pop_back();
    }
  };
  extend(1);
  return out;
}

/// Ordered tuples (x_0..x_{size-1}) of distinct vertices whose induced
/// adjacency matches pattern labels first..first+size-1.
inline std::vector<Tuple> pattern_tuples(const Graph& g, const Pattern& p, std::size_t first,
                                         std::size_t size) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void()> extend = [&]() {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    const std::size_t label = first + cur.size();
    for (Vertex v = 1; v <= g.n(); ++v) {
      bool ok = true;
      for (std::size_t x = 0; x < cur.size() && ok; ++x) {
        ok = cur[x] != v && g.adjacent(cur[x], v) == p.adj[first + x][label];
      }
      if (!ok) continue;
      cur.push_back(v);
      extend();
      cur.pop_back();
    }
  };
  extend();
  return out;
}

/// Sorts by exact weight ascending, ties by descending tuple, so the largest
/// index among equals is the lexicographically smallest tuple.
inline void sort_by_weight(const Graph& g, std::vector<Tuple>& ts) {
  std::vector<std::pair<ExactSum, Tuple>> keyed;
  keyed.reserve(ts.size());
  for (auto& t : ts) keyed.emplace_back(tuple_weight(g, t), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    const auto c = x.first <=> y.first;
    if (c != 0) return c < 0;
    return x.second > y.second;
  });
  for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = std::move(keyed[i].second);
}

inline std::size_t split_width(std::size_t n, double mu, std::size_t sb) {
  const double w = std::ceil(std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), mu));
  return std::clamp<std::size_t>(static_cast<std::size_t>(w), 1, std::max<std::size_t>(sb, 1));
}

/// For every (U, U') in S_a x S_c with cross(0, U, 2, U'), finds the heaviest
/// U'' in S_b with cross(0, U, 1, U'') and cross(1, U'', 2, U') by a maximum
/// witness over the weight-sorted S_b, and reports emit(U, U'', U').
template <class Cross, class Emit>
void split_search(const Graph& g, const std::vector<Tuple>& sa, std::vector<Tuple> sb,
                  const std::vector<Tuple>& sc, double mu, Cross&& cross, Emit&& emit) {
  if (sa.empty() || sb.empty() || sc.empty()) return;
  sort_by_weight(g, sb);
  BoolMatrix a1(sa.size(), sb.size()), a2(sb.size(), sc.size());
  for (std::size_t x = 0; x < sa.size(); ++x) {
    for (std::size_t y = 0; y < sb.size(); ++y) {
      if (cross(0, sa[x], 1, sb[y])) a1.set(x, y);
    }
  }
  for (std::size_t y = 0; y < sb.size(); ++y) {
    for (std::size_t z = 0; z < sc.size(); ++z) {
      if (cross(1, sb[y], 2, sc[z])) a2.set(y, z);
    }
  }
  const WitnessMatrix w = max_witness_product(a1, a2, split_width(g.n(), mu, sb.size()));
  for (std::size_t x = 0; x < sa.size(); ++x) {
    for (std::size_t z = 0; z < sc.size(); ++z) {
      if (w(x, z) == 0 || !cross(0, sa[x], 2, sc[z])) continue;
      emit(sa[x], sb[w(x, z) - 1], sc[z]);
    }
  }
}

inline bool disjoint(const Tuple& x, const Tuple& y) {
  for (Vertex u : x) {
    if (std::find(y.begin(), y.end(), u) != y.end()) return false;
  }
  return true;
}

inline void check_plan(const PlanParameters& plan, int h, int cap, const char* op) {
  if (h < 3 || h > cap) {
    throw std::invalid_argument(std::string(op) + ": h must lie in [3, " + std::to_string(cap) + "]");
  }
  if (plan.a < 1 || plan.b < 1 || plan.c < 1 || plan.a + plan.b + plan.c != h) {
    throw std::invalid_argument(std::string(op) + ": plan split does not match h");
  }
}

}  // namespace detail

constexpr int default_clique_cap = 6;

/// Heaviest K_h through every vertex pair.
inline AllPairsBest all_pairs_max_clique(const Graph& g, int h, const PlanParameters& plan,
                                         int cap = default_clique_cap) {
  detail::require_vertex_weights(g, "all_pairs_max_clique");
  detail::check_plan(plan, h, cap, "all_pairs_max_clique");
  AllPairsBest best(g.n());
  const auto sa = detail::clique_subsets(g, static_cast<std::size_t>(plan.a));
  const auto sb = detail::clique_subsets(g, static_cast<std::size_t>(plan.b));
  const auto sc = plan.c == plan.a ? sa : detail::clique_subsets(g, static_cast<std::size_t>(plan.c));
  auto cross = [&g](int, const Tuple& x, int, const Tuple& y) {
    for (Vertex u : x) {
      for (Vertex v : y) {
        if (u == v || !g.adjacent(u, v)) return false;
      }
    }
    return true;
  };
  detail::split_search(g, sa, sb, sc, plan.mu, cross, [&](const Tuple& u, const Tuple& mid, const Tuple& w) {
    SubgraphResult r;
    r.kind = h == 3 ? SubgraphKind::triangle : SubgraphKind::clique;
    r.vertices = u;
    r.vertices.insert(r.vertices.end(), mid.begin(), mid.end());
    r.vertices.insert(r.vertices.end(), w.begin(), w.end());
    std::sort(r.vertices.begin(), r.vertices.end());
    r.weight = vertex_set_weight(g, r.vertices);
    Tuple outer = u;
    outer.insert(outer.end(), w.begin(), w.end());
    for (std::size_t x = 0; x < outer.size(); ++x) {
      for (std::size_t y = x + 1; y < outer.size(); ++y) best.offer(outer[x], outer[y], r);
    }
  });
  return best;
}

inline AllPairsBest all_pairs_max_clique(const Graph& g, int h) {
  return all_pairs_max_clique(g, h, plan_parameters(3.0, std::max(h, 3)));
}

/// Heaviest induced copy of `pattern` through every vertex pair.  Result
/// tuples list the image of pattern labels 0..h-1 in order.
///
/// One split only reports pairs whose labels fall in the outer parts, so the
/// search is repeated under relabelings until every label pair has been
/// placed in the outer parts once.
inline AllPairsBest all_pairs_max_pattern(const Graph& g, const Pattern& pattern,
                                          const PlanParameters& plan, int cap = default_clique_cap) {
  detail::require_vertex_weights(g, "all_pairs_max_pattern");
  const int h = static_cast<int>(pattern.h);
  detail::check_plan(plan, h, cap, "all_pairs_max_pattern");
  AllPairsBest best(g.n());
  const std::size_t a = static_cast<std::size_t>(plan.a), b = static_cast<std::size_t>(plan.b);
  const std::size_t hh = pattern.h;
  auto outer = [&](std::size_t pos) { return pos < a || pos >= a + b; };

  std::vector<std::vector<bool>> covered(hh, std::vector<bool>(hh, false));
  for (std::size_t p = 0; p < hh; ++p) {
    for (std::size_t q = p + 1; q < hh; ++q) {
      if (covered[p][q]) continue;
      // perm[pos] = original label; p goes first, q last.
      std::vector<std::size_t> perm{p};
      for (std::size_t x = 0; x < hh; ++x) {
        if (x != p && x != q) perm.push_back(x);
      }
      perm.push_back(q);
      for (std::size_t x = 0; x < hh; ++x) {
        for (std::size_t y = 0; y < hh; ++y) {
          if (outer(x) && outer(y)) covered[perm[x]][perm[y]] = true;
        }
      }
      const Pattern hp = pattern.relabeled(perm);
      const std::size_t first[3] = {0, a, a + b};
      const std::size_t size[3] = {a, b, hh - a - b};
      std::vector<Tuple> parts[3];
      for (int i = 0; i < 3; ++i) parts[i] = detail::pattern_tuples(g, hp, first[i], size[i]);
      auto cross = [&](int px, const Tuple& x, int py, const Tuple& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
          for (std::size_t j = 0; j < y.size(); ++j) {
            if (x[i] == y[j]) return false;
            if (g.adjacent(x[i], y[j]) != hp.adj[first[px] + i][first[py] + j]) return false;
          }
        }
        return true;
      };
      detail::split_search(g, parts[0], parts[1], parts[2], plan.mu, cross,
                           [&](const Tuple& u, const Tuple& mid, const Tuple& w) {
                             Tuple image(hh);
                             Tuple all = u;
                             all.insert(all.end(), mid.begin(), mid.end());
                             all.insert(all.end(), w.begin(), w.end());
                             for (std::size_t x = 0; x < hh; ++x) image[perm[x]] = all[x];
                             SubgraphResult r{image, vertex_set_weight(g, image), SubgraphKind::pattern};
                             Tuple out = u;
                             out.insert(out.end(), w.begin(), w.end());
                             for (std::size_t x = 0; x < out.size(); ++x) {
                               for (std::size_t y = x + 1; y < out.size(); ++y) best.offer(out[x], out[y], r);
                             }
                           });
    }
  }
  return best;
}

inline AllPairsBest all_pairs_max_pattern(const Graph& g, const Pattern& pattern) {
  return all_pairs_max_pattern(g, pattern, plan_parameters(3.0, static_cast<int>(std::max<std::size_t>(pattern.h, 3))));
}

// ---------------------------------------------------------------------------
// Triangles.

namespace detail {

inline bool any_triangle_edge(const Graph& g, const CountMatrix& c, Vertex& ei, Vertex& ej) {
  for (const auto& e : g.edges()) {
    if (c(e.u - 1, e.v - 1) > 0) {
      ei = e.u;
      ej = e.v;
      return true;
    }
  }
  return false;
}

/// Common-neighbor counts for every vertex pair.
inline CountMatrix common_neighbor_counts(const Graph& g) {
  const BoolMatrix adj = adjacency_matrix(g);
  return count_product_transposed(adj, adj);
}

/// U[i,j] = #{k : i~k, j~k, w(i)+w(j)+w(k) >= K} (strict: > K).
inline CountMatrix triangle_upper_counts(const Graph& g, const ExactSum& k_value, bool strict) {
  const std::size_t n = g.n();
  if (!strict && k_value.is_infinite() && k_value.infinity_sign() < 0) return common_neighbor_counts(g);
  PointSet<ExactSum> f(n, n, ExactSum::infinity(1)), gg(n, n, ExactSum::infinity(-1));
  for (Vertex i = 1; i <= n; ++i) {
    const ExactSum ki = k_value - g.vertex_weight(i);
    for (Vertex k : g.neighbors(i)) {
      f(i - 1, k - 1) = ki;
      gg(i - 1, k - 1) = ExactSum{g.vertex_weight(i), g.vertex_weight(k)};
    }
  }
  DominanceParams params;
  params.strict = strict;
  return dominance_matrix(f, gg, params);
}

/// E(K) (strict: L(K)) -- #{k : i~k, j~k, w(i)+w(j)+w(k) <= K} (< K).
inline CountMatrix triangle_lower_counts(const Graph& g, const ExactSum& k_value, bool strict) {
  const std::size_t n = g.n();
  if (!strict && k_value.is_infinite() && k_value.infinity_sign() > 0) return common_neighbor_counts(g);
  PointSet<ExactSum> gp(n, n, ExactSum::infinity(1)), fp(n, n, ExactSum::infinity(-1));
  for (Vertex i = 1; i <= n; ++i) {
    const ExactSum ki = k_value - g.vertex_weight(i);
    for (Vertex k : g.neighbors(i)) {
      fp(i - 1, k - 1) = ki;
      gp(i - 1, k - 1) = ExactSum{g.vertex_weight(i), g.vertex_weight(k)};
    }
  }
  DominanceParams params;
  params.strict = strict;
  const CountMatrix d = dominance_matrix(gp, fp, params);  // d[j,i]
  CountMatrix out(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = d(j, i);
  }
  return out;
}

struct Window {
  ExactSum lo = ExactSum::infinity(-1);
  bool lo_closed = true;
  ExactSum hi = ExactSum::infinity(1);
  bool hi_closed = true;

  bool contains(const ExactSum& x) const {
    const auto cl = x <=> lo;
    const auto ch = x <=> hi;
    return (lo_closed ? cl >= 0 : cl > 0) && (hi_closed ? ch <= 0 : ch < 0);
  }
};

/// Per pair, the number of completing vertices k with triangle weight in w.
inline CountMatrix window_counts(const Graph& g, const Window& w) {
  CountMatrix upper = triangle_lower_counts(g, w.hi, !w.hi_closed);
  const CountMatrix below = triangle_lower_counts(g, w.lo, w.lo_closed);
  for (std::size_t x = 0; x < upper.data().size(); ++x) upper.data()[x] -= below.data()[x];
  return upper;
}

inline ExactSum triangle_exact(const Graph& g, Vertex i, Vertex j, Vertex k) {
  return ExactSum{g.vertex_weight(i), g.vertex_weight(j), g.vertex_weight(k)};
}

inline SubgraphResult make_triangle(const Graph& g, Vertex i, Vertex j, Vertex k) {
  Tuple t{i, j, k};
  std::sort(t.begin(), t.end());
  return {t, vertex_set_weight(g, t), SubgraphKind::triangle};
}

/// Heaviest triangle on edge (i,j) with weight >= K (strict: > K).
inline std::optional<SubgraphResult> best_triangle_on_edge(const Graph& g, Vertex i, Vertex j,
                                                           const ExactSum& k_value, bool strict) {
  std::optional<Vertex> best;
  ExactSum best_w;
  for (Vertex k : g.neighbors(i)) {
    if (k == j || !g.adjacent(j, k)) continue;
    const ExactSum w = triangle_exact(g, i, j, k);
    const auto c = w <=> k_value;
    if (strict ? c <= 0 : c < 0) continue;
    if (!best || w > best_w) {
      best = k;
      best_w = w;
    }
  }
  if (!best) return std::nullopt;
  return make_triangle(g, i, j, *best);
}

inline ExactSum exact_weight(const Graph& g, const SubgraphResult& r) {
  ExactSum s;
  for (Vertex v : r.vertices) s += g.vertex_weight(v);
  return s;
}

}  // namespace detail

/// Some edge (i,j) lying on a triangle of weight >= K (strict: > K).
inline std::optional<Edge> triangle_threshold_edge(const Graph& g, const ExactSum& k_value, bool strict = false) {
  detail::require_vertex_weights(g, "triangle_threshold_edge");
  const CountMatrix c = detail::triangle_upper_counts(g, k_value, strict);
  Vertex i = 0, j = 0;
  if (!detail::any_triangle_edge(g, c, i, j)) return std::nullopt;
  return Edge{i, j};
}

inline std::optional<Edge> triangle_threshold_edge(const Graph& g, double k_value, bool strict = false) {
  return triangle_threshold_edge(g, ExactSum(k_value), strict);
}

struct TriangleStats {
  std::size_t threshold_tests = 0;
  std::size_t iterations = 0;
};

/// Heaviest triangle by threshold search.  The search runs in units where
/// every vertex weight is at least 1 (threshold x maps to x + 3 (min w - 1));
/// doubling brackets the optimum, bisection narrows the bracket, and a final
/// strict-improvement loop lands on the exact maximum.
inline std::optional<SubgraphResult> heaviest_triangle_det(const Graph& g, TriangleStats* stats = nullptr) {
  detail::require_vertex_weights(g, "heaviest_triangle_det");
  TriangleStats local;
  TriangleStats& st = stats ? *stats : local;
  if (g.m() == 0) return std::nullopt;
  Vertex ei = 0, ej = 0;
  if (!detail::any_triangle_edge(g, detail::common_neighbor_counts(g), ei, ej)) return std::nullopt;

  double min_w = inf;
  for (Vertex v = 1; v <= g.n(); ++v) min_w = std::min(min_w, g.vertex_weight(v));
  auto threshold = [&](double x) {
    ExactSum k{x, min_w, min_w, min_w};
    k -= 3.0;
    return k;
  };
  auto probe = [&](const ExactSum& k, bool strict) {
    ++st.threshold_tests;
    return triangle_threshold_edge(g, k, strict);
  };

  double lo = 2.0, hi = 4.0;
  while (probe(threshold(hi), false)) {
    lo = hi;
    hi *= 2.0;
  }
  for (;;) {
    const double mid = lo + (hi - lo) / 2.0;
    if (!(mid > lo && mid < hi)) break;
    if (probe(threshold(mid), false)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const ExactSum k_lo = threshold(lo);
  auto e = probe(k_lo, false);
  auto best = detail::best_triangle_on_edge(g, e->u, e->v, k_lo, false);
  for (;;) {
    ++st.iterations;
    const ExactSum w = detail::exact_weight(g, *best);
    auto up = probe(w, true);
    if (!up) break;
    best = detail::best_triangle_on_edge(g, up->u, up->v, w, true);
  }
  return best;
}

/// F[i,j] = E(W2) - L(W1): completing vertices k with w(i)+w(j)+w(k) in [W1, W2].
inline CountMatrix triangle_window_counts(const Graph& g, double w1, double w2) {
  detail::require_vertex_weights(g, "triangle_window_counts");
  if (w1 > w2) throw std::invalid_argument("triangle window: W1 > W2");
  return detail::window_counts(g, {ExactSum(w1), true, ExactSum(w2), true});
}

namespace detail {

inline std::optional<SubgraphResult> sample_in_window(const Graph& g, const Window& win, Rng& rng) {
  const CountMatrix f = window_counts(g, win);
  std::uint64_t total = 0;
  for (const auto& e : g.edges()) total += f(e.u - 1, e.v - 1);
  if (total == 0) return std::nullopt;
  std::uint64_t r = rng.below(total);
  for (const auto& e : g.edges()) {
    const std::uint64_t c = f(e.u - 1, e.v - 1);
    if (r >= c) {
      r -= c;
      continue;
    }
    std::vector<Vertex> completions;
    for (Vertex k : g.neighbors(e.u)) {
      if (k != e.v && g.adjacent(e.v, k) && win.contains(triangle_exact(g, e.u, e.v, k))) {
        completions.push_back(k);
      }
    }
    if (completions.size() != c) throw std::logic_error("sample_triangle: count mismatch");
    return make_triangle(g, e.u, e.v, completions[rng.below(completions.size())]);
  }
  throw std::logic_error("sample_triangle: sampling fell through");
}

}  // namespace detail

/// Uniform triangle among those with weight in [W1, W2].
inline std::optional<SubgraphResult> sample_triangle(const Graph& g, double w1, double w2, Rng& rng) {
  detail::require_vertex_weights(g, "sample_triangle");
  if (w1 > w2) throw std::invalid_argument("sample_triangle: W1 > W2");
  return detail::sample_in_window(g, {ExactSum(w1), true, ExactSum(w2), true}, rng);
}

inline std::optional<SubgraphResult> sample_triangle(const Graph& g, double w1, double w2, std::uint64_t seed) {
  Rng rng(seed);
  return sample_triangle(g, w1, w2, rng);
}

/// Heaviest triangle by repeated uniform sampling above the current best.
inline std::optional<SubgraphResult> heaviest_triangle_rand(const Graph& g, std::uint64_t seed,
                                                             TriangleStats* stats = nullptr) {
  detail::require_vertex_weights(g, "heaviest_triangle_rand");
  TriangleStats local;
  TriangleStats& st = stats ? *stats : local;
  Rng rng(seed);
  ++st.iterations;
  auto best = detail::sample_in_window(g, {}, rng);
  if (!best) return std::nullopt;
  for (;;) {
    ++st.iterations;
    detail::Window above{detail::exact_weight(g, *best), false, ExactSum::infinity(1), true};
    auto next = detail::sample_in_window(g, above, rng);
    if (!next) break;
    best = next;
  }
  return best;
}

/// Heaviest triangle for sparse graphs: triangles through a vertex of degree
/// <= Delta are listed directly, the rest come from the dense routine on the
/// high-degree vertices.
inline std::optional<SubgraphResult> heaviest_triangle_sparse(const Graph& g, double omega = 3.0) {
  detail::require_vertex_weights(g, "heaviest_triangle_sparse");
  if (g.m() == 0) return std::nullopt;
  const double delta = std::pow(static_cast<double>(g.m()), (5.0 - omega) / (13.0 - 3.0 * omega));
  std::optional<SubgraphResult> best;
  std::optional<ExactSum> best_w;
  auto offer = [&](const SubgraphResult& r) {
    const ExactSum w = detail::exact_weight(g, r);
    if (!best || w > *best_w || (w == *best_w && r.vertices < best->vertices)) {
      best = r;
      best_w = w;
    }
  };
  std::vector<Vertex> high;
  for (Vertex x = 1; x <= g.n(); ++x) {
    if (static_cast<double>(g.degree(x)) > delta) {
      high.push_back(x);
      continue;
    }
    auto nb = g.neighbors(x);
    for (std::size_t p = 0; p < nb.size(); ++p) {
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        if (g.adjacent(nb[p], nb[q])) offer(detail::make_triangle(g, x, nb[p], nb[q]));
      }
    }
  }
  if (high.size() >= 3) {
    const Graph dense = g.induced(high);
    if (auto r = all_pairs_max_clique(dense, 3).overall()) {
      Tuple t;
      for (Vertex v : r->vertices) t.push_back(high[v - 1]);
      offer(detail::make_triangle(g, t[0], t[1], t[2]));
    }
  }
  return best;
}

/// Heaviest triangle under a symmetric function f(w(x), w(y), w(z)) that is
/// nondecreasing in each argument.  The heaviest common neighbor of an edge
/// maximizes f over triangles on that edge, so a maximum witness over the
/// weight-sorted vertex order suffices.
inline std::optional<SubgraphResult> heaviest_triangle_monotone(
    const Graph& g, const std::function<double(double, double, double)>& f) {
  detail::require_vertex_weights(g, "heaviest_triangle_monotone");
  const std::size_t n = g.n();
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i + 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return g.vertex_weight(x) < g.vertex_weight(y); });
  BoolMatrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (g.adjacent(static_cast<Vertex>(i + 1), order[k])) {
        a.set(i, k);
        b.set(k, i);
      }
    }
  }
  const WitnessMatrix w = max_witness_product(a, b);
  std::optional<SubgraphResult> best;
  double best_v = -inf;
  for (const auto& e : g.edges()) {
    const auto k = w(e.u - 1, e.v - 1);
    if (k == 0) continue;
    const Vertex z = order[k - 1];
    const double v = f(g.vertex_weight(e.u), g.vertex_weight(e.v), g.vertex_weight(z));
    auto r = detail::make_triangle(g, e.u, e.v, z);
    if (!best || v > best_v || (v == best_v && r.vertices < best->vertices)) {
      best = r;
      best_v = v;
    }
  }
  if (best) best->weight = best_v;
  return best;
}

/// Heaviest (not necessarily induced) K_{2,k}: tuple (i, j, c_1..c_k) with
/// i < j and c_1..c_k their k heaviest common neighbors, heaviest first.
inline std::optional<SubgraphResult> heaviest_k2k(const Graph& g, std::size_t k) {
  detail::require_vertex_weights(g, "heaviest_k2k");
  if (k == 0) throw std::invalid_argument("heaviest_k2k: k must be at least 1");
  const std::size_t n = g.n();
  std::vector<Tuple> singles;
  for (Vertex v = 1; v <= n; ++v) singles.push_back({v});
  detail::sort_by_weight(g, singles);
  BoolMatrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (g.adjacent(static_cast<Vertex>(i + 1), singles[x][0])) {
        a.set(i, x);
        b.set(x, i);
      }
    }
  }
  const TopWitnesses top = top_k_witnesses(a, b, k);
  std::optional<SubgraphResult> best;
  std::optional<ExactSum> best_w;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const auto& list = top.at(i - 1, j - 1);
      if (list.size() < k) continue;
      Tuple t{i, j};
      for (auto x : list) t.push_back(singles[x - 1][0]);
      const ExactSum w = detail::tuple_weight(g, t);
      if (!best || w > *best_w) {
        best = SubgraphResult{t, vertex_set_weight(g, t), SubgraphKind::pattern};
        best_w = w;
      }
    }
  }
  return best;
}

/// beta(G, K_k): the most edges incident with a single K_k, 0 if none.
inline std::size_t edge_cover_number(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("edge_cover_number: k must be at least 3");
  std::vector<double> deg(g.n());
  for (Vertex v = 1; v <= g.n(); ++v) deg[v - 1] = static_cast<double>(g.degree(v));
  const Graph wg = g.with_vertex_weights(std::move(deg));
  const auto best = all_pairs_max_clique(wg, k).overall();
  if (!best) return 0;
  return static_cast<std::size_t>(best->weight) - static_cast<std::size_t>(k * (k - 1) / 2);
}

}  // namespace hsub
