#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hsub/extmat.hpp"
#include "hsub/graph.hpp"
#include "hsub/rng.hpp"
#include "hsub/vertexmax.hpp"

namespace hsub {

/// Maps the colors present in a graph onto {1..t}.
struct ColorReduction {
  int t = 0;
  std::map<int, int> map;

  int operator()(int c) const { return map.at(c); }
};

/// Sizes (C(k,2), C(k,2), C(k+j,2), k^2, k(k+j), k(k+j)) for h = 3k + j.
struct ColorPartition {
  std::array<std::vector<int>, 6> classes;
};

inline std::array<int, 6> partition_sizes(int h) {
  const int k = h / 3, j = h % 3;
  auto c2 = [](int x) { return x * (x - 1) / 2; };
  return {c2(k), c2(k), c2(k + j), k * k, k * (k + j), k * (k + j)};
}

namespace detail {

inline void require_edge_colors(const Graph& g, const char* op) {
  if (!g.has_edge_colors()) throw std::invalid_argument(std::string(op) + ": edge colors required");
}

inline std::vector<int> present_colors(const Graph& g) {
  std::set<int> cs;
  for (EdgeId id = 0; id < g.m(); ++id) cs.insert(g.edge_color(id));
  return {cs.begin(), cs.end()};
}

inline double result_weight(const Graph& g, const Tuple& vs) {
  if (g.has_edge_weights()) return induced_edge_weight(g, vs);
  if (g.has_vertex_weights()) return vertex_set_weight(g, vs);
  return 0.0;
}

inline SubgraphResult clique_result(const Graph& g, Tuple vs) {
  std::sort(vs.begin(), vs.end());
  const double w = result_weight(g, vs);
  return {vs, w, vs.size() == 3 ? SubgraphKind::triangle : SubgraphKind::clique};
}

}  // namespace detail

/// Identity-like injective map when at most t colors occur, otherwise a
/// uniformly random map.
inline ColorReduction reduce_colors(const Graph& g, int t, Rng& rng) {
  ColorReduction r;
  r.t = t;
  const auto colors = detail::present_colors(g);
  const bool injective = colors.size() <= static_cast<std::size_t>(t);
  int next = 1;
  for (int c : colors) {
    r.map[c] = injective ? next++ : 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(t)));
  }
  return r;
}

inline bool is_rainbow(const Graph& g, const Tuple& vs) {
  std::set<int> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto id = g.edge_id(vs[i], vs[j]);
      if (!id || !seen.insert(g.edge_color(*id)).second) return false;
    }
  }
  return true;
}

inline bool is_monochromatic(const Graph& g, const Tuple& vs) {
  std::optional<int> color;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto id = g.edge_id(vs[i], vs[j]);
      if (!id) return false;
      if (color && *color != g.edge_color(*id)) return false;
      color = g.edge_color(*id);
    }
  }
  return true;
}

struct RainbowOptions {
  std::size_t trials = 0;  // 0: derive from failure_bound (1 when no reduction is random)
  double failure_bound = 0.01;
  std::uint64_t seed = 1;
  int cap = 4;
};

namespace detail {

// Edges between x and y (all pairs; both must be present), or inside x when
// y is null, checked for distinct reduced colors drawn from `allowed`.
inline bool rainbow_block(const Graph& g, const ColorReduction& red, const std::vector<char>& allowed,
                          const Tuple& x, const Tuple* y) {
  std::uint64_t used = 0;
  auto take = [&](Vertex u, Vertex v) {
    auto id = g.edge_id(u, v);
    if (!id) return false;
    const int c = red(g.edge_color(*id));
    if (!allowed[static_cast<std::size_t>(c)] || ((used >> c) & 1u)) return false;
    used |= std::uint64_t{1} << c;
    return true;
  };
  if (y) {
    for (Vertex u : x) {
      for (Vertex v : *y) {
        if (u == v || !take(u, v)) return false;
      }
    }
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        if (!take(x[i], x[j])) return false;
      }
    }
  }
  return true;
}

// Calls fn(partition) for every assignment of {1..t} to six classes of the
// given sizes; stops when fn returns true.
template <class Fn>
bool for_each_partition(int t, const std::array<int, 6>& sizes, Fn&& fn) {
  std::vector<int> label(static_cast<std::size_t>(t) + 1, -1);
  std::array<int, 6> left = sizes;
  auto rec = [&](auto&& self, int c) -> bool {
    if (c > t) {
      ColorPartition p;
      for (int x = 1; x <= t; ++x) p.classes[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])].push_back(x);
      return fn(p);
    }
    for (int part = 0; part < 6; ++part) {
      if (left[static_cast<std::size_t>(part)] == 0) continue;
      --left[static_cast<std::size_t>(part)];
      label[static_cast<std::size_t>(c)] = part;
      if (self(self, c + 1)) return true;
      ++left[static_cast<std::size_t>(part)];
    }
    return false;
  };
  return rec(rec, 1);
}

inline std::optional<Tuple> rainbow_under(const Graph& g, int h, const ColorReduction& red,
                                          const std::vector<Tuple>& small, const std::vector<Tuple>& large) {
  const int t = red.t;
  std::optional<Tuple> found;
  for_each_partition(t, partition_sizes(h), [&](const ColorPartition& p) {
    std::array<std::vector<char>, 6> allowed;
    for (int i = 0; i < 6; ++i) {
      allowed[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(t) + 1, 0);
      for (int c : p.classes[static_cast<std::size_t>(i)]) allowed[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 1;
    }
    auto inside = [&](const std::vector<Tuple>& cands, int cls) {
      std::vector<Tuple> out;
      for (const auto& x : cands) {
        if (rainbow_block(g, red, allowed[static_cast<std::size_t>(cls)], x, nullptr)) out.push_back(x);
      }
      return out;
    };
    const auto s1 = inside(small, 0), s2 = inside(small, 1), s3 = inside(large, 2);
    if (s1.empty() || s2.empty() || s3.empty()) return false;
    BoolMatrix a(s1.size(), s2.size()), b(s2.size(), s3.size());
    for (std::size_t x = 0; x < s1.size(); ++x) {
      for (std::size_t y = 0; y < s2.size(); ++y) {
        if (rainbow_block(g, red, allowed[3], s1[x], &s2[y])) a.set(x, y);
      }
    }
    for (std::size_t y = 0; y < s2.size(); ++y) {
      for (std::size_t z = 0; z < s3.size(); ++z) {
        if (rainbow_block(g, red, allowed[4], s2[y], &s3[z])) b.set(y, z);
      }
    }
    const BoolMatrix c = bool_product(a, b);
    for (std::size_t x = 0; x < s1.size(); ++x) {
      for (std::size_t z = 0; z < s3.size(); ++z) {
        if (!c.get(x, z) || !rainbow_block(g, red, allowed[5], s1[x], &s3[z])) continue;
        for (std::size_t y = 0; y < s2.size(); ++y) {
          if (a.get(x, y) && b.get(y, z)) {
            Tuple all = s1[x];
            all.insert(all.end(), s2[y].begin(), s2[y].end());
            all.insert(all.end(), s3[z].begin(), s3[z].end());
            found = all;
            return true;
          }
        }
      }
    }
    return false;
  });
  return found;
}

}  // namespace detail

/// A K_h whose edges carry pairwise distinct colors, found via random
/// reductions to C(h,2) colors and six-way color partitions.  A returned
/// clique is always rainbow; a miss has probability at most failure_bound.
inline std::optional<SubgraphResult> rainbow_clique(const Graph& g, int h, const RainbowOptions& opt = {}) {
  detail::require_edge_colors(g, "rainbow_clique");
  if (h < 3 || h > opt.cap) {
    throw std::invalid_argument("rainbow_clique: h must lie in [3, " + std::to_string(opt.cap) + "]");
  }
  if (g.n() < static_cast<std::size_t>(h)) return std::nullopt;
  const int t = h * (h - 1) / 2;
  const int k = h / 3, j = h % 3;
  const auto small = detail::clique_subsets(g, static_cast<std::size_t>(k));
  const auto large = detail::clique_subsets(g, static_cast<std::size_t>(k + j));
  const bool exact = detail::present_colors(g).size() <= static_cast<std::size_t>(t);
  std::size_t trials = opt.trials;
  if (trials == 0) {
    trials = exact ? 1
                   : static_cast<std::size_t>(std::ceil(std::exp(static_cast<double>(t)) * std::log(1.0 / opt.failure_bound)));
  }
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(opt.seed, trial));
    const ColorReduction red = reduce_colors(g, t, rng);
    if (auto vs = detail::rainbow_under(g, h, red, small, large)) {
      if (!is_rainbow(g, *vs)) throw std::logic_error("rainbow_clique: reduced-rainbow clique is not rainbow");
      return detail::clique_result(g, *vs);
    }
    if (exact) break;
  }
  return std::nullopt;
}

namespace detail {

// Color-c adjacency restricted to `verts` (indices into verts).
inline BoolMatrix color_adjacency(const Graph& g, const std::vector<Vertex>& verts, int color) {
  BoolMatrix a(verts.size(), verts.size());
  for (std::size_t x = 0; x < verts.size(); ++x) {
    for (std::size_t y = x + 1; y < verts.size(); ++y) {
      auto id = g.edge_id(verts[x], verts[y]);
      if (id && g.edge_color(*id) == color) {
        a.set(x, y);
        a.set(y, x);
      }
    }
  }
  return a;
}

// A triangle of the graph given by a symmetric 0-1 matrix, via A^2 AND A.
inline std::optional<std::array<std::size_t, 3>> matrix_triangle(const BoolMatrix& a) {
  const BoolMatrix sq = bool_product(a, a);
  for (std::size_t x = 0; x < a.rows(); ++x) {
    for (std::size_t y = x + 1; y < a.rows(); ++y) {
      if (!a.get(x, y) || !sq.get(x, y)) continue;
      for (std::size_t z = 0; z < a.rows(); ++z) {
        if (a.get(x, z) && a.get(z, y)) return std::array<std::size_t, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A monochromatic triangle.  Colors with at least n^((omega+1)/2) edges go
/// through a Boolean product; the others through an edge iterator.
inline std::optional<SubgraphResult> mono_triangle(const Graph& g, double omega = 3.0) {
  detail::require_edge_colors(g, "mono_triangle");
  const std::size_t n = g.n();
  std::map<int, std::vector<EdgeId>> classes;
  for (EdgeId id = 0; id < g.m(); ++id) classes[g.edge_color(id)].push_back(id);
  const double heavy = std::pow(static_cast<double>(n), (omega + 1.0) / 2.0);
  std::vector<Vertex> all = all_vertices(g);
  for (const auto& [color, ids] : classes) {
    if (static_cast<double>(ids.size()) >= heavy) {
      if (auto tri = detail::matrix_triangle(detail::color_adjacency(g, all, color))) {
        return detail::clique_result(g, {all[(*tri)[0]], all[(*tri)[1]], all[(*tri)[2]]});
      }
      continue;
    }
    // Edge iterator: orient each edge toward the endpoint of larger color
    // degree and scan the smaller side.
    std::map<Vertex, std::vector<Vertex>> nb;
    for (EdgeId id : ids) {
      nb[g.edge(id).u].push_back(g.edge(id).v);
      nb[g.edge(id).v].push_back(g.edge(id).u);
    }
    for (EdgeId id : ids) {
      Vertex u = g.edge(id).u, v = g.edge(id).v;
      if (nb[u].size() > nb[v].size()) std::swap(u, v);
      for (Vertex w : nb[u]) {
        if (w == v) continue;
        auto e = g.edge_id(v, w);
        if (e && g.edge_color(*e) == color) return detail::clique_result(g, {u, v, w});
      }
    }
  }
  return std::nullopt;
}

/// A monochromatic K_4: for each v, a triangle inside one class of v's
/// neighbors grouped by the color of the edge to v, in that same color.
inline std::optional<SubgraphResult> mono_k4(const Graph& g) {
  detail::require_edge_colors(g, "mono_k4");
  for (Vertex v = 1; v <= g.n(); ++v) {
    std::map<int, std::vector<Vertex>> groups;
    auto nb = g.neighbors(v);
    auto ids = g.incident(v);
    for (std::size_t t = 0; t < nb.size(); ++t) groups[g.edge_color(ids[t])].push_back(nb[t]);
    for (const auto& [color, verts] : groups) {
      if (verts.size() < 3) continue;
      if (auto tri = detail::matrix_triangle(detail::color_adjacency(g, verts, color))) {
        return detail::clique_result(g, {v, verts[(*tri)[0]], verts[(*tri)[1]], verts[(*tri)[2]]});
      }
    }
  }
  return std::nullopt;
}

/// A monochromatic K_h.  h = 3, 4 use the special routines; otherwise the
/// vertex set is split into parts of sizes (h1, h2, h3) with h1, h2 >= 2, so
/// the first two parts each contain an edge and share its color with the
/// rest, and one Boolean product joins them.
inline std::optional<SubgraphResult> mono_clique(const Graph& g, int h, int cap = 6) {
  detail::require_edge_colors(g, "mono_clique");
  if (h < 3 || h > cap) throw std::invalid_argument("mono_clique: h must lie in [3, " + std::to_string(cap) + "]");
  if (h == 3) return mono_triangle(g);
  if (h == 4) return mono_k4(g);
  const int k = h / 3, j = h % 3;
  const int h1 = k + (j >= 1 ? 1 : 0), h2 = k + (j == 2 ? 1 : 0), h3 = k;
  auto mono_sets = [&](int size) {
    std::vector<Tuple> out;
    for (auto& x : detail::clique_subsets(g, static_cast<std::size_t>(size))) {
      if (is_monochromatic(g, x)) out.push_back(std::move(x));
    }
    return out;
  };
  const auto s1 = mono_sets(h1), s2 = h2 == h1 ? s1 : mono_sets(h2), s3 = mono_sets(h3);
  auto joint = [&](const Tuple& x, const Tuple& y) {
    if (!detail::disjoint(x, y)) return false;
    Tuple u = x;
    u.insert(u.end(), y.begin(), y.end());
    return is_monochromatic(g, u);
  };
  BoolMatrix a(s1.size(), s2.size()), b(s2.size(), s3.size());
  for (std::size_t x = 0; x < s1.size(); ++x) {
    for (std::size_t y = 0; y < s2.size(); ++y) {
      if (joint(s1[x], s2[y])) a.set(x, y);
    }
  }
  for (std::size_t y = 0; y < s2.size(); ++y) {
    for (std::size_t z = 0; z < s3.size(); ++z) {
      if (joint(s2[y], s3[z])) b.set(y, z);
    }
  }
  const BoolMatrix c = bool_product(a, b);
  for (std::size_t x = 0; x < s1.size(); ++x) {
    for (std::size_t z = 0; z < s3.size(); ++z) {
      if (!c.get(x, z) || !joint(s1[x], s3[z])) continue;
      for (std::size_t y = 0; y < s2.size(); ++y) {
        if (!a.get(x, y) || !b.get(y, z)) continue;
        Tuple all = s1[x];
        all.insert(all.end(), s2[y].begin(), s2[y].end());
        all.insert(all.end(), s3[z].begin(), s3[z].end());
        if (!is_monochromatic(g, all)) throw std::logic_error("mono_clique: joined parts are not monochromatic");
        return detail::clique_result(g, all);
      }
    }
  }
  return std::nullopt;
}

}  // namespace hsub
