#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsub/exact_sum.hpp"
#include "hsub/rng.hpp"

namespace hsub {

/// Vertices are 1..n; 0 is reserved for "none".
using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Formats a double with the shortest round-trip representation; integral
/// values keep a trailing ".0".
inline std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

/// Parses a finite or infinite real ("inf", "-inf", "+inf" accepted).
inline std::optional<double> parse_real(std::string_view tok) {
  if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
  if (tok == "-inf") return -std::numeric_limits<double>::infinity();
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double x = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || std::isnan(x)) {
    return std::nullopt;
  }
  return x;
}

template <class Int>
std::optional<Int> parse_integer(std::string_view tok) {
  Int x{};
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) return std::nullopt;
  return x;
}

/// Undirected simple graph with optional vertex weights, edge weights and
/// edge colors.  Immutable once built; the with_* helpers return new values.
class Graph {
 public:
  static constexpr std::size_t default_bit_table_limit = 4096;

  Graph() { index(); }

  Graph(std::size_t n, std::vector<Edge> edges,
        std::size_t bit_table_limit = default_bit_table_limit)
      : n_(n), edges_(std::move(edges)), bit_table_limit_(bit_table_limit) {
    for (auto& e : edges_) {
      if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
      if (e.u == 0 || e.v == 0 || e.u > n_ || e.v > n_) {
        throw GraphError("vertex index out of range in edge " + std::to_string(e.u) + "-" +
                         std::to_string(e.v));
      }
      e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i] == edges_[i - 1]) {
        throw GraphError("duplicate edge " + std::to_string(edges_[i].u) + "-" +
                         std::to_string(edges_[i].v));
      }
    }
    index();
  }

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, to_edges(edges)) {}

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbr_.data() + offsets_[v], nbr_.data() + offsets_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident(Vertex v) const {
    return {nbr_edge_.data() + offsets_[v], nbr_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex a, Vertex b) const {
    if (a == b || a == 0 || b == 0 || a > n_ || b > n_) return false;
    if (!bits_.empty()) {
      const std::size_t bit = b - 1;
      return (bits_[(a - 1) * words_ + bit / 64] >> (bit % 64)) & 1u;
    }
    return edge_id(a, b).has_value();
  }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (a == 0 || b == 0 || a > n_ || b > n_ || a == b) return std::nullopt;
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incident(a)[static_cast<std::size_t>(it - nb.begin())];
  }

  bool has_vertex_weights() const { return has_vw_; }
  bool has_edge_weights() const { return has_ew_; }
  bool has_edge_colors() const { return has_ec_; }

  double vertex_weight(Vertex v) const {
    require(has_vw_, "graph has no vertex weights");
    return vertex_weight_[v - 1];
  }
  std::span<const double> vertex_weights() const { return vertex_weight_; }

  double edge_weight(EdgeId id) const {
    require(has_ew_, "graph has no edge weights");
    return edge_weight_[id];
  }
  double edge_weight(Vertex a, Vertex b) const {
    auto id = edge_id(a, b);
    if (!id) throw GraphError("no edge " + std::to_string(a) + "-" + std::to_string(b));
    return edge_weight(*id);
  }
  int edge_color(EdgeId id) const {
    require(has_ec_, "graph has no edge colors");
    return edge_color_[id];
  }
  int edge_color(Vertex a, Vertex b) const {
    auto id = edge_id(a, b);
    if (!id) throw GraphError("no edge " + std::to_string(a) + "-" + std::to_string(b));
    return edge_color(*id);
  }

  /// Weights indexed by v-1.
  Graph with_vertex_weights(std::vector<double> w) const {
    if (w.size() != n_) throw GraphError("vertex weight vector must have n entries");
    for (double x : w) {
      if (!std::isfinite(x)) throw GraphError("vertex weights must be finite");
    }
    Graph g = *this;
    g.vertex_weight_ = std::move(w);
    g.has_vw_ = true;
    return g;
  }
  /// Weights parallel to edges().
  Graph with_edge_weights(std::vector<double> w) const {
    if (w.size() != edges_.size()) throw GraphError("edge weight vector must have m entries");
    for (double x : w) {
      if (!std::isfinite(x)) throw GraphError("edge weights must be finite");
    }
    Graph g = *this;
    g.edge_weight_ = std::move(w);
    g.has_ew_ = true;
    return g;
  }
  Graph with_edge_colors(std::vector<int> c) const {
    if (c.size() != edges_.size()) throw GraphError("edge color vector must have m entries");
    for (int x : c) {
      if (x <= 0) throw GraphError("edge colors must be positive");
    }
    Graph g = *this;
    g.edge_color_ = std::move(c);
    g.has_ec_ = true;
    return g;
  }
  Graph without_weights() const {
    Graph g = *this;
    g.vertex_weight_.clear();
    g.edge_weight_.clear();
    g.edge_color_.clear();
    g.has_vw_ = g.has_ew_ = g.has_ec_ = false;
    return g;
  }

  /// Subgraph induced by `keep` (any order, no duplicates); vertex i+1 of the
  /// result is keep[i].  All attribute maps are carried over.
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<Vertex> relabel(n_ + 1, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<Vertex>(i + 1);
    std::vector<Edge> es;
    std::vector<std::pair<Edge, EdgeId>> tagged;
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      if (relabel[e.u] && relabel[e.v]) tagged.push_back({make_edge(relabel[e.u], relabel[e.v]), id});
    }
    std::sort(tagged.begin(), tagged.end());
    for (auto& t : tagged) es.push_back(t.first);
    Graph g(keep.size(), es, bit_table_limit_);
    if (has_vw_) {
      std::vector<double> w;
      for (Vertex v : keep) w.push_back(vertex_weight_[v - 1]);
      g = g.with_vertex_weights(std::move(w));
    }
    if (has_ew_) {
      std::vector<double> w;
      for (auto& t : tagged) w.push_back(edge_weight_[t.second]);
      g = g.with_edge_weights(std::move(w));
    }
    if (has_ec_) {
      std::vector<int> c;
      for (auto& t : tagged) c.push_back(edge_color_[t.second]);
      g = g.with_edge_colors(std::move(c));
    }
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    // Edge attribute flags are unobservable on an edgeless graph.
    const bool edgeless = a.edges_.empty() && b.edges_.empty();
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.has_vw_ == b.has_vw_ &&
           (edgeless || (a.has_ew_ == b.has_ew_ && a.has_ec_ == b.has_ec_)) &&
           a.vertex_weight_ == b.vertex_weight_ && a.edge_weight_ == b.edge_weight_ &&
           a.edge_color_ == b.edge_color_;
  }

 private:
  static std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> list) {
    std::vector<Edge> es;
    for (auto& [a, b] : list) es.push_back({a, b});
    return es;
  }

  static void require(bool ok, const char* what) {
    if (!ok) throw GraphError(what);
  }

  void index() {
    offsets_.assign(n_ + 2, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t v = 1; v < offsets_.size(); ++v) offsets_[v] += offsets_[v - 1];
    nbr_.assign(2 * edges_.size(), 0);
    nbr_edge_.assign(2 * edges_.size(), 0);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted, so each neighbor list comes out sorted as long as the
    // larger endpoints are appended in a second pass.
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      nbr_[fill[e.v]] = e.u;
      nbr_edge_[fill[e.v]++] = id;
    }
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      nbr_[fill[e.u]] = e.v;
      nbr_edge_[fill[e.u]++] = id;
    }
    bits_.clear();
    words_ = (n_ + 63) / 64;
    if (n_ > 0 && n_ <= bit_table_limit_) {
      bits_.assign(n_ * words_, 0);
      for (const auto& e : edges_) {
        bits_[(e.u - 1) * words_ + (e.v - 1) / 64] |= std::uint64_t{1} << ((e.v - 1) % 64);
        bits_[(e.v - 1) * words_ + (e.u - 1) / 64] |= std::uint64_t{1} << ((e.u - 1) % 64);
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::size_t bit_table_limit_ = default_bit_table_limit;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> nbr_;
  std::vector<EdgeId> nbr_edge_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
  bool has_vw_ = false, has_ew_ = false, has_ec_ = false;
  std::vector<double> vertex_weight_;
  std::vector<double> edge_weight_;
  std::vector<int> edge_color_;
};

inline std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> vs(g.n());
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<Vertex>(i + 1);
  return vs;
}

// ---------------------------------------------------------------------------
// Text format

namespace detail {
inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

inline std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}
}  // namespace detail

/// Reads the line-oriented graph format:
///   g <n>
///   vw <v> <real>
///   e <u> <v> [<real weight>] [c<int color>]
/// '#' starts a comment.  Once any 'vw' line appears, unlisted vertices
/// weigh 0.  After a weight, a bare integer is accepted as the color.
inline Graph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  struct PendingEdge {
    Edge e;
    std::optional<double> w;
    std::optional<int> c;
    std::size_t line;
  };
  std::vector<PendingEdge> pending;
  std::map<Vertex, double> vw;

  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = detail::split_ws(detail::strip_comment(raw));
    if (toks.empty()) continue;
    const auto& d = toks[0];
    if (!n) {
      if (d != "g" || toks.size() != 2) throw ParseError(line_no, "expected 'g <n>' header");
      auto parsed = parse_integer<std::size_t>(toks[1]);
      if (!parsed) throw ParseError(line_no, "malformed vertex count");
      n = *parsed;
      continue;
    }
    auto vertex = [&](std::string_view tok) {
      auto v = parse_integer<Vertex>(tok);
      if (!v) throw ParseError(line_no, "malformed vertex index '" + std::string(tok) + "'");
      if (*v == 0 || *v > *n) {
        throw ParseError(line_no, "vertex index out of range: " + std::string(tok));
      }
      return *v;
    };
    if (d == "g") throw ParseError(line_no, "duplicate 'g' header");
    if (d == "vw") {
      if (toks.size() != 3) throw ParseError(line_no, "expected 'vw <v> <real>'");
      Vertex v = vertex(toks[1]);
      auto w = parse_real(toks[2]);
      if (!w || !std::isfinite(*w)) throw ParseError(line_no, "malformed number '" + std::string(toks[2]) + "'");
      if (!vw.emplace(v, *w).second) throw ParseError(line_no, "duplicate weight for vertex " + std::to_string(v));
    } else if (d == "e") {
      if (toks.size() < 3 || toks.size() > 5) throw ParseError(line_no, "expected 'e <u> <v> [w] [c<k>]'");
      PendingEdge pe{{vertex(toks[1]), vertex(toks[2])}, std::nullopt, std::nullopt, line_no};
      if (pe.e.u == pe.e.v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(pe.e.u));
      pe.e = make_edge(pe.e.u, pe.e.v);
      for (std::size_t t = 3; t < toks.size(); ++t) {
        if (toks[t].front() == 'c') {
          if (pe.c) throw ParseError(line_no, "duplicate color");
          auto c = parse_integer<int>(toks[t].substr(1));
          if (!c || *c <= 0) throw ParseError(line_no, "malformed color '" + std::string(toks[t]) + "'");
          pe.c = *c;
        } else if (pe.w) {
          // A second numeric field after the weight is the color.
          if (pe.c) throw ParseError(line_no, "duplicate color");
          auto c = parse_integer<int>(toks[t]);
          if (!c || *c <= 0) throw ParseError(line_no, "malformed color '" + std::string(toks[t]) + "'");
          pe.c = *c;
        } else {
          if (pe.c) throw ParseError(line_no, "weight must precede color");
          auto w = parse_real(toks[t]);
          if (!w || !std::isfinite(*w)) throw ParseError(line_no, "malformed number '" + std::string(toks[t]) + "'");
          pe.w = *w;
        }
      }
      pending.push_back(pe);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(d) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing 'g <n>' header");

  std::sort(pending.begin(), pending.end(),
            [](const PendingEdge& a, const PendingEdge& b) {
              return a.e < b.e || (a.e == b.e && a.line < b.line);
            });
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (i > 0 && pending[i].e == pending[i - 1].e) {
      throw ParseError(pending[i].line, "duplicate edge " + std::to_string(pending[i].e.u) + " " +
                                            std::to_string(pending[i].e.v));
    }
    edges.push_back(pending[i].e);
  }
  Graph g(*n, edges);

  if (!vw.empty()) {
    // Vertices without a 'vw' line get weight 0 once any weight is given.
    std::vector<double> w(*n, 0.0);
    for (auto& [v, x] : vw) w[v - 1] = x;
    g = g.with_vertex_weights(std::move(w));
  }
  auto count_w = std::count_if(pending.begin(), pending.end(), [](auto& p) { return p.w.has_value(); });
  auto count_c = std::count_if(pending.begin(), pending.end(), [](auto& p) { return p.c.has_value(); });
  if (count_w > 0) {
    if (static_cast<std::size_t>(count_w) != pending.size()) {
      auto it = std::find_if(pending.begin(), pending.end(), [](auto& p) { return !p.w; });
      throw ParseError(it->line, "edge weights must be given for every edge");
    }
    std::vector<double> w;
    for (auto& p : pending) w.push_back(*p.w);
    g = g.with_edge_weights(std::move(w));
  }
  if (count_c > 0) {
    if (static_cast<std::size_t>(count_c) != pending.size()) {
      auto it = std::find_if(pending.begin(), pending.end(), [](auto& p) { return !p.c; });
      throw ParseError(it->line, "edge colors must be given for every edge");
    }
    std::vector<int> c;
    for (auto& p : pending) c.push_back(*p.c);
    g = g.with_edge_colors(std::move(c));
  }
  return g;
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

/// Canonical text: header, vertex weights ascending, edges lexicographic.
inline void serialize_graph(const Graph& g, std::ostream& out) {
  out << "g " << g.n() << '\n';
  if (g.has_vertex_weights()) {
    for (Vertex v = 1; v <= g.n(); ++v) out << "vw " << v << ' ' << format_real(g.vertex_weight(v)) << '\n';
  }
  for (EdgeId id = 0; id < g.m(); ++id) {
    const auto& e = g.edge(id);
    out << "e " << e.u << ' ' << e.v;
    if (g.has_edge_weights()) out << ' ' << format_real(g.edge_weight(id));
    if (g.has_edge_colors()) out << " c" << g.edge_color(id);
    out << '\n';
  }
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Random instances

enum class WeightMode { none, vertex, edge, both };

/// G(n, p).  Draw order: edge presence for pairs in lexicographic order, then
/// vertex weights, then edge weights, then colors.  Weights are uniform in
/// [-1, 1), colors uniform in 1..color_count.
inline Graph generate_random_graph(std::size_t n, double p, WeightMode mode,
                                   std::optional<int> color_count, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must be in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  Graph g(n, edges);
  if (mode == WeightMode::vertex || mode == WeightMode::both) {
    std::vector<double> w(n);
    for (auto& x : w) x = rng.uniform(-1.0, 1.0);
    g = g.with_vertex_weights(std::move(w));
  }
  if (mode == WeightMode::edge || mode == WeightMode::both) {
    std::vector<double> w(g.m());
    for (auto& x : w) x = rng.uniform(-1.0, 1.0);
    g = g.with_edge_weights(std::move(w));
  }
  if (color_count) {
    if (*color_count <= 0) throw GraphError("color count must be positive");
    std::vector<int> c(g.m());
    for (auto& x : c) x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(*color_count)));
    g = g.with_edge_colors(std::move(c));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Colorings and results

struct VertexColoring {
  int k = 0;
  std::vector<int> color;  // color[v - 1] in 1..k

  int of(Vertex v) const { return color[v - 1]; }

  void validate(std::size_t n) const {
    if (color.size() != n) throw GraphError("coloring must cover every vertex");
    for (int c : color) {
      if (c < 1 || c > k) throw GraphError("vertex color out of range");
    }
  }
};

inline VertexColoring random_coloring(std::size_t n, int k, Rng& rng) {
  VertexColoring col{k, std::vector<int>(n)};
  for (auto& c : col.color) c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
  return col;
}

enum class SubgraphKind { triangle, clique, cycle, pattern };

struct SubgraphResult {
  std::vector<Vertex> vertices;
  double weight = 0.0;
  SubgraphKind kind = SubgraphKind::pattern;
};

// Canonical weight recomputation.  Every algorithm reports weights through
// these, so equal vertex/edge sets produce bit-identical weights.

/// Sum of vertex weights, vertices ascending.
inline double vertex_set_weight(const Graph& g, std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  double s = 0.0;
  for (Vertex v : vs) s += g.vertex_weight(v);
  return s;
}

inline ExactSum exact_vertex_set_weight(const Graph& g, std::span<const Vertex> vs) {
  ExactSum s;
  for (Vertex v : vs) s += g.vertex_weight(v);
  return s;
}

/// Sum of edge weights over a list of edges, taken in lexicographic order.
inline double edge_list_weight(const Graph& g, std::vector<Edge> es) {
  for (auto& e : es) e = make_edge(e.u, e.v);
  std::sort(es.begin(), es.end());
  double s = 0.0;
  for (auto& e : es) s += g.edge_weight(e.u, e.v);
  return s;
}

/// Total weight of the edges present among `vs` (non-edges contribute 0).
inline double induced_edge_weight(const Graph& g, std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  double s = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (auto id = g.edge_id(vs[i], vs[j])) s += g.edge_weight(*id);
    }
  }
  return s;
}

/// Weight of the closed walk vs[0], vs[1], ..., vs[k-1], vs[0].
inline double cycle_weight(const Graph& g, std::span<const Vertex> cycle) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    es.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  return edge_list_weight(g, std::move(es));
}

/// Rotates/reflects a cycle so the smallest vertex comes first and the
/// second vertex is smaller than the last.
inline std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 3) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

/// True when `cycle` is a simple cycle of G (length >= 3).
inline bool is_simple_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) return false;
  std::vector<Vertex> s(cycle.begin(), cycle.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

/// Lexicographic comparison of results by (weight desc, sorted tuple asc).
inline bool better_result(const SubgraphResult& a, const SubgraphResult& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.vertices < b.vertices;
}

}  // namespace hsub
