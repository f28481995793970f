#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hsub/exact_sum.hpp"
#include "hsub/extmat.hpp"

namespace hsub {

/// Points as matrix rows; coordinates may be +-inf.
template <class T = double>
using PointSet = DenseMatrix<T>;

struct DominanceParams {
  std::size_t s = 0;         // bucket size; 0 picks the default
  double omega_hint = 3.0;   // only used for the default s
  bool strict = false;       // count P[k] < Q[k] instead of P[k] <= Q[k]
};

/// round(n^((omega-1)/2)) clamped to [1, n].
inline std::size_t default_bucket_size(std::size_t n, double omega_hint = 3.0) {
  if (n == 0) return 1;
  const double s = std::round(std::pow(static_cast<double>(n), (omega_hint - 1.0) / 2.0));
  return std::clamp<std::size_t>(static_cast<std::size_t>(s), 1, n);
}

/// Per-coordinate sorted order of the union P u Q.  Entry `order[k][r]`
/// is the point at rank r in coordinate k, encoded as index for P and
/// n_p + index for Q.
struct RankTable {
  std::size_t n_p = 0;
  std::size_t n_q = 0;
  std::vector<std::vector<std::uint32_t>> order;
  std::vector<std::vector<std::uint32_t>> rank;  // rank[k][point]

  std::size_t size() const { return n_p + n_q; }
  bool is_p(std::uint32_t id) const { return id < n_p; }
};

namespace detail {
template <class T>
bool is_nan_value(const T& x) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::isnan(x);
  } else {
    return false;
  }
}

// Monotone map from non-NaN doubles to unsigned keys; -0.0 and 0.0 collide.
inline std::uint64_t order_key(double x) {
  if (x == 0.0) x = 0.0;
  const auto bits = std::bit_cast<std::uint64_t>(x);
  return (bits >> 63) ? ~bits : bits | (std::uint64_t{1} << 63);
}
}  // namespace detail

/// Sorts each coordinate of P u Q.  Equal values put P first for `<=`
/// (so equal coordinates count) and Q first for `<`; remaining ties go by
/// point index.
template <class T>
RankTable build_rank_table(const PointSet<T>& p, const PointSet<T>& q, bool strict) {
  if (p.cols() != q.cols()) throw DimensionError("dominance: point dimensions differ");
  RankTable t;
  t.n_p = p.rows();
  t.n_q = q.rows();
  const std::size_t n = t.size();
  const std::size_t d = p.cols();
  auto value = [&](std::uint32_t id, std::size_t k) -> const T& {
    return id < t.n_p ? p(id, k) : q(id - t.n_p, k);
  };
  for (std::size_t k = 0; k < d; ++k) {
    for (std::uint32_t id = 0; id < n; ++id) {
      if (detail::is_nan_value(value(id, k))) throw std::invalid_argument("dominance: NaN coordinate");
    }
  }
  t.rank.assign(d, std::vector<std::uint32_t>(n));
  t.order.assign(d, std::vector<std::uint32_t>(n));
  if constexpr (std::is_floating_point_v<T>) {
    // Order-preserving integer keys: value bits, then the P/Q tie rule, then
    // the point index.
    std::vector<std::pair<std::uint64_t, std::uint32_t>> column(n);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::uint32_t id = 0; id < n; ++id) {
        const bool is_p = id < t.n_p;
        const std::uint32_t tie = (strict ? is_p : !is_p) ? 0x80000000u : 0u;
        column[id] = {detail::order_key(static_cast<double>(value(id, k))), tie | id};
      }
      std::sort(column.begin(), column.end());
      for (std::uint32_t r = 0; r < n; ++r) {
        t.order[k][r] = column[r].second & 0x7fffffffu;
        t.rank[k][t.order[k][r]] = r;
      }
    }
  } else {
    std::vector<std::pair<T, std::uint32_t>> column(n);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::uint32_t id = 0; id < n; ++id) column[id] = {value(id, k), id};
      std::sort(column.begin(), column.end(), [&](const auto& x, const auto& y) {
        const auto c = x.first <=> y.first;
        if (c != 0) return c < 0;
        const bool xp = x.second < t.n_p, yp = y.second < t.n_p;
        if (xp != yp) return strict ? !xp : xp;
        return x.second < y.second;
      });
      for (std::uint32_t r = 0; r < n; ++r) {
        t.order[k][r] = column[r].second;
        t.rank[k][t.order[k][r]] = r;
      }
    }
  }
  return t;
}

namespace detail {

// Visits the rank buckets [lo, lo + s) that have a successor, last bucket
// first.  fn(members, bt) gets the (P point, coordinate) pairs ranked inside
// the bucket and Bt, whose row j marks the coordinates where Q_j ranks after
// the bucket.  Bt only grows, so it is maintained incrementally.
template <class Fn>
void for_each_bucket(const RankTable& t, std::size_t s, Fn&& fn) {
  const std::size_t n = t.size(), d = t.order.size();
  BoolMatrix bt(t.n_q, d);
  bool any_b = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> members;
  for (std::size_t lo = ((n - 1) / s) * s; lo >= s; ) {
    // Bucket [lo, lo + s) joins Bt before its predecessor is visited.
    const std::size_t hi = std::min(n, lo + s);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t r = lo; r < hi; ++r) {
        const auto id = t.order[k][r];
        if (!t.is_p(id)) {
          bt.set(id - t.n_p, k);
          any_b = true;
        }
      }
    }
    lo -= s;
    members.clear();
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t r = lo; r < lo + s; ++r) {
        const auto id = t.order[k][r];
        if (t.is_p(id)) members.emplace_back(id, static_cast<std::uint32_t>(k));
      }
    }
    if (!members.empty() && any_b) fn(members, bt);
  }
}

// Calls fn(p_index, q_index, coordinate) for every P point that precedes a Q
// point inside the same rank bucket.
template <class Fn>
void within_bucket_pairs(const RankTable& t, std::size_t s, Fn&& fn) {
  for (std::size_t k = 0; k < t.order.size(); ++k) {
    const auto& ord = t.order[k];
    for (std::size_t r = 0; r < ord.size(); ++r) {
      if (t.is_p(ord[r])) continue;
      const std::size_t q = ord[r] - t.n_p;
      for (std::size_t x = (r / s) * s; x < r; ++x) {
        if (t.is_p(ord[x])) fn(static_cast<std::size_t>(ord[x]), q, k);
      }
    }
  }
}

}  // namespace detail

/// D[i,j] = |{k : P_i[k] <= Q_j[k]}| (or `<` when params.strict).
///
/// Ranks are cut into buckets of size s.  For bucket b, A_b marks the P
/// coordinates ranked inside the bucket and B_b the Q coordinates ranked
/// after it; A_b B_b^T counts the cross-bucket pairs and a walk through each
/// sorted list adds the pairs that share a bucket.
template <class T>
CountMatrix dominance_matrix(const PointSet<T>& p, const PointSet<T>& q,
                             DominanceParams params = {}) {
  const RankTable t = build_rank_table(p, q, params.strict);
  const std::size_t n = t.size();
  const std::size_t d = p.cols();
  CountMatrix result(p.rows(), q.rows(), 0);
  if (n == 0 || d == 0) return result;
  const std::size_t s =
      std::clamp<std::size_t>(params.s ? params.s : default_bucket_size(n, params.omega_hint), 1, n);

  detail::for_each_bucket(t, s, [&](const auto& members, const BoolMatrix& bt) {
    BoolMatrix a(p.rows(), d);
    for (auto [i, k] : members) a.set(i, k);
    const CountMatrix c = count_product_transposed(a, bt);
    for (std::size_t x = 0; x < result.data().size(); ++x) result.data()[x] += c.data()[x];
  });
  // Within-bucket pairs arrive grouped by Q point; accumulate transposed.
  CountMatrix within(q.rows(), p.rows(), 0);
  detail::within_bucket_pairs(t, s, [&](std::size_t i, std::size_t j, std::size_t) { ++within(j, i); });
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < q.rows(); ++j) result(i, j) += within(j, i);
  }
  return result;
}

/// S[i,j] = sum of values(i,k) over the k with P_i[k] <= Q_j[k]; same
/// decomposition as dominance_matrix with real-valued A_b.
template <class T>
ExtMatrix weighted_dominance(const PointSet<T>& p, const PointSet<T>& q, const ExtMatrix& values,
                             DominanceParams params = {}) {
  if (values.rows() != p.rows() || values.cols() != p.cols()) {
    throw DimensionError("weighted_dominance: value matrix shape differs from P");
  }
  const RankTable t = build_rank_table(p, q, params.strict);
  const std::size_t n = t.size();
  const std::size_t d = p.cols();
  ExtMatrix result(p.rows(), q.rows(), 0.0);
  if (n == 0 || d == 0) return result;
  const std::size_t s =
      std::clamp<std::size_t>(params.s ? params.s : default_bucket_size(n, params.omega_hint), 1, n);

  detail::for_each_bucket(t, s, [&](const auto& members, const BoolMatrix& bt) {
    ExtMatrix a(p.rows(), d, 0.0);
    for (auto [i, k] : members) a(i, k) = values(i, k);
    const ExtMatrix c = masked_sum_product(a, bt);
    for (std::size_t x = 0; x < result.data().size(); ++x) result.data()[x] += c.data()[x];
  });
  detail::within_bucket_pairs(t, s, [&](std::size_t i, std::size_t j, std::size_t k) {
    result(i, j) += values(i, k);
  });
  return result;
}

/// C[i,j] = 1 iff min_k A[i,k] + B[k,j] >= K (strict: > K).
///
/// With v_j = -B[.,j] and u_i = A[i,.] - K, the condition holds iff v_j is
/// dominated by u_i in every coordinate.  u_i is formed exactly.
inline BoolMatrix distance_threshold(const ExtMatrix& a, const ExtMatrix& b, double k_value,
                                     bool strict = false, DominanceParams params = {}) {
  detail::check_inner(a.cols(), b.rows(), "distance_threshold");
  if (std::isnan(k_value)) throw std::invalid_argument("distance_threshold: NaN threshold");
  for (double x : a.data()) {
    if (std::isnan(x) || x == -inf) throw std::invalid_argument("distance_threshold: A entry must be real or +inf");
  }
  for (double x : b.data()) {
    if (std::isnan(x) || x == -inf) throw std::invalid_argument("distance_threshold: B entry must be real or +inf");
  }
  const std::size_t m = a.cols();
  BoolMatrix c(a.rows(), b.cols());
  if (strict && k_value == inf) return c;

  PointSet<ExactSum> v(b.cols(), m), u(a.rows(), m);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t k = 0; k < m; ++k) v(j, k) = -ExactSum(b(k, j));
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      u(i, k) = a(i, k) == inf ? ExactSum::infinity(1) : ExactSum(a(i, k)) - k_value;
    }
  }
  params.strict = strict;
  const CountMatrix d = dominance_matrix(v, u, params);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (d(j, i) == m) c.set(i, j);
    }
  }
  return c;
}

struct MsbOptions {
  std::size_t budget = std::size_t{1} << 12;  // threshold evaluations allowed
  DominanceParams dominance{};
};

struct MsbResult {
  std::size_t k_bits = 0;
  double scale = 1.0;              // W
  std::vector<BoolMatrix> bits;    // bits[l] is bit l+1, most significant first
  CountMatrix prefix;              // floor(C * 2^k / W), all ones where C = +inf
  BoolMatrix infinite;             // C[i,j] = +inf
  std::size_t threshold_evaluations = 0;
};

/// Top k_bits bits of every entry of the min-plus product, from threshold
/// matrices only.  Entries must be nonnegative integers or +inf.
inline MsbResult msb_distance_product(const ExtMatrix& a, const ExtMatrix& b, std::size_t k_bits,
                                      MsbOptions options = {}) {
  detail::check_inner(a.cols(), b.rows(), "msb_distance_product");
  if (k_bits == 0) throw std::invalid_argument("msb_distance_product: k_bits must be >= 1");
  if (k_bits >= 63 || ((std::size_t{1} << k_bits) - 1) > options.budget) {
    throw std::length_error("msb_distance_product: 2^k_bits thresholds exceed the budget of " +
                            std::to_string(options.budget));
  }
  auto finite_max = [](const ExtMatrix& m) {
    double best = 0.0;
    for (double x : m.data()) {
      if (x == inf) continue;
      if (!(x >= 0.0) || x != std::floor(x)) {
        throw std::invalid_argument("msb_distance_product: entries must be nonnegative integers or +inf");
      }
      best = std::max(best, x);
    }
    return best;
  };
  const double total = finite_max(a) + finite_max(b);
  double w = 1.0;
  while (w <= total) w *= 2.0;

  MsbResult r;
  r.k_bits = k_bits;
  r.scale = w;
  const std::size_t levels = std::size_t{1} << k_bits;
  // thresholds[m] = C(m W / 2^k), m = 1 .. 2^k - 1; level l uses every
  // 2^(k-l)-th one, so lower levels reuse the thresholds of higher ones.
  std::vector<BoolMatrix> thresholds(levels);
  for (std::size_t m = 1; m < levels; ++m) {
    thresholds[m] = distance_threshold(a, b, static_cast<double>(m) * w / static_cast<double>(levels),
                                       false, options.dominance);
    ++r.threshold_evaluations;
  }
  r.infinite = distance_threshold(a, b, inf, false, options.dominance);
  ++r.threshold_evaluations;

  const std::size_t rows = a.rows(), cols = b.cols();
  for (std::size_t l = 1; l <= k_bits; ++l) {
    const std::size_t step = levels >> l;  // index distance between level-l thresholds
    const std::size_t count = std::size_t{1} << l;
    BoolMatrix bit(rows, cols);
    // bit l = OR over odd s of C(s W/2^l) and not C((s+1) W/2^l).
    for (std::size_t s = 1; s < count; s += 2) {
      const BoolMatrix& lo = thresholds[s * step];
      const BoolMatrix* hi = (s + 1 < count) ? &thresholds[(s + 1) * step] : nullptr;
      for (std::size_t i = 0; i < rows; ++i) {
        auto out = bit.row_words(i);
        auto lw = lo.row_words(i);
        for (std::size_t x = 0; x < out.size(); ++x) {
          out[x] |= lw[x] & (hi ? ~hi->row_words(i)[x] : ~std::uint64_t{0});
        }
      }
    }
    // Infinite entries read as all ones.
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (r.infinite.get(i, j)) bit.set(i, j);
      }
    }
    r.bits.push_back(std::move(bit));
  }
  r.prefix = CountMatrix(rows, cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint32_t v = 0;
      for (std::size_t l = 0; l < k_bits; ++l) v = (v << 1) | (r.bits[l].get(i, j) ? 1u : 0u);
      r.prefix(i, j) = v;
    }
  }
  return r;
}

}  // namespace hsub
