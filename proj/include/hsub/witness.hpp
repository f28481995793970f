#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hsub/extmat.hpp"

namespace hsub {

struct PlanParameters {
  double omega = 3.0;
  int h = 3;
  int a = 1, b = 1, c = 1;
  double mu = 0.0;
  int b1 = 0;
  double s1 = 0.0;
  double s2 = 0.0;
  int s2_b = 0;  // the b attaining s2
  double t = 0.0;
  bool s1_branch = true;
};

/// Solves the small integer program defining t(omega, h) by enumeration.
inline PlanParameters plan_parameters(double omega, int h) {
  if (h < 3) throw std::invalid_argument("plan_parameters: h must be at least 3");
  if (!(omega >= 2.0 && omega <= 3.0)) throw std::invalid_argument("plan_parameters: omega must lie in [2, 3]");
  PlanParameters p;
  p.omega = omega;
  p.h = h;
  const double q = 4.0 - omega;
  auto half = [h](int b) { return (h - b) / 2; };

  p.b1 = 0;
  for (int b = 1; b <= h; ++b) {
    if (b / q <= half(b)) p.b1 = b;
  }
  p.s1 = h - p.b1 + p.b1 / q;

  p.s2 = std::numeric_limits<double>::infinity();
  for (int b = 1; b <= h - 2; ++b) {
    if (half(b) > b) continue;
    const double v = std::max<double>(h - b + half(b), h - (3.0 - omega) * half(b));
    if (v < p.s2) {
      p.s2 = v;
      p.s2_b = b;
    }
  }

  if (p.s1 <= p.s2) {
    p.s1_branch = true;
    p.t = p.s1;
    p.b = p.b1;
    p.a = half(p.b1);
    p.c = h - p.b1 - p.a;
    p.mu = p.b1 / q;
  } else {
    p.s1_branch = false;
    p.t = p.s2;
    p.b = p.s2_b;
    p.a = half(p.b);
    p.c = h - p.b - p.a;
    p.mu = p.a;
  }
  return p;
}

/// w(i,j) = largest 1-based witness k of (AB)[i,j], or 0.
using WitnessMatrix = DenseMatrix<std::uint32_t>;

inline std::size_t default_witness_width(std::size_t inner) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(inner)))));
}

namespace detail {

inline void check_width(std::size_t width, std::size_t inner) {
  if (width == 0 || (inner > 0 && width > inner)) {
    throw std::invalid_argument("witness: bucket width must lie in [1, inner dimension]");
  }
}

// Count products of the column buckets [r w, (r+1) w) of A and the matching
// row buckets of B.
struct BucketProducts {
  std::size_t width = 1;
  std::vector<CountMatrix> counts;
};

inline BucketProducts bucket_products(const BoolMatrix& a, const BoolMatrix& b, std::size_t width) {
  BucketProducts bp;
  bp.width = width;
  const BoolMatrix bt = b.transposed();
  for (std::size_t lo = 0; lo < a.cols(); lo += width) {
    const std::size_t hi = std::min(a.cols(), lo + width);
    bp.counts.push_back(count_product_transposed(a.column_slice(lo, hi), bt.column_slice(lo, hi)));
  }
  return bp;
}

}  // namespace detail

/// Maximum witnesses via bucketed count products: the last bucket with a
/// nonzero count holds the witness, found by a backward scan of that bucket.
inline WitnessMatrix max_witness_product(const BoolMatrix& a, const BoolMatrix& b, std::size_t width) {
  detail::check_inner(a.cols(), b.rows(), "max_witness_product");
  detail::check_width(width, a.cols());
  WitnessMatrix w(a.rows(), b.cols(), 0);
  if (a.cols() == 0) return w;
  const auto bp = detail::bucket_products(a, b, width);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t r = bp.counts.size(); r-- > 0;) {
        if (bp.counts[r](i, j) == 0) continue;
        const std::size_t lo = r * width, hi = std::min(a.cols(), lo + width);
        for (std::size_t k = hi; k-- > lo;) {
          if (a.get(i, k) && b.get(k, j)) {
            w(i, j) = static_cast<std::uint32_t>(k + 1);
            break;
          }
        }
        break;
      }
    }
  }
  return w;
}

inline WitnessMatrix max_witness_product(const BoolMatrix& a, const BoolMatrix& b) {
  return max_witness_product(a, b, default_witness_width(a.cols()));
}

struct Interval {
  double lo = -inf;
  double hi = inf;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval empty() { return {1.0, 0.0, true, true}; }

  bool contains(double x) const {
    return (lo_closed ? x >= lo : x > lo) && (hi_closed ? x <= hi : x < hi);
  }
};

namespace detail {

// Index range [first, last) of the sorted weights lying in `iv`.
inline std::pair<std::size_t, std::size_t> interval_range(std::span<const double> w, const Interval& iv) {
  auto first = iv.lo_closed ? std::lower_bound(w.begin(), w.end(), iv.lo)
                            : std::upper_bound(w.begin(), w.end(), iv.lo);
  auto last = iv.hi_closed ? std::upper_bound(w.begin(), w.end(), iv.hi)
                           : std::lower_bound(w.begin(), w.end(), iv.hi);
  if (last < first) last = first;
  return {static_cast<std::size_t>(first - w.begin()), static_cast<std::size_t>(last - w.begin())};
}

}  // namespace detail

/// out[i,j] = 1 iff some k has A[i,k] = B[k,j] = 1 and w(k) in interval(i,j).
/// `interval` is a callable (i, j) -> Interval.  w must be nondecreasing.
template <class IntervalFn>
BoolMatrix interval_witness(const BoolMatrix& a, const BoolMatrix& b, std::span<const double> w,
                            IntervalFn&& interval, std::size_t width) {
  detail::check_inner(a.cols(), b.rows(), "interval_witness");
  if (w.size() != a.cols()) throw DimensionError("interval_witness: weight vector length differs");
  if (!std::is_sorted(w.begin(), w.end())) throw std::invalid_argument("interval_witness: weights not sorted");
  BoolMatrix out(a.rows(), b.cols());
  if (a.cols() == 0) return out;
  detail::check_width(width, a.cols());
  const auto bp = detail::bucket_products(a, b, width);
  const std::size_t p = bp.counts.size();
  // prefix[r](i,j) = hits in buckets [0, r).
  std::vector<CountMatrix> prefix(p + 1, CountMatrix(a.rows(), b.cols(), 0));
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t x = 0; x < prefix[r].data().size(); ++x) {
      prefix[r + 1].data()[x] = prefix[r].data()[x] + bp.counts[r].data()[x];
    }
  }
  auto scan = [&](std::size_t i, std::size_t j, std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      if (a.get(i, k) && b.get(k, j)) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const auto [first, last] = detail::interval_range(w, interval(i, j));
      if (first >= last) continue;
      const std::size_t rb = (first + width - 1) / width;  // first full bucket
      const std::size_t re = last / width;                  // one past the last full bucket
      bool hit;
      if (rb >= re) {
        hit = scan(i, j, first, last);
      } else {
        hit = prefix[re](i, j) != prefix[rb](i, j) || scan(i, j, first, rb * width) ||
              scan(i, j, re * width, last);
      }
      if (hit) out.set(i, j);
    }
  }
  return out;
}

inline BoolMatrix interval_witness(const BoolMatrix& a, const BoolMatrix& b, std::span<const double> w,
                                   const Interval& iv, std::size_t width) {
  return interval_witness(a, b, w, [&iv](std::size_t, std::size_t) { return iv; }, width);
}

inline BoolMatrix interval_witness(const BoolMatrix& a, const BoolMatrix& b, std::span<const double> w,
                                   const Interval& iv) {
  return interval_witness(a, b, w, iv, default_witness_width(a.cols()));
}

/// Per (i,j), the up to k largest 1-based witnesses in descending order.
struct TopWitnesses {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::uint32_t>> lists;

  const std::vector<std::uint32_t>& at(std::size_t i, std::size_t j) const { return lists[i * cols + j]; }
};

inline TopWitnesses top_k_witnesses(const BoolMatrix& a, const BoolMatrix& b, std::size_t k,
                                    std::size_t width) {
  detail::check_inner(a.cols(), b.rows(), "top_k_witnesses");
  if (k == 0) throw std::invalid_argument("top_k_witnesses: k must be at least 1");
  TopWitnesses t;
  t.rows = a.rows();
  t.cols = b.cols();
  t.lists.resize(t.rows * t.cols);
  if (a.cols() == 0) return t;
  detail::check_width(width, a.cols());
  const auto bp = detail::bucket_products(a, b, width);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto& list = t.lists[i * t.cols + j];
      for (std::size_t r = bp.counts.size(); r-- > 0 && list.size() < k;) {
        if (bp.counts[r](i, j) == 0) continue;
        const std::size_t lo = r * width, hi = std::min(a.cols(), lo + width);
        for (std::size_t x = hi; x-- > lo && list.size() < k;) {
          if (a.get(i, x) && b.get(x, j)) list.push_back(static_cast<std::uint32_t>(x + 1));
        }
      }
    }
  }
  return t;
}

inline TopWitnesses top_k_witnesses(const BoolMatrix& a, const BoolMatrix& b, std::size_t k) {
  return top_k_witnesses(a, b, k, default_witness_width(a.cols()));
}

}  // namespace hsub
