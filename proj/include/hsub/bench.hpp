#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsub/dominance.hpp"
#include "hsub/extmat.hpp"
#include "hsub/rng.hpp"

namespace hsub::bench {

struct Row {
  std::string suite;
  std::size_t n = 0;
  double fast_ms = 0.0;
  double naive_ms = 0.0;
  std::string note;
  bool agree = true;

  double speedup() const { return fast_ms > 0.0 ? naive_ms / fast_ms : 0.0; }
};

template <class Fn>
double time_ms(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline BoolMatrix random_bool(std::size_t r, std::size_t c, double density, Rng& rng) {
  BoolMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (rng.bernoulli(density)) m.set(i, j);
    }
  }
  return m;
}

/// Packed product against a byte-per-entry (i, k, j) triple loop.
inline Row boolean_product(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const BoolMatrix a = random_bool(n, n, 0.5, rng), b = random_bool(n, n, 0.5, rng);
  std::vector<std::uint8_t> ab(n * n), bb(n * n), cb(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ab[i * n + j] = a.get(i, j);
      bb[i * n + j] = b.get(i, j);
    }
  }
  BoolMatrix c;
  Row row{"bool", n};
  row.fast_ms = time_ms([&] { c = bool_product(a, b); });
  row.naive_ms = time_ms([&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint8_t x = ab[i * n + k];
        std::uint8_t* ci = &cb[i * n];
        const std::uint8_t* bk = &bb[k * n];
        for (std::size_t j = 0; j < n; ++j) ci[j] |= static_cast<std::uint8_t>(x & bk[j]);
      }
    }
  });
  for (std::size_t i = 0; i < n && row.agree; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c.get(i, j) != (cb[i * n + j] != 0)) {
        row.agree = false;
        break;
      }
    }
  }
  return row;
}

/// Bucketed dominance at the fastest s of a small sweep against the
/// O(n^2 d) pairwise counter, n = d.
inline Row dominance(std::size_t n, std::uint64_t seed, std::vector<std::size_t> sweep = {}) {
  Rng rng(seed);
  PointSet<double> p(n, n), q(n, n);
  for (auto& x : p.data()) x = static_cast<double>(rng.below(1000));
  for (auto& x : q.data()) x = static_cast<double>(rng.below(1000));
  if (sweep.empty()) {
    for (std::size_t s = 16; s <= 2 * n; s *= 2) sweep.push_back(s);
  }
  Row row{"dominance", n};
  CountMatrix fast;
  row.fast_ms = -1.0;
  for (std::size_t s : sweep) {
    DominanceParams params;
    params.s = s;
    CountMatrix d;
    const double ms = time_ms([&] { d = dominance_matrix(p, q, params); });
    if (row.fast_ms < 0.0 || ms < row.fast_ms) {
      row.fast_ms = ms;
      row.note = "s=" + std::to_string(s);
      fast = std::move(d);
    }
  }
  CountMatrix naive(n, n, 0);
  row.naive_ms = time_ms([&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t c = 0;
        for (std::size_t k = 0; k < n; ++k) c += p(i, k) <= q(j, k);
        naive(i, j) = c;
      }
    }
  });
  row.agree = fast == naive;
  return row;
}

/// Blocked min-plus product against the plain (i, j, k) loop.
inline Row min_plus(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  ExtMatrix a(n, n), b(n, n);
  for (auto& x : a.data()) x = rng.bernoulli(0.1) ? inf : static_cast<double>(rng.below(1000));
  for (auto& x : b.data()) x = rng.bernoulli(0.1) ? inf : static_cast<double>(rng.below(1000));
  Row row{"minplus", n};
  ExtMatrix fast, naive(n, n, inf);
  row.fast_ms = time_ms([&] { fast = min_plus_product(a, b); });
  row.naive_ms = time_ms([&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double m = inf;
        for (std::size_t k = 0; k < n; ++k) m = std::min(m, a(i, k) + b(k, j));
        naive(i, j) = m;
      }
    }
  });
  row.agree = fast == naive;
  return row;
}

inline Row run(const std::string& suite, std::size_t n, std::uint64_t seed) {
  if (suite == "bool") return boolean_product(n, seed);
  if (suite == "dominance") return dominance(n, seed);
  if (suite == "minplus") return min_plus(n, seed);
  throw std::invalid_argument("unknown bench suite '" + suite + "' (bool, dominance, minplus)");
}

}  // namespace hsub::bench
