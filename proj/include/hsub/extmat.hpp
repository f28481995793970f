#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsub/graph.hpp"
#include "hsub/parallel.hpp"

namespace hsub {

constexpr double inf = std::numeric_limits<double>::infinity();

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Reals extended with +inf (min-plus identity) and -inf (max-plus identity).
using ExtMatrix = DenseMatrix<double>;
using CountMatrix = DenseMatrix<std::uint32_t>;

/// 0-1 matrix, each row packed into 64-bit words; bits past `cols` stay zero.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}
  BoolMatrix(std::initializer_list<std::initializer_list<int>> init)
      : BoolMatrix(init.size(), init.size() ? init.begin()->size() : 0) {
    std::size_t i = 0;
    for (auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      std::size_t j = 0;
      for (int x : row) set(i, j++, x != 0);
      ++i;
    }
  }

  static BoolMatrix identity(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    auto& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const std::uint64_t> row_words(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::span<std::uint64_t> row_words(std::size_t i) { return {bits_.data() + i * words_, words_}; }

  bool row_any(std::size_t i) const {
    for (auto w : row_words(i)) {
      if (w) return true;
    }
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  BoolMatrix transposed() const {
    BoolMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t wi = 0; wi < words_; ++wi) {
        std::uint64_t w = bits_[i * words_ + wi];
        while (w) {
          const auto b = static_cast<std::size_t>(std::countr_zero(w));
          t.set(wi * 64 + b, i);
          w &= w - 1;
        }
      }
    }
    return t;
  }

  /// Columns [begin, end) as a new matrix.
  BoolMatrix column_slice(std::size_t begin, std::size_t end) const {
    BoolMatrix s(rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = begin; j < end; ++j) {
        if (get(i, j)) s.set(i, j - begin);
      }
    }
    return s;
  }

  /// Rows [begin, end) as a new matrix.
  BoolMatrix row_slice(std::size_t begin, std::size_t end) const {
    BoolMatrix s(end - begin, cols_);
    std::copy(bits_.begin() + static_cast<std::ptrdiff_t>(begin * words_),
              bits_.begin() + static_cast<std::ptrdiff_t>(end * words_), s.bits_.begin());
    return s;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline BoolMatrix adjacency_matrix(const Graph& g) {
  BoolMatrix a(g.n(), g.n());
  for (const auto& e : g.edges()) {
    a.set(e.u - 1, e.v - 1);
    a.set(e.v - 1, e.u - 1);
  }
  return a;
}

namespace detail {
inline void check_inner(std::size_t a_cols, std::size_t b_rows, const char* op) {
  if (a_cols != b_rows) {
    throw DimensionError(std::string(op) + ": inner dimensions differ (" + std::to_string(a_cols) +
                         " vs " + std::to_string(b_rows) + ")");
  }
}
}  // namespace detail

/// C[i,j] = OR_k A[i,k] AND B[k,j]; row i of C is the OR of the B rows
/// selected by row i of A.
inline BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  detail::check_inner(a.cols(), b.rows(), "bool_product");
  BoolMatrix c(a.rows(), b.cols());
  parallel_rows(a.rows(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto out = c.row_words(i);
      auto arow = a.row_words(i);
      for (std::size_t wi = 0; wi < arow.size(); ++wi) {
        std::uint64_t w = arow[wi];
        while (w) {
          const std::size_t k = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
          auto brow = b.row_words(k);
          for (std::size_t x = 0; x < out.size(); ++x) out[x] |= brow[x];
          w &= w - 1;
        }
      }
    }
  });
  return c;
}

/// C[i,j] = popcount(A row i AND BT row j), i.e. A * BT^T over the integers.
inline CountMatrix count_product_transposed(const BoolMatrix& a, const BoolMatrix& bt) {
  detail::check_inner(a.cols(), bt.cols(), "count_product");
  CountMatrix c(a.rows(), bt.rows());
  parallel_rows(a.rows(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto arow = a.row_words(i);
      bool any = false;
      for (auto w : arow) any = any || w;
      if (!any) continue;
      for (std::size_t j = 0; j < bt.rows(); ++j) {
        auto brow = bt.row_words(j);
        std::uint32_t s = 0;
        for (std::size_t x = 0; x < arow.size(); ++x) {
          s += static_cast<std::uint32_t>(std::popcount(arow[x] & brow[x]));
        }
        c(i, j) = s;
      }
    }
  });
  return c;
}

/// C[i,j] = |{k : A[i,k] = B[k,j] = 1}|.
inline CountMatrix count_product(const BoolMatrix& a, const BoolMatrix& b) {
  detail::check_inner(a.cols(), b.rows(), "count_product");
  return count_product_transposed(a, b.transposed());
}

namespace detail {

// Saturating additions: the operation's identity absorbs.
inline double min_plus_add(double x, double y) {
  if (x == inf || y == inf) return inf;
  return x + y;
}
inline double max_plus_add(double x, double y) {
  if (x == -inf || y == -inf) return -inf;
  return x + y;
}

inline void check_no_nan(const ExtMatrix& m, const char* op) {
  for (double x : m.data()) {
    if (std::isnan(x)) throw std::invalid_argument(std::string(op) + ": NaN entry");
  }
}

/// Blocked (i, k, j) loop.  Each C entry is reduced with the same comparison
/// over the same candidate sums in every blocking, so the result is exact.
template <bool Max>
ExtMatrix semiring_product(const ExtMatrix& a, const ExtMatrix& b, std::size_t block,
                           const char* op) {
  check_inner(a.cols(), b.rows(), op);
  check_no_nan(a, op);
  check_no_nan(b, op);
  const double identity = Max ? -inf : inf;
  ExtMatrix c(a.rows(), b.cols(), identity);
  const std::size_t n1 = a.rows(), n2 = a.cols(), n3 = b.cols();
  block = std::max<std::size_t>(1, block);
  parallel_rows(n1, [&](std::size_t begin, std::size_t end) {
    for (std::size_t ii = begin; ii < end; ii += block) {
      const std::size_t ie = std::min(end, ii + block);
      for (std::size_t kk = 0; kk < n2; kk += block) {
        const std::size_t ke = std::min(n2, kk + block);
        for (std::size_t jj = 0; jj < n3; jj += block) {
          const std::size_t je = std::min(n3, jj + block);
          for (std::size_t i = ii; i < ie; ++i) {
            double* crow = &c(i, 0);
            for (std::size_t k = kk; k < ke; ++k) {
              const double aik = a(i, k);
              if (aik == identity) continue;
              const double* brow = &b(k, 0);
              for (std::size_t j = jj; j < je; ++j) {
                const double s = Max ? max_plus_add(aik, brow[j]) : min_plus_add(aik, brow[j]);
                if (Max ? (s > crow[j]) : (s < crow[j])) crow[j] = s;
              }
            }
          }
        }
      }
    }
  });
  return c;
}

}  // namespace detail

constexpr std::size_t default_block = 64;

/// Distance product: C[i,j] = min_k A[i,k] + B[k,j], +inf absorbing.
inline ExtMatrix min_plus_product(const ExtMatrix& a, const ExtMatrix& b,
                                  std::size_t block = default_block) {
  return detail::semiring_product<false>(a, b, block, "min_plus_product");
}

/// C[i,j] = max_k A[i,k] + B[k,j], -inf absorbing.
inline ExtMatrix max_plus_product(const ExtMatrix& a, const ExtMatrix& b,
                                  std::size_t block = default_block) {
  return detail::semiring_product<true>(a, b, block, "max_plus_product");
}

/// C[i,j] = sum of A[i,k] over the k with M[j,k] = 1.  Only additions.
inline ExtMatrix masked_sum_product(const ExtMatrix& a, const BoolMatrix& mask) {
  if (a.cols() != mask.cols()) {
    throw DimensionError("masked_sum_product: column counts differ");
  }
  ExtMatrix c(a.rows(), mask.rows(), 0.0);
  parallel_rows(a.rows(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto arow = a.row(i);
      for (std::size_t j = 0; j < mask.rows(); ++j) {
        auto mrow = mask.row_words(j);
        double s = 0.0;
        for (std::size_t wi = 0; wi < mrow.size(); ++wi) {
          std::uint64_t w = mrow[wi];
          while (w) {
            s += arow[wi * 64 + static_cast<std::size_t>(std::countr_zero(w))];
            w &= w - 1;
          }
        }
        c(i, j) = s;
      }
    }
  });
  return c;
}

inline ExtMatrix min_plus_identity(std::size_t n) {
  ExtMatrix m(n, n, inf);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0.0;
  return m;
}

inline ExtMatrix max_plus_identity(std::size_t n) {
  ExtMatrix m(n, n, -inf);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0.0;
  return m;
}

// ---------------------------------------------------------------------------
// Text format: "m <rows> <cols>" followed by row-major entries; '#' starts a
// comment running to the end of the line.

namespace detail {
inline bool next_token(std::istream& in, std::string& tok) {
  while (in >> tok) {
    if (tok.front() != '#') return true;
    std::string rest;
    std::getline(in, rest);
  }
  return false;
}
}  // namespace detail

inline ExtMatrix read_ext_matrix(std::istream& in) {
  std::string tag, r, c;
  if (!detail::next_token(in, tag) || tag != "m" || !detail::next_token(in, r) || !detail::next_token(in, c)) {
    throw std::runtime_error("matrix: expected 'm <rows> <cols>' header");
  }
  auto rows = parse_integer<std::size_t>(r), cols = parse_integer<std::size_t>(c);
  if (!rows || !cols) throw std::runtime_error("matrix: malformed dimensions");
  ExtMatrix m(*rows, *cols);
  for (std::size_t i = 0; i < *rows; ++i) {
    for (std::size_t j = 0; j < *cols; ++j) {
      std::string tok;
      if (!detail::next_token(in, tok)) throw std::runtime_error("matrix: too few entries");
      auto x = parse_real(tok);
      if (!x) throw std::runtime_error("matrix: malformed entry '" + tok + "'");
      m(i, j) = *x;
    }
  }
  return m;
}

inline ExtMatrix parse_ext_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_ext_matrix(in);
}

inline BoolMatrix to_bool_matrix(const ExtMatrix& m) {
  BoolMatrix b(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0 && m(i, j) != 1.0) throw std::runtime_error("matrix: expected 0/1 entries");
      b.set(i, j, m(i, j) == 1.0);
    }
  }
  return b;
}

inline void write_matrix(std::ostream& out, const ExtMatrix& m) {
  out << "m " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << format_real(m(i, j));
    out << '\n';
  }
}

template <class Int>
void write_matrix(std::ostream& out, const DenseMatrix<Int>& m) {
  out << "m " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

inline void write_matrix(std::ostream& out, const BoolMatrix& m) {
  out << "m " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << (m.get(i, j) ? 1 : 0);
    out << '\n';
  }
}

}  // namespace hsub
