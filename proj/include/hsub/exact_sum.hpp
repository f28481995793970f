#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>

namespace hsub {

#ifdef HSUB_COUNT_COMPARISONS
inline std::uint64_t& comparison_counter() {
  static thread_local std::uint64_t count = 0;
  return count;
}
#define HSUB_COUNT_COMPARISON() (++::hsub::comparison_counter())
#else
#define HSUB_COUNT_COMPARISON() ((void)0)
#endif

/// Exact sum of a handful of doubles, kept as a nonoverlapping expansion
/// (components in increasing magnitude, zeros eliminated), or a signed
/// infinity.  Only additions and comparisons are performed on the inputs.
///
/// Threshold tests such as `K - w(i) <= w(j) + w(k)` must agree with the
/// recomputed triangle weight; rounding each side independently does not
/// guarantee that, so the weight-sensitive routines compare ExactSum values.
class ExactSum {
 public:
  static constexpr std::size_t capacity = 16;

  constexpr ExactSum() = default;

  explicit ExactSum(double x) {
    if (std::isnan(x)) throw std::invalid_argument("ExactSum: NaN");
    if (std::isinf(x)) {
      infinite_ = x > 0 ? 1 : -1;
    } else if (x != 0.0) {
      parts_[0] = x;
      size_ = 1;
    }
  }

  ExactSum(std::initializer_list<double> terms) {
    for (double t : terms) *this += t;
  }

  static ExactSum infinity(int sign) {
    ExactSum s;
    s.infinite_ = sign >= 0 ? 1 : -1;
    return s;
  }

  bool is_infinite() const { return infinite_ != 0; }
  int infinity_sign() const { return infinite_; }

  ExactSum& operator+=(double x) {
    if (std::isnan(x)) throw std::invalid_argument("ExactSum: NaN");
    if (std::isinf(x)) {
      absorb_infinity(x > 0 ? 1 : -1);
      return *this;
    }
    if (infinite_ != 0) return *this;
    grow(x);
    return *this;
  }

  ExactSum& operator+=(const ExactSum& other) {
    if (other.infinite_ != 0) {
      absorb_infinity(other.infinite_);
      return *this;
    }
    if (infinite_ != 0) return *this;
    for (std::size_t i = 0; i < other.size_; ++i) grow(other.parts_[i]);
    return *this;
  }

  ExactSum& operator-=(const ExactSum& other) { return *this += -other; }
  ExactSum& operator-=(double x) { return *this += -x; }

  ExactSum operator-() const {
    ExactSum r = *this;
    r.infinite_ = static_cast<std::int8_t>(-infinite_);
    for (std::size_t i = 0; i < r.size_; ++i) r.parts_[i] = -r.parts_[i];
    return r;
  }

  friend ExactSum operator+(ExactSum a, const ExactSum& b) { return a += b; }
  friend ExactSum operator+(ExactSum a, double b) { return a += b; }
  friend ExactSum operator-(ExactSum a, const ExactSum& b) { return a -= b; }
  friend ExactSum operator-(ExactSum a, double b) { return a -= b; }

  /// Sign of the exact value: -1, 0 or +1.
  int sign() const {
    if (infinite_ != 0) return infinite_;
    if (size_ == 0) return 0;
    return parts_[size_ - 1] > 0 ? 1 : -1;
  }

  /// Nearest-ish double (sum of components from smallest to largest).
  double approx() const {
    if (infinite_ != 0) {
      return infinite_ > 0 ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
    }
    double s = 0.0;
    for (std::size_t i = 0; i < size_; ++i) s += parts_[i];
    return s;
  }

  friend std::strong_ordering operator<=>(const ExactSum& a, const ExactSum& b) {
    HSUB_COUNT_COMPARISON();
    if (a.infinite_ != 0 || b.infinite_ != 0) {
      return a.infinite_ <=> b.infinite_;
    }
    // Filter: the approximations carry a relative error of a few ulps.
    const double da = a.approx();
    const double db = b.approx();
    const double margin = 1e-12 * (std::fabs(da) + std::fabs(db));
    if (da - db > margin) return std::strong_ordering::greater;
    if (db - da > margin) return std::strong_ordering::less;
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend bool operator==(const ExactSum& a, const ExactSum& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  static void two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    const double bv = s - a;
    const double av = s - bv;
    err = (a - av) + (b - bv);
  }

  void absorb_infinity(int sign) {
    if (infinite_ != 0 && infinite_ != sign) {
      throw std::domain_error("ExactSum: +inf + -inf");
    }
    infinite_ = static_cast<std::int8_t>(sign);
    size_ = 0;
  }

  // Shewchuk's GROW-EXPANSION with zero elimination.
  void grow(double b) {
    std::array<double, capacity> out{};
    std::size_t n = 0;
    double q = b;
    for (std::size_t i = 0; i < size_; ++i) {
      double s = 0.0, h = 0.0;
      two_sum(q, parts_[i], s, h);
      q = s;
      if (h != 0.0) out[n++] = h;
    }
    if (q != 0.0) {
      if (n == capacity) throw std::overflow_error("ExactSum: expansion capacity exceeded");
      out[n++] = q;
    }
    parts_ = out;
    size_ = static_cast<std::uint8_t>(n);
  }

  std::array<double, capacity> parts_{};
  std::uint8_t size_ = 0;
  std::int8_t infinite_ = 0;
};

}  // namespace hsub
