#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hsub/dominance.hpp"
#include "hsub/extmat.hpp"
#include "hsub/graph.hpp"
#include "hsub/rng.hpp"

namespace hsub {

/// One side of the market: item -> price (buyers) or reserve (sellers).
using PriceMap = std::map<std::size_t, double>;

struct MarketInstance {
  std::size_t k = 0;
  std::vector<PriceMap> buyers;
  std::vector<PriceMap> sellers;

  std::size_t n() const { return buyers.size(); }

  void validate() const {
    if (buyers.size() != sellers.size()) throw std::invalid_argument("market: buyer and seller counts differ");
    auto check = [this](const std::vector<PriceMap>& side, const char* who) {
      for (const auto& m : side) {
        for (const auto& [item, x] : m) {
          if (item == 0 || item > k) throw std::invalid_argument(std::string("market: ") + who + " item out of range");
          if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument(std::string("market: ") + who + " price must be positive");
        }
      }
    };
    check(buyers, "buyer");
    check(sellers, "seller");
  }
};

struct TransactionMatrices {
  CountMatrix count;  // |C_ij|
  ExtMatrix price;    // P_ij
  ExtMatrix reserve;  // R_ij
};

/// C, P and R from three dominance computations.  Seller vectors sigma hold
/// the reserve or +inf, buyer vectors beta the price or -inf; item l is
/// traded between i and j iff sigma_j[l] <= beta_i[l].  Sums are formed in
/// bucket order, so they match the item-order definition exactly when all
/// partial sums are representable (e.g. integer or dyadic prices).
inline TransactionMatrices transaction_matrices(const MarketInstance& inst, DominanceParams params = {}) {
  inst.validate();
  const std::size_t n = inst.n(), k = inst.k;
  PointSet<double> beta(n, k, -inf), sigma(n, k, inf), neg_beta(n, k, inf), neg_sigma(n, k, -inf);
  ExtMatrix price_vals(n, k, 0.0), reserve_vals(n, k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [l, p] : inst.buyers[i]) {
      beta(i, l - 1) = p;
      neg_beta(i, l - 1) = -p;
      price_vals(i, l - 1) = p;
    }
    for (const auto& [l, v] : inst.sellers[i]) {
      sigma(i, l - 1) = v;
      neg_sigma(i, l - 1) = -v;
      reserve_vals(i, l - 1) = v;
    }
  }
  params.strict = false;
  TransactionMatrices tm;
  const CountMatrix c_t = dominance_matrix(sigma, beta, params);
  const ExtMatrix r_t = weighted_dominance(sigma, beta, reserve_vals, params);
  tm.price = weighted_dominance(neg_beta, neg_sigma, price_vals, params);
  tm.count = CountMatrix(n, n, 0);
  tm.reserve = ExtMatrix(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tm.count(i, j) = c_t(j, i);
      tm.reserve(i, j) = r_t(j, i);
    }
  }
  return tm;
}

/// f(P, R, |C|); larger is better.
using PreferenceFn = std::function<double(double p, double r, double c)>;

namespace detail {

// Recursive-descent evaluator for expressions over P, R, C (or |C|) with
// numbers, parentheses, unary minus, + - *, and comparisons yielding 0/1.
class PrefExpr {
 public:
  explicit PrefExpr(std::string_view text) : s_(text) {
    root_ = comparison();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  double operator()(double p, double r, double c) const { return root_({p, r, c}); }

 private:
  struct Vars {
    double p, r, c;
  };
  using Node = std::function<double(const Vars&)>;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("preference expression: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Node comparison() {
    Node lhs = sum();
    static constexpr std::string_view ops[] = {"<=", ">=", "==", "!=", "<", ">"};
    for (auto op : ops) {
      if (!eat(op)) continue;
      Node rhs = sum();
      if (op == "<=") return [lhs, rhs](const Vars& v) { return double(lhs(v) <= rhs(v)); };
      if (op == ">=") return [lhs, rhs](const Vars& v) { return double(lhs(v) >= rhs(v)); };
      if (op == "==") return [lhs, rhs](const Vars& v) { return double(lhs(v) == rhs(v)); };
      if (op == "!=") return [lhs, rhs](const Vars& v) { return double(lhs(v) != rhs(v)); };
      if (op == "<") return [lhs, rhs](const Vars& v) { return double(lhs(v) < rhs(v)); };
      return [lhs, rhs](const Vars& v) { return double(lhs(v) > rhs(v)); };
    }
    return lhs;
  }

  Node sum() {
    Node acc = product();
    for (;;) {
      skip();
      if (eat("+")) {
        Node rhs = product();
        acc = [acc, rhs](const Vars& v) { return acc(v) + rhs(v); };
      } else if (pos_ < s_.size() && s_[pos_] == '-') {
        ++pos_;
        Node rhs = product();
        acc = [acc, rhs](const Vars& v) { return acc(v) - rhs(v); };
      } else {
        return acc;
      }
    }
  }

  Node product() {
    Node acc = unary();
    while (eat("*")) {
      Node rhs = unary();
      acc = [acc, rhs](const Vars& v) { return acc(v) * rhs(v); };
    }
    return acc;
  }

  Node unary() {
    if (eat("-")) {
      Node x = unary();
      return [x](const Vars& v) { return -x(v); };
    }
    return atom();
  }

  Node atom() {
    skip();
    if (eat("(")) {
      Node x = comparison();
      if (!eat(")")) fail("expected ')'");
      return x;
    }
    if (eat("|C|") || eat("C")) return [](const Vars& v) { return v.c; };
    if (eat("P")) return [](const Vars& v) { return v.p; };
    if (eat("R")) return [](const Vars& v) { return v.r; };
    std::size_t end = pos_;
    while (end < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.')) ++end;
    if (end == pos_) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    auto x = parse_real(s_.substr(pos_, end - pos_));
    if (!x) fail("malformed number");
    pos_ = end;
    const double val = *x;
    return [val](const Vars&) { return val; };
  }

  std::string s_;
  std::size_t pos_ = 0;
  Node root_;
};

}  // namespace detail

/// "count" (|C|), "surplus" (P - R), "price" (P) or "expr:<expression>".
inline PreferenceFn parse_preference(std::string_view spec) {
  if (spec == "count") return [](double, double, double c) { return c; };
  if (spec == "surplus") return [](double p, double r, double) { return p - r; };
  if (spec == "price") return [](double p, double, double) { return p; };
  if (spec.substr(0, 5) == "expr:") {
    auto e = std::make_shared<detail::PrefExpr>(spec.substr(5));
    return [e](double p, double r, double c) { return (*e)(p, r, c); };
  }
  throw std::invalid_argument("unknown preference '" + std::string(spec) + "'");
}

/// Per-agent preference functions; a single entry applies to every agent.
struct PreferenceSpec {
  std::vector<PreferenceFn> buyer;
  std::vector<PreferenceFn> seller;

  static PreferenceSpec uniform(PreferenceFn f) { return {{f}, {f}}; }
  static PreferenceSpec uniform(PreferenceFn fb, PreferenceFn fs) { return {{fb}, {fs}}; }

  const PreferenceFn& of_buyer(std::size_t i) const { return buyer.size() == 1 ? buyer[0] : buyer.at(i); }
  const PreferenceFn& of_seller(std::size_t j) const { return seller.size() == 1 ? seller[0] : seller.at(j); }
};

/// Evaluated scores: buyer_score(i,j) = f_i(P_ij, R_ij, C_ij) and
/// seller_score(i,j) = g_j(P_ij, R_ij, C_ij).
struct PreferenceScores {
  ExtMatrix buyer_score;
  ExtMatrix seller_score;
};

inline PreferenceScores evaluate_preferences(const TransactionMatrices& tm, const PreferenceSpec& prefs) {
  const std::size_t n = tm.count.rows();
  PreferenceScores s{ExtMatrix(n, n, 0.0), ExtMatrix(n, n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double p = tm.price(i, j), r = tm.reserve(i, j), c = tm.count(i, j);
      s.buyer_score(i, j) = prefs.of_buyer(i)(p, r, c);
      s.seller_score(i, j) = prefs.of_seller(j)(p, r, c);
      if (std::isnan(s.buyer_score(i, j)) || std::isnan(s.seller_score(i, j))) {
        throw std::invalid_argument("preference evaluated to NaN");
      }
    }
  }
  return s;
}

/// buyer -> seller and seller -> buyer, 0-based.
struct Matching {
  std::vector<std::size_t> seller_of;
  std::vector<std::size_t> buyer_of;
};

/// Buyer-proposing deferred acceptance.  Ties in either order go to the
/// smaller index.
inline Matching deferred_acceptance(const PreferenceScores& s) {
  const std::size_t n = s.buyer_score.rows();
  std::vector<std::vector<std::size_t>> lists(n);
  for (std::size_t i = 0; i < n; ++i) {
    lists[i].resize(n);
    std::iota(lists[i].begin(), lists[i].end(), std::size_t{0});
    std::stable_sort(lists[i].begin(), lists[i].end(), [&](std::size_t x, std::size_t y) {
      return s.buyer_score(i, x) > s.buyer_score(i, y);
    });
  }
  // Seller j prefers buyer x to y.
  auto seller_prefers = [&](std::size_t j, std::size_t x, std::size_t y) {
    const double a = s.seller_score(x, j), b = s.seller_score(y, j);
    return a > b || (a == b && x < y);
  };
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  Matching m{std::vector<std::size_t>(n, none), std::vector<std::size_t>(n, none)};
  std::vector<std::size_t> next(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t i = start;
    while (i != none) {
      const std::size_t j = lists[i][next[i]++];
      const std::size_t held = m.buyer_of[j];
      if (held == none) {
        m.buyer_of[j] = i;
        m.seller_of[i] = j;
        i = none;
      } else if (seller_prefers(j, i, held)) {
        m.buyer_of[j] = i;
        m.seller_of[i] = j;
        m.seller_of[held] = none;
        i = held;
      }
    }
  }
  return m;
}

struct MarketResult {
  TransactionMatrices matrices;
  PreferenceScores scores;
  Matching matching;
};

inline MarketResult stable_matching(const MarketInstance& inst, const PreferenceSpec& prefs,
                                    DominanceParams params = {}) {
  MarketResult r;
  r.matrices = transaction_matrices(inst, params);
  r.scores = evaluate_preferences(r.matrices, prefs);
  r.matching = deferred_acceptance(r.scores);
  return r;
}

/// Pairs (i, j), not matched together, where both strictly prefer each other
/// to their partners.
inline std::vector<std::pair<std::size_t, std::size_t>> blocking_pairs(const PreferenceScores& s,
                                                                       const Matching& m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = s.buyer_score.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.seller_of[i] == j) continue;
      const bool buyer_wants = s.buyer_score(i, j) > s.buyer_score(i, m.seller_of[i]);
      const bool seller_wants = s.seller_score(i, j) > s.seller_score(m.buyer_of[j], j);
      if (buyer_wants && seller_wants) out.emplace_back(i, j);
    }
  }
  return out;
}

/// Reads `market <n> <k>`, then `b <i> item:price ...` and
/// `s <j> item:reserve ...` lines (1-based agents and items; '#' comments).
inline MarketInstance parse_market(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  MarketInstance inst;
  bool header = false;
  std::vector<char> seen_b, seen_s;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<std::string> toks;
    for (auto t : detail::split_ws(detail::strip_comment(raw))) toks.emplace_back(t);
    if (toks.empty()) continue;
    if (!header) {
      if (toks[0] != "market" || toks.size() != 3) throw ParseError(line_no, "expected 'market <n> <k>' header");
      auto n = parse_integer<std::size_t>(toks[1]);
      auto k = parse_integer<std::size_t>(toks[2]);
      if (!n || !k) throw ParseError(line_no, "malformed market header");
      inst.k = *k;
      inst.buyers.assign(*n, {});
      inst.sellers.assign(*n, {});
      seen_b.assign(*n, 0);
      seen_s.assign(*n, 0);
      header = true;
      continue;
    }
    const bool buyer = toks[0] == "b";
    if (!buyer && toks[0] != "s") throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
    if (toks.size() < 2) throw ParseError(line_no, "missing agent index");
    auto who = parse_integer<std::size_t>(toks[1]);
    if (!who || *who == 0 || *who > inst.n()) throw ParseError(line_no, "agent index out of range");
    auto& seen = buyer ? seen_b : seen_s;
    if (seen[*who - 1]) throw ParseError(line_no, "duplicate line for agent " + toks[1]);
    seen[*who - 1] = 1;
    PriceMap& pm = buyer ? inst.buyers[*who - 1] : inst.sellers[*who - 1];
    for (std::size_t t = 2; t < toks.size(); ++t) {
      const auto colon = toks[t].find(':');
      if (colon == std::string::npos) throw ParseError(line_no, "expected item:price, got '" + toks[t] + "'");
      auto item = parse_integer<std::size_t>(std::string_view(toks[t]).substr(0, colon));
      auto price = parse_real(std::string_view(toks[t]).substr(colon + 1));
      if (!item || *item == 0 || *item > inst.k) throw ParseError(line_no, "item out of range in '" + toks[t] + "'");
      if (!price || !(*price > 0) || !std::isfinite(*price)) {
        throw ParseError(line_no, "price must be a positive real in '" + toks[t] + "'");
      }
      if (!pm.emplace(*item, *price).second) throw ParseError(line_no, "duplicate item " + std::to_string(*item));
    }
  }
  if (!header) throw ParseError(line_no, "missing 'market <n> <k>' header");
  return inst;
}

inline MarketInstance parse_market(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_market(in);
}

inline void write_market(std::ostream& out, const MarketInstance& inst) {
  out << "market " << inst.n() << ' ' << inst.k << '\n';
  auto side = [&](char tag, const std::vector<PriceMap>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << tag << ' ' << i + 1;
      for (const auto& [l, p] : v[i]) out << ' ' << l << ':' << format_real(p);
      out << '\n';
    }
  };
  side('b', inst.buyers);
  side('s', inst.sellers);
}

/// Each agent takes each item with probability `density`; prices are
/// integers in [1, max_price].
inline MarketInstance random_market(std::size_t n, std::size_t k, double density, int max_price,
                                    std::uint64_t seed) {
  Rng rng(seed);
  MarketInstance inst;
  inst.k = k;
  inst.buyers.resize(n);
  inst.sellers.resize(n);
  auto fill = [&](PriceMap& pm) {
    for (std::size_t l = 1; l <= k; ++l) {
      if (rng.bernoulli(density)) pm[l] = 1.0 + static_cast<double>(rng.below(static_cast<std::uint64_t>(max_price)));
    }
  };
  for (auto& b : inst.buyers) fill(b);
  for (auto& s : inst.sellers) fill(s);
  return inst;
}

}  // namespace hsub
