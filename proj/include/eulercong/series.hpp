#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series in x over an exact coefficient ring.
 *
 * `TruncatedSeries<R>` keeps the ordinary coefficients of x^0..x^N. The
 * factorial scaling of exponential generating functions is applied only on
 * extraction (`egf_coeff`). R is one of Rational, Poly or RatFunc; the
 * operations a ring needs are gathered in `coefficient_traits<R>`.
 */

#include "eulercong/poly.hpp"
#include "eulercong/ratfunc.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulercong {

template <typename R>
struct coefficient_traits;

template <>
struct coefficient_traits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& q) { return q == 0; }
  static std::optional<Rational> inverse(const Rational& q) {
    if (q == 0) return std::nullopt;
    return Rational(1 / q);
  }
  static std::string render(const Rational& q) { return to_string(q); }
};

template <>
struct coefficient_traits<Poly> {
  static Poly from_rational(const Rational& q) { return Poly::constant(q); }
  static bool is_zero(const Poly& p) { return p.is_zero(); }
  // Units of Q[t] are the nonzero constants.
  static std::optional<Poly> inverse(const Poly& p) {
    if (p.degree() != 0) return std::nullopt;
    return Poly::constant(1 / p.leading());
  }
  static std::string render(const Poly& p) { return to_string(p); }
};

template <>
struct coefficient_traits<RatFunc> {
  static RatFunc from_rational(const Rational& q) { return RatFunc(q); }
  static bool is_zero(const RatFunc& f) { return f.is_zero(); }
  static std::optional<RatFunc> inverse(const RatFunc& f) {
    if (f.is_zero()) return std::nullopt;
    return f.inverse();
  }
  static std::string render(const RatFunc& f) { return to_string(f); }
};

template <typename R>
class TruncatedSeries {
  using traits = coefficient_traits<R>;

 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, traits::from_rational(0)) {}

  /// Takes coefficients of x^0..x^{size-1}; order = size - 1. Throws on an empty vector.
  explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
  }

  /// The constant series c.
  static TruncatedSeries constant(const R& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& operator[](std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!traits::is_zero(c)) return false;
    return true;
  }

  /// Coefficient-wise image under f, e.g. lifting Poly coefficients to RatFunc.
  template <typename F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(coeffs_[0]))>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return TruncatedSeries<S>(std::move(out));
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    check_orders(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return a;
  }

  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    check_orders(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return a;
  }

  /// Cauchy product truncated at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) {
        if (traits::is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  /**
   * Deconvolution c_i = (a_i - sum_{j<i} c_j b_{i-j}) / b_0.
   * Throws std::domain_error unless b_0 is a unit of R; over Poly this means
   * a nonzero constant, so genuine quotients belong over RatFunc.
   */
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    auto inv = traits::inverse(b.coeffs_[0]);
    if (!inv)
      throw std::domain_error("series division requires field coefficients: constant term of divisor is not invertible");
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      R acc = a.coeffs_[i];
      for (std::size_t j = 0; j < i; ++j)
        if (!traits::is_zero(out.coeffs_[j]) && !traits::is_zero(b.coeffs_[i - j]))
          acc = acc - out.coeffs_[j] * b.coeffs_[i - j];
      out.coeffs_[i] = traits::is_zero(acc) ? acc : acc * *inv;
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
  }

  std::vector<R> coeffs_;
};

/// c * e^{kx} through x^N: coefficient i is c k^i / i!. k = 0 gives the constant c.
template <typename R>
TruncatedSeries<R> ts_scaled_exp(const R& c, long k, std::size_t order) {
  using traits = coefficient_traits<R>;
  std::vector<R> out;
  out.reserve(order + 1);
  Rational scale = 1;
  for (std::size_t i = 0; i <= order; ++i) {
    if (i > 0) scale = scale * k / static_cast<unsigned long>(i);
    out.push_back(scale == 0 ? traits::from_rational(0) : R(c * traits::from_rational(scale)));
  }
  return TruncatedSeries<R>(std::move(out));
}

/// n! times the coefficient of x^n. Throws std::out_of_range past the order.
template <typename R>
R ts_egf_coeff(const TruncatedSeries<R>& a, std::size_t n) {
  if (n > a.order()) throw std::out_of_range("ts_egf_coeff: index beyond truncation order");
  return a[n] * coefficient_traits<R>::from_rational(Rational(factorial(static_cast<unsigned>(n))));
}

/// sum_{j<m} t^j e^{jx} through x^N.
inline TruncatedSeries<Poly> ts_geometric_exp_sum(unsigned m, std::size_t order) {
  if (m == 0) throw std::invalid_argument("ts_geometric_exp_sum: m must be >= 1");
  TruncatedSeries<Poly> acc(order);
  for (unsigned j = 0; j < m; ++j) acc = acc + ts_scaled_exp(Poly::monomial(1, j), j, order);
  return acc;
}

inline TruncatedSeries<RatFunc> to_ratfunc(const TruncatedSeries<Poly>& s) {
  return s.map([](const Poly& p) { return RatFunc(p); });
}

/// "c0 + (c1)*x + (c2)*x^2 + ... (order N)"; zero coefficients are skipped.
template <typename R>
std::string to_string(const TruncatedSeries<R>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (coefficient_traits<R>::is_zero(s[i])) continue;
    std::string c = coefficient_traits<R>::render(s[i]);
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c;
      continue;
    }
    out += "(" + c + ")*x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out + " (order " + std::to_string(s.order()) + ")";
}

}  // namespace eulercong
