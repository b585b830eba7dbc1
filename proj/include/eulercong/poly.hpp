#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials in t over the rationals.
 *
 * Coefficients are stored ascending (index i holds the coefficient of t^i)
 * and the vector never carries trailing zeros; the zero polynomial is the
 * empty vector. With canonical Rationals underneath, `==` is exact equality.
 */

#include "eulercong/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eulercong {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  static Poly constant(const Rational& c) { return Poly({c}); }

  /// c * t^k
  static Poly monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }

  static Poly t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  std::span<const Rational> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  /// Undefined for the zero polynomial.
  const Rational& leading() const { return coeffs_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend Poly operator-(Poly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(out));
  }

 private:
  void normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Canonical polynomial from raw coefficients (reduces each entry, strips trailing zeros).
inline Poly poly_normalize(std::vector<Rational> raw) { return Poly(std::move(raw)); }

/// Repeated squaring; pow(p, 0) = 1 for every p, including 0.
inline Poly pow(Poly base, unsigned k) {
  Poly acc = Poly::constant(1);
  while (k > 0) {
    if (k & 1u) acc *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return acc;
}

inline Rational poly_eval(const Poly& p, const Rational& x) { return p(x); }

/// p(t^m).
inline Poly substitute_t_power(const Poly& p, unsigned m) {
  if (m == 0) throw std::invalid_argument("substitute_t_power: m must be >= 1");
  if (p.is_zero()) return {};
  std::vector<Rational> out((p.size() - 1) * m + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * m] = p.coeffs()[i];
  return Poly(std::move(out));
}

/// 1 + t + ... + t^{m-1}
inline Poly geometric_poly(unsigned m) {
  if (m == 0) throw std::invalid_argument("geometric_poly: m must be >= 1");
  return Poly(std::vector<Rational>(m, Rational(1)));
}

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.size() - 1;
  std::vector<Rational> q(r.size() - db);
  const Rational inv_lead = 1 / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = r[k + db] * inv_lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

inline bool divides(const Poly& d, const Poly& p) { return divmod(p, d).remainder.is_zero(); }

/// a / b, throwing std::domain_error unless b divides a.
inline Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_quotient: nonzero remainder");
  return q;
}

/// Coefficients d_i with p = sum d_i (t-1)^i, via the Ruffini cascade.
inline std::vector<Rational> taylor_shift_at_one(const Poly& p) {
  std::vector<Rational> a(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
  return a;
}

/// sum_{i in [first, last)} d_i (t-1)^{i-first}, expanded in powers of t.
inline Poly expand_shifted(std::span<const Rational> d, std::size_t first = 0) {
  const Poly t_minus_one{-1, 1};
  Poly acc;
  for (std::size_t i = d.size(); i-- > first;) acc = acc * t_minus_one + Poly::constant(d[i]);
  return acc;
}

struct ShiftRemainder {
  Poly remainder;                ///< sum_{i<k} d_i (t-1)^i
  Poly cofactor;                 ///< (p - remainder) / (t-1)^k
  std::vector<Rational> shifted; ///< every d_i
};

/// Reduces p modulo (t-1)^k through its Taylor expansion at t = 1.
inline ShiftRemainder remainder_mod_shift_power(const Poly& p, unsigned k) {
  if (k == 0) throw std::invalid_argument("remainder_mod_shift_power: k must be >= 1");
  ShiftRemainder out;
  out.shifted = taylor_shift_at_one(p);
  std::span<const Rational> d = out.shifted;
  out.remainder = expand_shifted(d.first(std::min<std::size_t>(k, d.size())));
  out.cofactor = expand_shifted(d, k);
  return out;
}

inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading());
}

/// Integer-coefficient associate with unit content and positive leading coefficient.
inline Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  for (const auto& c : p.coeffs()) g = gcd(g, Integer(c.get_num() * (l / c.get_den())));
  Rational scale(l, g);
  scale.canonicalize();
  if (p.leading() < 0) scale = -scale;
  return p * scale;
}

/// Monic gcd. Euclid over Q on primitive parts, so intermediate sizes stay bounded.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd(0, 0) is undefined");
  Poly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = primitive_part(r);
  }
  return monic(x);
}

namespace detail {

inline void append_term(std::string& out, const Rational& c, std::size_t k, bool latex) {
  const bool first = out.empty();
  const bool negative = c < 0;
  const Rational mag = abs(c);
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";

  std::string coeff;
  if (k == 0 || mag != 1) {
    if (latex && !is_integer(mag))
      coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    else
      coeff = to_string(mag);
  }
  if (k == 0) {
    out += coeff;
    return;
  }
  std::string var = "t";
  if (k > 1) var += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
  if (coeff.empty())
    out += var;
  else
    out += coeff + (latex ? " " : "*") + var;
}

inline std::string render(const Poly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p.coeffs()[k] != 0) append_term(out, p.coeffs()[k], k, latex);
  return out;
}

}  // namespace detail

/// Ascending `c*t^k` terms, e.g. "t + 4*t^2 + t^3".
inline std::string to_string(const Poly& p) { return detail::render(p, false); }

/// Same ordering with LaTeX fractions and exponents.
inline std::string to_latex(const Poly& p) { return detail::render(p, true); }

/// Inverse of to_string. Accepts any term order and repeated degrees; whitespace is ignored.
inline Poly parse_poly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
  };

  std::vector<Rational> acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string_view term = std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) fail("empty term");

    Rational c = 1;
    std::size_t k = 0;
    auto tpos = term.find('t');
    if (tpos == std::string_view::npos) {
      c = parse_rational(term);
    } else {
      std::string_view head = term.substr(0, tpos);
      std::string_view tail = term.substr(tpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') fail("expected '*' before t");
        head.remove_suffix(1);
        c = parse_rational(head);
      }
      if (tail.empty()) {
        k = 1;
      } else {
        if (tail.front() != '^' || !detail::all_digits(tail.substr(1))) fail("bad exponent");
        k = std::stoul(std::string(tail.substr(1)));
      }
    }
    if (negative) c = -c;
    if (acc.size() <= k) acc.resize(k + 1);
    acc[k] += c;
  }
  return Poly(std::move(acc));
}

}  // namespace eulercong
