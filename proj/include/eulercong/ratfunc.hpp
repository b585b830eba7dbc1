#pragma once

/**
 * @file ratfunc.hpp
 * @brief Reduced rational functions num(t)/den(t) over Q.
 *
 * Canonical form: gcd(num, den) = 1 and den monic, with any scalar moved into
 * the numerator. Zero is 0/1. Two RatFuncs are equal as field elements iff
 * their numerators and denominators are structurally equal.
 */

#include "eulercong/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace eulercong {

class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}

  /// Throws std::domain_error when den is zero.
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}
  explicit RatFunc(const Rational& c) : RatFunc(Poly::constant(c)) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    Poly g = poly_gcd(a.den_, b.den_);
    Poly bd = exact_quotient(b.den_, g), ad = exact_quotient(a.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }

  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // cross-cancel first so the product's gcd work stays small
    Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
    return RatFunc(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                   exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1));
  }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc division by zero");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    if (!den_.is_constant()) {
      Poly g = poly_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
      }
    }
    Rational lead = den_.leading();
    if (lead != 1) {
      num_ *= 1 / lead;
      den_ *= 1 / lead;
    }
  }

  Poly num_;
  Poly den_;
};

inline RatFunc rf_new(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

/// den(x0); nonzero certifies that (t - x0) does not divide the reduced denominator.
inline Rational rf_den_value_at(const RatFunc& a, const Rational& x0) { return a.den()(x0); }

/**
 * Smallest k <= kmax with den(a) | base^k, or nullopt. k = 0 means den(a) = 1.
 * Throws std::invalid_argument for a constant base.
 */
inline std::optional<unsigned> rf_den_divides_power(const RatFunc& a, const Poly& base, unsigned kmax) {
  if (base.is_constant()) throw std::invalid_argument("rf_den_divides_power: base must be nonconstant");
  Poly power = Poly::constant(1);
  for (unsigned k = 0; k <= kmax; ++k) {
    if (divides(a.den(), power)) return k;
    power *= base;
  }
  return std::nullopt;
}

/// "(num)/(den)", or just the numerator rendering when den = 1.
inline std::string to_string(const RatFunc& a) {
  if (a.is_polynomial()) return to_string(a.num());
  return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

inline std::string to_latex(const RatFunc& a) {
  if (a.is_polynomial()) return to_latex(a.num());
  return "\\frac{" + to_latex(a.num()) + "}{" + to_latex(a.den()) + "}";
}

}  // namespace eulercong
