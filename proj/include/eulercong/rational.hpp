#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars backed by GMP.
 *
 * `Rational` is `mpq_class` kept in canonical form: positive denominator,
 * numerator and denominator coprime, zero stored as 0/1. Every helper here
 * returns canonical values, so structural equality is numeric equality.
 */

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulercong {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den. Throws std::domain_error on a zero denominator.
inline Rational rat(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat(long num, long den = 1) { return rat(Integer(num), Integer(den)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// base^e with 0^0 = 1.
inline Rational pow(const Rational& base, unsigned e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(num, den);  // coprime powers stay canonical
}

/// "p/q", or bare "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses "[-]p" or "[-]p/q" with decimal digits. Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return rat(n, d);
}

}  // namespace eulercong
