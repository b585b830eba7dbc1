#pragma once

/**
 * @file congruence.hpp
 * @brief Exact check of
 *
 *     A_n(t^m) == ((1 + t + ... + t^{m-1}) / m)^{n+1} A_n(t)   mod (t-1)^{n+1}
 *
 * over Q[t]. The report keeps both sides, the difference, and its split into
 * cofactor * (t-1)^{n+1} + remainder so a failing case can be diagnosed from
 * the report alone.
 */

#include "eulercong/eulerian.hpp"
#include "eulercong/poly.hpp"

#include <stdexcept>
#include <utility>

namespace eulercong {

struct CongruenceReport {
  unsigned n = 0;
  unsigned m = 1;
  Poly lhs;
  Poly rhs;
  Poly difference;
  Poly remainder;
  Poly cofactor;
  bool holds = false;

  friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

/// Scaled: rhs carries the 1/m^{n+1} factor. Unscaled drops it (negative control only).
enum class RhsScaling { scaled, unscaled };

struct CongruenceSides {
  Poly lhs;
  Poly rhs;
};

inline CongruenceSides congruence_sides(unsigned n, unsigned m, RhsScaling scaling = RhsScaling::scaled) {
  if (m == 0) throw std::invalid_argument("congruence: m must be >= 1");
  const Poly a = eulerian_recurrence(n).poly;
  Poly rhs = pow(geometric_poly(m), n + 1) * a;
  if (scaling == RhsScaling::scaled) rhs *= 1 / pow(Rational(m), n + 1);
  return {substitute_t_power(a, m), std::move(rhs)};
}

/// Builds a report from explicit sides; `holds` iff (t-1)^{n+1} divides lhs - rhs.
inline CongruenceReport make_congruence_report(unsigned n, unsigned m, Poly lhs, Poly rhs) {
  CongruenceReport r;
  r.n = n;
  r.m = m;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.difference = r.lhs - r.rhs;
  auto split = remainder_mod_shift_power(r.difference, n + 1);
  r.remainder = std::move(split.remainder);
  r.cofactor = std::move(split.cofactor);
  r.holds = r.remainder.is_zero();
  return r;
}

inline CongruenceReport verify_congruence(unsigned n, unsigned m, RhsScaling scaling = RhsScaling::scaled) {
  auto [lhs, rhs] = congruence_sides(n, m, scaling);
  return make_congruence_report(n, m, std::move(lhs), std::move(rhs));
}

/// m^{n+1} p: the integer-coefficient form of either side.
inline Poly integer_form(const Poly& p, unsigned n, unsigned m) { return p * pow(Rational(m), n + 1); }

}  // namespace eulercong
