#pragma once

/**
 * @file prooftrace.hpp
 * @brief Step-by-step replay of the generating-function argument for the
 * congruence, with every intermediate value kept for audit.
 *
 * The chain being checked, for fixed n and m:
 *
 *   D(t) = m^{n+1} A_n(t^m)/(1-t^m)^{n+1} - A_n(t)/(1-t)^{n+1}
 *        = [x^n/n!] ( m/(1 - t^m e^{mx}) - 1/(1 - t e^x) )
 *        = sum_{j<m} [x^n/n!] (1 - t^j e^{jx}) / (1 - t^m e^{mx})
 *
 * and each summand equals [x^n/n!] G_j / G_m with G_k = sum_{i<k} t^i e^{ix}.
 * Since G_m = (1 + t + ... + t^{m-1}) + x P(t, x), every summand has a
 * denominator dividing a power of 1 + t + ... + t^{m-1}, so t - 1 cannot
 * divide the denominator of D, which is equivalent to the congruence.
 */

#include "eulercong/eulerian.hpp"
#include "eulercong/ratfunc.hpp"
#include "eulercong/series.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace eulercong {

namespace detail {

using RSeries = TruncatedSeries<RatFunc>;

inline void require_m(unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be >= 1");
}

/// 1 - t^k e^{kx} over RatFunc.
inline RSeries one_minus_scaled_exp(unsigned k, std::size_t order) {
  return RSeries::constant(RatFunc(Rational(1)), order) - ts_scaled_exp(RatFunc(Poly::monomial(1, k)), k, order);
}

}  // namespace detail

/// m^{n+1} A_n(t^m)/(1-t^m)^{n+1} - A_n(t)/(1-t)^{n+1}, reduced.
inline RatFunc diff_rational(unsigned n, unsigned m) {
  detail::require_m(m);
  const Poly a = eulerian_recurrence(n).poly;
  const Poly one_minus_tm = Poly::constant(1) - Poly::monomial(1, m);
  const RatFunc first(pow(Rational(m), n + 1) * substitute_t_power(a, m), pow(one_minus_tm, n + 1));
  const RatFunc second(a, pow(Poly{1, -1}, n + 1));
  return first - second;
}

/// [x^n/n!] m/(1 - t^m e^{mx}) over RatFunc.
inline RatFunc scaled_kernel_coeff(unsigned n, unsigned m) {
  detail::require_m(m);
  const auto numerator = detail::RSeries::constant(RatFunc(Rational(m)), n);
  return ts_egf_coeff(numerator / detail::one_minus_scaled_exp(m, n), n);
}

/// [x^n/n!] ( m/(1 - t^m e^{mx}) - 1/(1 - t e^x) ), computed by series arithmetic.
inline RatFunc series_difference_coeff(unsigned n, unsigned m) {
  detail::require_m(m);
  using detail::RSeries;
  const auto scaled = RSeries::constant(RatFunc(Rational(m)), n) / detail::one_minus_scaled_exp(m, n);
  const auto plain = RSeries::constant(RatFunc(Rational(1)), n) / detail::one_minus_scaled_exp(1, n);
  return ts_egf_coeff(scaled - plain, n);
}

struct RatioCoeff {
  unsigned j = 0;
  RatFunc value;
  /// Smallest k <= n+1 with den(value) | (1 + ... + t^{m-1})^k.
  std::optional<unsigned> divisor_exponent;
  /// (1 - t^j e^{jx})/(1 - t^m e^{mx}) gave the same coefficient as G_j / G_m.
  bool forms_agree = false;

  friend bool operator==(const RatioCoeff&, const RatioCoeff&) = default;
};

/// [x^n/n!] G_j / G_m with 0 <= j < m, cross-checked against the 1 - t^k e^{kx} form.
inline RatioCoeff ratio_coeff(unsigned j, unsigned m, unsigned n) {
  detail::require_m(m);
  if (j >= m) throw std::invalid_argument("ratio_coeff: need j < m");

  const auto numerator =
      j == 0 ? detail::RSeries(n) : to_ratfunc(ts_geometric_exp_sum(j, n));
  const auto quotient = numerator / to_ratfunc(ts_geometric_exp_sum(m, n));

  RatioCoeff out;
  out.j = j;
  out.value = ts_egf_coeff(quotient, n);

  const auto direct = detail::one_minus_scaled_exp(j, n) / detail::one_minus_scaled_exp(m, n);
  out.forms_agree = ts_egf_coeff(direct, n) == out.value;

  // geometric_poly(1) = 1 is constant; the only summand there is j = 0 with value 0.
  if (out.value.is_polynomial())
    out.divisor_exponent = 0;
  else
    out.divisor_exponent = rf_den_divides_power(out.value, geometric_poly(m), n + 1);
  return out;
}

struct XPDecomposition {
  Poly constant;
  TruncatedSeries<Poly> p_series;
};

/// Splits G_m through x^N as constant + x P(t, x); P has order N - 1.
inline XPDecomposition xp_decompose(unsigned m, std::size_t order) {
  detail::require_m(m);
  if (order == 0) throw std::invalid_argument("xp_decompose: order must be >= 1");
  const auto g = ts_geometric_exp_sum(m, order);
  std::vector<Poly> tail(g.coeffs().begin() + 1, g.coeffs().end());
  return {g[0], TruncatedSeries<Poly>(std::move(tail))};
}

struct TraceReport {
  unsigned n = 0;
  unsigned m = 1;
  RatFunc diff_value;
  RatFunc series_value;
  std::vector<RatioCoeff> per_j;
  Rational den_at_one;
  bool diff_matches_series = false;
  bool telescopes = false;
  bool all_checks = false;
};

/// Runs every step above for one (n, m) and records each intermediate value.
inline TraceReport full_trace(unsigned n, unsigned m) {
  detail::require_m(m);
  TraceReport r;
  r.n = n;
  r.m = m;
  r.diff_value = diff_rational(n, m);
  r.series_value = series_difference_coeff(n, m);
  r.diff_matches_series = r.diff_value == r.series_value;

  RatFunc sum;
  bool per_j_ok = true;
  for (unsigned j = 0; j < m; ++j) {
    r.per_j.push_back(ratio_coeff(j, m, n));
    const auto& rc = r.per_j.back();
    sum += rc.value;
    per_j_ok = per_j_ok && rc.forms_agree && rc.divisor_exponent.has_value();
  }
  r.telescopes = sum == r.series_value;
  r.den_at_one = rf_den_value_at(r.diff_value, 1);
  r.all_checks = r.diff_matches_series && r.telescopes && per_j_ok && r.den_at_one != 0;
  return r;
}

}  // namespace eulercong
