#pragma once

/**
 * @file eulerian.hpp
 * @brief Eulerian polynomials A_n(t), normalized so that
 *
 *     sum_n A_n(t) / (1-t)^{n+1} * x^n / n!  =  1 / (1 - t e^x).
 *
 * Under this normalization A_0 = 1 and, for n >= 1, A_n counts permutations
 * of {1..n} by t^{des+1}, so A_1 = t (not 1). The congruence in
 * congruence.hpp is false under the A_1 = 1 convention, hence three
 * independent constructions that must agree.
 */

#include "eulercong/poly.hpp"
#include "eulercong/ratfunc.hpp"
#include "eulercong/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulercong {

struct EulerianPoly {
  unsigned n = 0;
  Poly poly;

  friend bool operator==(const EulerianPoly&, const EulerianPoly&) = default;
};

inline constexpr unsigned kBruteforceCap = 9;

/// A_{k+1} = (k+1) t A_k + t (1-t) A_k'.
inline EulerianPoly eulerian_recurrence(unsigned n) {
  const Poly t = Poly::t();
  const Poly t_one_minus_t{0, 1, -1};
  Poly a = Poly::constant(1);
  for (unsigned k = 0; k < n; ++k) a = Rational(k + 1) * (t * a) + t_one_minus_t * a.derivative();
  return {n, a};
}

/// Sum of t^{des(s)+1} over all permutations s of {1..n}; A_0 = 1. Throws past `cap`.
inline EulerianPoly eulerian_bruteforce(unsigned n, unsigned cap = kBruteforceCap) {
  if (n > cap)
    throw std::invalid_argument("eulerian_bruteforce: n = " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  if (n == 0) return {0, Poly::constant(1)};
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 1u);
  std::vector<unsigned long> counts(n + 1, 0);
  do {
    unsigned des = 0;
    for (unsigned i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) ++des;
    ++counts[des + 1];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Rational> coeffs(counts.begin(), counts.end());
  return {n, Poly(std::move(coeffs))};
}

/**
 * Reads A_n off the generating function: expands 1/(1 - t e^x) over RatFunc
 * through x^n, takes the coefficient of x^n/n! and multiplies by (1-t)^{n+1}.
 * Throws std::logic_error if that product is not an integer polynomial.
 */
inline EulerianPoly eulerian_from_gf(unsigned n) {
  using S = TruncatedSeries<RatFunc>;
  const S one = S::constant(RatFunc(Rational(1)), n);
  const S kernel = one - ts_scaled_exp(RatFunc(Poly::t()), 1, n);
  const RatFunc coeff = ts_egf_coeff(one / kernel, n);
  const RatFunc product = coeff * RatFunc(pow(Poly{1, -1}, n + 1));
  if (!product.is_polynomial()) throw std::logic_error("eulerian_from_gf: product has a nontrivial denominator");
  for (const auto& c : product.num().coeffs())
    if (!is_integer(c)) throw std::logic_error("eulerian_from_gf: non-integer coefficient");
  return {n, product.num()};
}

/**
 * First K+1 coefficients in t of A_n(t) / (1-t)^{n+1}, by deconvolution over Q.
 * Expanding 1/(1 - t e^x) as sum_k t^k e^{kx} predicts coefficient k = k^n.
 */
inline std::vector<Rational> worpitzky_partial_check(unsigned n, std::size_t K) {
  auto truncate = [K](const Poly& p) {
    std::vector<Rational> v(K + 1);
    for (std::size_t i = 0; i < std::min(K + 1, p.size()); ++i) v[i] = p.coeffs()[i];
    return TruncatedSeries<Rational>(std::move(v));
  };
  const auto quotient = truncate(eulerian_recurrence(n).poly) / truncate(pow(Poly{1, -1}, n + 1));
  return quotient.coeffs();
}

}  // namespace eulercong
