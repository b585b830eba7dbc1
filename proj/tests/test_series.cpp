#include "eulercong/series.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace eulercong;

namespace {

Poly P(std::string_view s) { return parse_poly(s); }

using QSeries = TruncatedSeries<Rational>;
using PSeries = TruncatedSeries<Poly>;
using RSeries = TruncatedSeries<RatFunc>;

QSeries qs(std::vector<Rational> v) { return QSeries(std::move(v)); }

}  // namespace

TEST(ScaledExp, Examples) {
  EXPECT_EQ(ts_scaled_exp(Rational(1), 1, 3), qs({1, 1, rat(1, 2), rat(1, 6)}));
  EXPECT_EQ(ts_scaled_exp(Poly::t(), 2, 2), PSeries({P("t"), P("2*t"), P("2*t")}));
  EXPECT_EQ(ts_scaled_exp(Rational(1), 0, 2), qs({1, 0, 0}));
  EXPECT_EQ(ts_scaled_exp(Rational(3), -1, 3), qs({3, -3, rat(3, 2), rat(-1, 2)}));
  EXPECT_EQ(ts_scaled_exp(Rational(1), 5, 0).order(), 0u);
}

TEST(SeriesArith, Examples) {
  EXPECT_EQ(qs({1, 0, 0}) / qs({1, -1, 0}), qs({1, 1, 1}));
  EXPECT_EQ(ts_scaled_exp(Rational(1), 1, 4) * ts_scaled_exp(Rational(1), -1, 4), qs({1, 0, 0, 0, 0}));
  EXPECT_EQ(qs({1, 2}) + qs({3, 4}), qs({4, 6}));
  EXPECT_EQ(qs({1, 2}) - qs({1, 2}), QSeries(1));
  EXPECT_THROW(qs({1, 2}) + qs({1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(QSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST(SeriesArith, KernelInverseOverRatFunc) {
  // d/dx 1/(1 - t e^x) = t e^x / (1 - t e^x)^2, so at x = 0: [1/(1-t), t/(1-t)^2]
  const auto one = RSeries::constant(RatFunc(Rational(1)), 1);
  const auto kernel = one - ts_scaled_exp(RatFunc(Poly::t()), 1, 1);
  const auto inv = one / kernel;
  EXPECT_TRUE(oracle::same_fraction(inv[0], Poly{1}, P("1 - t")));
  EXPECT_TRUE(oracle::same_fraction(inv[1], P("t"), pow(P("1 - t"), 2)));
  EXPECT_EQ(inv[0], rf_new(Poly{1}, P("1 - t")));
  EXPECT_EQ(inv[1], rf_new(P("t"), P("1 - 2*t + t^2")));
}

TEST(SeriesArith, DivisionErrors) {
  EXPECT_THROW(qs({1, 1}) / qs({0, 1}), std::domain_error);
  // a non-constant polynomial is not a unit of Q[t]
  EXPECT_THROW(PSeries({P("1"), P("t")}) / PSeries({P("1 - t"), P("t")}), std::domain_error);
  // nonzero constants are
  auto q = PSeries({P("1"), P("t")}) / PSeries({P("2"), P("0")});
  EXPECT_EQ(q, PSeries({P("1/2"), P("1/2*t")}));
}

TEST(SeriesArith, DivisionInvertsMultiplication) {
  oracle::Gen g(41);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t order = static_cast<std::size_t>(g.uniform(0, 8));
    std::vector<Rational> a(order + 1), b(order + 1);
    for (auto& x : a) x = g.rational(1000);
    for (auto& x : b) x = g.rational(1000);
    if (b[0] == 0) b[0] = 1;
    QSeries sa(a), sb(b);
    EXPECT_EQ((sa / sb) * sb, sa);
  }
}

TEST(SeriesArith, ExponentialLaw) {
  oracle::Gen g(43);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t order = static_cast<std::size_t>(g.uniform(0, 8));
    Poly c = g.poly(3, 20), c2 = g.poly(3, 20);
    long k = g.uniform(-4, 4), k2 = g.uniform(-4, 4);
    EXPECT_EQ(ts_scaled_exp(c, k, order) * ts_scaled_exp(c2, k2, order), ts_scaled_exp(c * c2, k + k2, order));
  }
}

TEST(EgfCoeff, Examples) {
  EXPECT_EQ(ts_egf_coeff(ts_scaled_exp(Rational(1), 1, 5), 3), 1);
  const RSeries s({rf_new(Poly{1}, P("1 - t")), rf_new(P("t"), pow(P("1 - t"), 2))});
  EXPECT_EQ(ts_egf_coeff(s, 1), rf_new(P("t"), pow(P("1 - t"), 2)));
  EXPECT_TRUE(ts_egf_coeff(RSeries(4), 2).is_zero());
  EXPECT_EQ(ts_egf_coeff(ts_scaled_exp(Rational(1), 2, 6), 6), 64);
  EXPECT_THROW(ts_egf_coeff(QSeries(2), 3), std::out_of_range);
}

TEST(GeometricExpSum, Examples) {
  EXPECT_EQ(ts_geometric_exp_sum(1, 2), PSeries({P("1"), P("0"), P("0")}));
  EXPECT_EQ(ts_geometric_exp_sum(2, 1), PSeries({P("1 + t"), P("t")}));
  EXPECT_EQ(ts_geometric_exp_sum(3, 1), PSeries({P("1 + t + t^2"), P("t + 2*t^2")}));
  EXPECT_THROW(ts_geometric_exp_sum(0, 2), std::invalid_argument);
}

TEST(GeometricExpSum, ConstantTermIsGeometricPoly) {
  for (unsigned m = 1; m <= 16; ++m) EXPECT_EQ(ts_geometric_exp_sum(m, 5)[0], geometric_poly(m));
}

TEST(GeometricExpSum, Telescoping) {
  // 1 - t^j e^{jx} = (1 - t e^x) * sum_{i<j} t^i e^{ix}
  for (unsigned j = 1; j <= 6; ++j) {
    for (std::size_t order = 0; order <= 6; ++order) {
      const auto lhs = PSeries::constant(Poly{1}, order) - ts_scaled_exp(Poly::monomial(1, j), j, order);
      const auto factor = PSeries::constant(Poly{1}, order) - ts_scaled_exp(Poly::t(), 1, order);
      EXPECT_EQ(lhs, factor * ts_geometric_exp_sum(j, order)) << "j=" << j << " N=" << order;
    }
  }
}

TEST(SeriesText, Rendering) {
  EXPECT_EQ(to_string(ts_geometric_exp_sum(2, 2)), "1 + t + (t)*x + (1/2*t)*x^2 (order 2)");
  EXPECT_EQ(to_string(QSeries(3)), "0 (order 3)");
}
