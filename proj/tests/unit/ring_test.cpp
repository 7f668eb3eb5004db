#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "genform/exp_poly.hpp"
#include "support.hpp"

namespace genform {
namespace {

using testing::P;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
}

// Oracle: the same operations carried out directly in GMP.
TEST(Rational, OverflowFallsBackToGmpAndBack) {
  const Rational big = Rational::parse("4611686018427387904");  // 2^62
  const Rational square = big * big;
  EXPECT_EQ(square.str(), "21267647932558653966460912964485513216");
  EXPECT_EQ(square.to_mpq(), mpq_class("21267647932558653966460912964485513216"));
  EXPECT_EQ(square / big, big);
  EXPECT_EQ((square / big).str(), "4611686018427387904");
  EXPECT_EQ(square - square, Rational(0));
  EXPECT_TRUE((square - square).is_zero());

  const Rational max = Rational(std::numeric_limits<long>::max());
  EXPECT_EQ((max + Rational(1)).to_mpq(), mpq_class(mpz_class(std::numeric_limits<long>::max())) + 1);
  EXPECT_EQ(max + Rational(1) - Rational(1), max);
  EXPECT_EQ(Rational(std::numeric_limits<long>::min()).str(), "-9223372036854775808");
  EXPECT_EQ(-Rational(std::numeric_limits<long>::min()), max + Rational(1));

  const Rational tiny = Rational(1, std::numeric_limits<long>::max());
  const mpq_class tiny_q(1, std::numeric_limits<long>::max());
  EXPECT_EQ((tiny * tiny).to_mpq(), tiny_q * tiny_q);
  EXPECT_EQ((tiny + Rational(1, 3)).to_mpq(), tiny_q + mpq_class(1, 3));
  EXPECT_LT(tiny * tiny, tiny);
  EXPECT_GT(square, max);
  EXPECT_EQ((square.inverse() * square), Rational(1));
  EXPECT_EQ(Rational(-3, 4).inverse(), Rational(-4, 3));
  EXPECT_EQ(Rational(7, 3).to_double(), 7.0 / 3.0);
}

TEST(Polynomial, DifferenceOfSquares) {
  EXPECT_EQ(P("x1 + 1", 1) * P("x1 - 1", 1), P("x1^2 - 1", 1));
}

TEST(Polynomial, AdditiveIdentity) {
  const Polynomial p = P("3/2*x1^2*x2 + -1*x2", 2);
  EXPECT_EQ(p + Polynomial(2), p);
}

TEST(Polynomial, DimensionMismatchThrows) {
  EXPECT_THROW(P("x1", 1) + P("x1", 2), DimensionError);
  EXPECT_THROW(P("x1", 1) * P("x1", 2), DimensionError);
}

TEST(Polynomial, TextRoundTrip) {
  const Polynomial p = P("3/2*x1^2*x2 + -1*x3", 3);
  EXPECT_EQ(p.str(), "3/2*x1^2*x2 + -1*x3");
  EXPECT_EQ(P(p.str(), 3), p);
  EXPECT_EQ(Polynomial(2).str(), "0");
  EXPECT_THROW(P("x3", 2), ParseError);
  EXPECT_THROW(P("2*y1", 2), ParseError);
}

TEST(Polynomial, Partial) {
  EXPECT_EQ(P("x1^2*x2", 2).partial(0), P("2*x1*x2", 2));
  EXPECT_TRUE(P("x1", 2).partial(1).is_zero());
  EXPECT_THROW(P("x1", 2).partial(2), std::out_of_range);
}

TEST(Polynomial, Eval) {
  const std::vector<double> a{1.0, 2.0};
  EXPECT_DOUBLE_EQ(P("x1 + 2*x2", 2).eval(a), 5.0);
  EXPECT_DOUBLE_EQ(Polynomial(2).eval(a), 0.0);
  const std::vector<double> b{3.0, 0.0};
  EXPECT_DOUBLE_EQ(P("x1^2 - 1", 2).eval(b), 8.0);
  const std::vector<double> short_point{1.0};
  EXPECT_THROW(P("x1", 2).eval(short_point), DimensionError);
}

TEST(Polynomial, ExponentOverflowThrows) {
  const Polynomial p = Polynomial::monomial(1, Monomial::variable(0, 100), Rational(1));
  EXPECT_THROW(p * p, std::overflow_error);
}

TEST(ExpPoly, ExponentsAdd) {
  const ExpPoly a = ExpPoly::exp(P("x1", 1), Rational(2));
  const ExpPoly b = ExpPoly::exp(P("-1*x1", 1), Rational(3));
  const ExpPoly prod = a * b;
  EXPECT_EQ(prod, ExpPoly(P("6", 1)));
  // Floating-point evaluation of the factors at a few rational points.
  for (double x : {0.5, -1.25, 2.0}) {
    const std::vector<double> pt{x};
    EXPECT_NEAR(a.eval(pt) * b.eval(pt), 6.0, 1e-12);
    EXPECT_NEAR(prod.eval(pt), 6.0, 1e-12);
  }
}

TEST(ExpPoly, PartialOfDecayingExponential) {
  const ExpPoly e = ExpPoly::exp(P("-1*x1", 1));
  EXPECT_EQ(e.partial(0), ExpPoly::exp(P("-1*x1", 1), Rational(-1)));
  const double h = 1e-6;
  const std::vector<double> lo{1.0 - h}, hi{1.0 + h}, at{1.0};
  const double fd = (e.eval(hi) - e.eval(lo)) / (2 * h);
  EXPECT_NEAR(e.partial(0).eval(at), fd, 1e-6);
}

TEST(ExpPoly, ConstantBookkeeping) {
  const ExpPoly c = ExpPoly::constant(1, Rational(3), Rational(2));
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(c.as_scaled_exponential(), std::make_pair(Rational(3), Rational(2)));
  EXPECT_EQ(c * c.inverse(), ExpPoly(P("1", 1)));
}

class RingProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RingProperties, RingAxioms) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 100; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed, t);
    const Polynomial a = rng.polynomial(n), b = rng.polynomial(n), c = rng.polynomial(n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_P(RingProperties, MixedPartialsCommute) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 100; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 1, t);
    const Polynomial p = rng.polynomial(n, 3);
    const ExpPoly e = ExpPoly::exp(rng.polynomial(n, 1)) * ExpPoly(rng.polynomial(n)) + ExpPoly(rng.polynomial(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(p.partial(i).partial(j), p.partial(j).partial(i));
        EXPECT_EQ(e.partial(i).partial(j), e.partial(j).partial(i));
      }
    }
  }
}

TEST_P(RingProperties, EvaluationIsHomomorphism) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 100; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 2, t);
    const Polynomial a = rng.polynomial(n), b = rng.polynomial(n);
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < n; ++i) pt.push_back(rng.coefficient() + Rational(static_cast<long>(rng.below(5))));
    EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    EXPECT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, RingProperties, ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace genform
