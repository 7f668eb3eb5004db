#include <gtest/gtest.h>

#include "genform/superspace.hpp"
#include "support.hpp"

namespace genform {
namespace {

using testing::form_of;
using testing::idx;
using testing::P;

// Superspace image of an ordinary form (mu-free), used as an oracle.
SuperFunction lift(const OrdinaryForm& a) { return to_super(GenForm::from_body(a, Rational(0))); }

TEST(Wedge, Basics) {
  const OrdinaryForm dx1 = OrdinaryForm::dx(3, 0), dx2 = OrdinaryForm::dx(3, 1);
  EXPECT_EQ(wedge(dx1, dx2), form_of(3, idx({1, 2}), "1"));
  EXPECT_TRUE(wedge(dx1, dx1).is_zero());
}

TEST(Wedge, ShuffleSignMatchesGrassmannProduct) {
  const OrdinaryForm a = form_of(3, idx({1}), "x2");
  const OrdinaryForm b = form_of(3, idx({2, 3}), "1");
  const OrdinaryForm c = wedge(a, b);
  EXPECT_EQ(c, form_of(3, idx({1, 2, 3}), "x2"));
  EXPECT_EQ(lift(c), lift(a) * lift(b));
}

TEST(Wedge, DimensionMismatchThrows) {
  EXPECT_THROW(wedge(OrdinaryForm::dx(2, 0), OrdinaryForm::dx(3, 0)), DimensionError);
}

TEST(ExteriorDerivative, Examples) {
  const OrdinaryForm f = OrdinaryForm::scalar(P("x1*x2", 2));
  EXPECT_EQ(exterior_derivative(f), form_of(2, idx({1}), "x2") + form_of(2, idx({2}), "x1"));

  const OrdinaryForm a = form_of(2, idx({1}), "x2");
  const OrdinaryForm da = exterior_derivative(a);
  EXPECT_EQ(da, form_of(2, idx({1, 2}), "-1"));
  EXPECT_EQ(lift(da), super_d(lift(a)));

  EXPECT_TRUE(exterior_derivative(form_of(3, idx({1, 2, 3}), "1")).is_zero());
}

TEST(Interior, Examples) {
  EXPECT_EQ(interior(VectorField::coordinate(2, 0), form_of(2, idx({1, 2}), "1")), form_of(2, idx({2}), "1"));
  EXPECT_TRUE(interior(VectorField::coordinate(2, 1), form_of(2, idx({1}), "1")).is_zero());

  VectorField v(3);
  v[0] = P("x2", 3);
  const OrdinaryForm a = form_of(3, idx({1, 3}), "x1");
  const OrdinaryForm ia = interior(v, a);
  EXPECT_EQ(ia, form_of(3, idx({3}), "x1*x2"));
  EXPECT_EQ(lift(ia), super_interior(v, lift(a)));
}

TEST(Interior, ZeroOnFunctions) {
  VectorField v(2);
  v[0] = P("1", 2);
  EXPECT_TRUE(interior(v, OrdinaryForm::scalar(P("x1", 2))).is_zero());
}

TEST(Lie, Examples) {
  EXPECT_EQ(lie_derivative(VectorField::coordinate(2, 0), form_of(2, idx({2}), "x1")), form_of(2, idx({2}), "1"));

  VectorField v(1);
  v[0] = P("x1", 1);
  const OrdinaryForm dx1 = OrdinaryForm::dx(1, 0);
  EXPECT_EQ(lie_derivative(v, dx1), dx1);
  EXPECT_EQ(lift(lie_derivative(v, dx1)), super_lie(v, lift(dx1)));
}

TEST(Lie, OnFunctionsIsDirectionalDerivative) {
  for (int t = 0; t < 20; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed, t);
    const VectorField v = rng.vector_field(3);
    const OrdinaryForm f = OrdinaryForm::scalar(rng.polynomial(3));
    EXPECT_EQ(lie_derivative(v, f), interior(v, exterior_derivative(f)));
  }
}

TEST(Bracket, Examples) {
  const VectorField d1 = VectorField::coordinate(2, 0), d2 = VectorField::coordinate(2, 1);
  EXPECT_TRUE(bracket(d1, d2).is_zero());
  VectorField v(2);
  v[1] = P("x1", 2);
  EXPECT_EQ(bracket(v, d1), Rational(-1) * d2);
  // Oracle: commutator of the actions on functions.
  for (int t = 0; t < 10; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed, t);
    const Polynomial f = rng.polynomial(2, 3);
    EXPECT_EQ(bracket(v, d1).apply(f), v.apply(d1.apply(f)) - d1.apply(v.apply(f)));
  }
  EXPECT_TRUE(bracket(v, v).is_zero());
}

class ExteriorProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ExteriorProperties, DSquaredVanishes) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 100; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed, t);
    const int p = static_cast<int>(rng.below(n + 1));
    const OrdinaryForm a = rng.form(n, p, 3);
    EXPECT_TRUE(exterior_derivative(exterior_derivative(a)).is_zero());
  }
}

TEST_P(ExteriorProperties, GradedCommutativityAndLeibniz) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 50; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 3, t);
    const int p = static_cast<int>(rng.below(n + 1)), q = static_cast<int>(rng.below(n + 1));
    const OrdinaryForm a = rng.form(n, p), b = rng.form(n, q);
    const Rational s = (p * q) % 2 == 0 ? Rational(1) : Rational(-1);
    EXPECT_EQ(wedge(a, b), s * wedge(b, a));
    const Rational sp = p % 2 == 0 ? Rational(1) : Rational(-1);
    EXPECT_EQ(exterior_derivative(wedge(a, b)),
              wedge(exterior_derivative(a), b) + sp * wedge(a, exterior_derivative(b)));
  }
}

TEST_P(ExteriorProperties, CartanFormulae) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 50; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 4, t);
    const VectorField v = rng.vector_field(n), w = rng.vector_field(n);
    const OrdinaryForm a = rng.form(n, static_cast<int>(rng.below(n + 1)));
    EXPECT_TRUE((interior(v, interior(w, a)) + interior(w, interior(v, a))).is_zero());
    EXPECT_EQ(lie_derivative(v, interior(w, a)) - interior(w, lie_derivative(v, a)), interior(bracket(v, w), a));
    EXPECT_EQ(lie_derivative(v, lie_derivative(w, a)) - lie_derivative(w, lie_derivative(v, a)),
              lie_derivative(bracket(v, w), a));
    EXPECT_EQ(lie_derivative(v, a), exterior_derivative(interior(v, a)) + interior(v, exterior_derivative(a)));
  }
}

TEST_P(ExteriorProperties, BracketJacobi) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 30; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 5, t);
    const VectorField u = rng.vector_field(n), v = rng.vector_field(n), w = rng.vector_field(n);
    EXPECT_EQ(bracket(u, v), Rational(-1) * bracket(v, u));
    EXPECT_TRUE((bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))).is_zero());
  }
}

TEST_P(ExteriorProperties, HomotopyInvertsDOnClosedForms) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 30; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 6, t);
    const int p = static_cast<int>(rng.below(n));
    const OrdinaryForm exact = exterior_derivative(rng.form(n, p));
    EXPECT_EQ(exterior_derivative(homotopy(exact)), exact);
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, ExteriorProperties, ::testing::Values(2, 3, 4));

}  // namespace
}  // namespace genform
