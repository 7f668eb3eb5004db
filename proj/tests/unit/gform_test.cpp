#include <gtest/gtest.h>

#include <vector>

#include "genform/superspace.hpp"
#include "support.hpp"

namespace genform {
namespace {

using testing::form_of;
using testing::idx;
using testing::P;

Rational sign(int p) { return p % 2 == 0 ? Rational(1) : Rational(-1); }

TEST(GenForm, MinusOneFormSquaresToZero) {
  const GenForm m = GenForm::m(2, Rational(1));
  EXPECT_TRUE((m * m).is_zero());
  EXPECT_EQ((m * m).degree(), -2);
}

TEST(GenForm, DxTimesM) {
  const Rational eps(1);
  const GenForm dx1 = GenForm::from_body(OrdinaryForm::dx(2, 0), eps);
  const GenForm prod = dx1 * GenForm::m(2, eps);
  EXPECT_EQ(prod.degree(), 0);
  EXPECT_TRUE(prod.body().is_zero());
  EXPECT_EQ(prod.soul(), OrdinaryForm::dx(2, 0));
  EXPECT_EQ(to_super(prod), to_super(dx1) * to_super(GenForm::m(2, eps)));
  // m dx1 = (-1)^1 dx1 m
  EXPECT_EQ(GenForm::m(2, eps) * dx1, -prod);
}

TEST(GenForm, UnitAndMismatch) {
  auto rng = harness::RandomSource::for_trial(testing::kSeed, 0);
  const GenForm a = rng.gen_form(3, 1, Rational(2));
  EXPECT_EQ(a * GenForm::one(3, Rational(2)), a);
  EXPECT_THROW(a * GenForm::one(3, Rational(1)), EpsilonMismatch);
  EXPECT_THROW(a + GenForm::zero(2, 1, Rational(2)), DimensionError);
  EXPECT_THROW(GenForm(OrdinaryForm::dx(2, 0), OrdinaryForm::dx(2, 0), Rational(0)), DegreeError);
}

TEST(GenD, OfMIsEpsilon) {
  for (const Rational& eps : {Rational(0), Rational(1), Rational(-2), Rational(1, 2)}) {
    EXPECT_EQ(exterior_derivative(GenForm::m(2, eps)), eps * GenForm::one(2, eps));
  }
}

TEST(GenD, TermwiseExample) {
  const Rational eps(1);
  const GenForm a(OrdinaryForm::scalar(P("x1", 2)), form_of(2, idx({1}), "x2"), eps);
  const GenForm da = exterior_derivative(a);
  const GenForm expected(form_of(2, idx({1}), "1 - x2"), form_of(2, idx({1, 2}), "-1"), eps);
  EXPECT_EQ(da, expected);
  EXPECT_EQ(to_super(da), super_d(to_super(a)));
}

TEST(GenPullback, Examples) {
  const Rational eps(1);
  const std::vector<Polynomial> id{P("x1", 2), P("x2", 2)};
  auto rng = harness::RandomSource::for_trial(testing::kSeed, 1);
  const GenForm a = rng.gen_form(2, 1, eps);
  EXPECT_EQ(pullback(id, a), a);

  const std::vector<Polynomial> curve{P("x1", 1), P("x1^2", 1)};
  EXPECT_EQ(pullback(curve, GenForm::m(2, eps)), GenForm::m(1, eps));

  const GenForm dx2m = GenForm::from_soul(OrdinaryForm::dx(2, 1), eps);
  EXPECT_EQ(pullback(curve, dx2m), GenForm::from_soul(form_of(1, idx({1}), "2*x1"), eps));
  // Superspace substitution: z2 -> d(t^2) = 2t z1, mu -> mu.
  EXPECT_THROW(pullback(std::vector<Polynomial>{P("x1", 1)}, dx2m), DimensionError);
}

TEST(GenInterior, Examples) {
  const Rational eps(1);
  VectorField v(2);
  v[0] = P("x2 + 1", 2);
  EXPECT_TRUE(interior(v, GenForm::m(2, eps)).is_zero());

  const GenForm a(OrdinaryForm::scalar(P("x2", 2)), form_of(2, idx({1}), "x1"), eps);
  const GenForm ia = interior(VectorField::coordinate(2, 0), a);
  EXPECT_EQ(ia, GenForm::from_soul(OrdinaryForm::scalar(P("x1", 2)), eps));
  EXPECT_EQ(to_super(ia), super_interior(VectorField::coordinate(2, 0), to_super(a)));
}

TEST(GenLie, Examples) {
  const Rational eps(1);
  auto rng = harness::RandomSource::for_trial(testing::kSeed, 2);
  const VectorField v = rng.vector_field(2);
  EXPECT_TRUE(lie_derivative(v, GenForm::m(2, eps)).is_zero());
  const GenForm m = GenForm::m(2, eps);
  EXPECT_TRUE((exterior_derivative(interior(v, m)) + interior(v, exterior_derivative(m))).is_zero());

  const GenForm a(OrdinaryForm::scalar(P("x1", 2)), form_of(2, idx({2}), "x1"), eps);
  const GenForm expected(OrdinaryForm::scalar(P("1", 2)), form_of(2, idx({2}), "1"), eps);
  EXPECT_EQ(lie_derivative(VectorField::coordinate(2, 0), a), expected);
  EXPECT_EQ(to_super(expected), super_lie(VectorField::coordinate(2, 0), to_super(a)));
}

TEST(GenLie, MinusOneFormCase) {
  auto rng = harness::RandomSource::for_trial(testing::kSeed, 3);
  const Rational eps(2);
  const VectorField v = rng.vector_field(3);
  const Polynomial f = rng.polynomial(3);
  const GenForm a = GenForm::from_soul(OrdinaryForm::scalar(f), eps);
  const OrdinaryForm expected = interior(v, exterior_derivative(OrdinaryForm::scalar(f)));
  EXPECT_EQ(lie_derivative(v, a), GenForm::from_soul(expected, eps));
}

class GenFormProperties : public ::testing::TestWithParam<std::tuple<std::size_t, int>> {
 protected:
  std::size_t n() const { return std::get<0>(GetParam()); }
  Rational eps() const {
    static const Rational kEps[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(2)};
    return kEps[std::get<1>(GetParam())];
  }
};

TEST_P(GenFormProperties, DSquaredAndAntiDerivation) {
  for (int t = 0; t < 30; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 10, t);
    const GenForm a = rng.gen_form(n(), eps()), b = rng.gen_form(n(), eps());
    EXPECT_TRUE(exterior_derivative(exterior_derivative(a)).is_zero());
    EXPECT_EQ(exterior_derivative(a * b),
              exterior_derivative(a) * b + sign(a.degree()) * (a * exterior_derivative(b)));
  }
}

TEST_P(GenFormProperties, SuperCommutativityAndAssociativity) {
  for (int t = 0; t < 30; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 11, t);
    const GenForm a = rng.gen_form(n(), eps()), b = rng.gen_form(n(), eps()), c = rng.gen_form(n(), eps());
    EXPECT_EQ(a * b, sign(a.degree() * b.degree()) * (b * a));
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST_P(GenFormProperties, InteriorLeibnizAndAnticommutation) {
  for (int t = 0; t < 30; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 12, t);
    const VectorField v = rng.vector_field(n()), w = rng.vector_field(n());
    const GenForm a = rng.gen_form(n(), eps()), b = rng.gen_form(n(), eps());
    EXPECT_EQ(interior(v, a * b), interior(v, a) * b + sign(a.degree()) * (a * interior(v, b)));
    EXPECT_TRUE((interior(w, interior(v, a)) + interior(v, interior(w, a))).is_zero());
  }
}

TEST_P(GenFormProperties, LieIdentities) {
  for (int t = 0; t < 30; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 13, t);
    const VectorField v = rng.vector_field(n()), w = rng.vector_field(n());
    const GenForm a = rng.gen_form(n(), eps()), b = rng.gen_form(n(), eps());
    const GenForm lva = lie_derivative(v, a);
    EXPECT_EQ(lva, exterior_derivative(interior(v, a)) + interior(v, exterior_derivative(a)));
    EXPECT_EQ(exterior_derivative(lva), lie_derivative(v, exterior_derivative(a)));
    EXPECT_EQ(lie_derivative(v, a * b), lva * b + a * lie_derivative(v, b));
    EXPECT_EQ(lie_derivative(v, interior(w, a)) - interior(w, lva), interior(bracket(v, w), a));
    EXPECT_EQ(lie_derivative(v, lie_derivative(w, a)) - lie_derivative(w, lva), lie_derivative(bracket(v, w), a));
  }
}

TEST_P(GenFormProperties, ZeroFormInteriorVersusLie) {
  for (int t = 0; t < 30; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 14, t);
    const VectorField v = rng.vector_field(n());
    const GenForm a = rng.gen_form(n(), 0, eps());
    const GenForm diff = interior(v, exterior_derivative(a)) - lie_derivative(v, a);
    EXPECT_EQ(diff.body(), -(eps() * interior(v, a.soul())));
    EXPECT_EQ(diff.soul(), -exterior_derivative(interior(v, a.soul())));
  }
}

TEST_P(GenFormProperties, PullbackIsMorphismCommutingWithD) {
  for (int t = 0; t < 20; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 15, t);
    const std::size_t src = 1 + rng.below(3);
    std::vector<Polynomial> phi;
    for (std::size_t i = 0; i < n(); ++i) phi.push_back(rng.polynomial(src));
    const GenForm a = rng.gen_form(n(), eps()), b = rng.gen_form(n(), eps());
    EXPECT_EQ(pullback(phi, a * b), pullback(phi, a) * pullback(phi, b));
    EXPECT_EQ(pullback(phi, exterior_derivative(a)), exterior_derivative(pullback(phi, a)));
  }
}

INSTANTIATE_TEST_SUITE_P(DimsAndEpsilons, GenFormProperties,
                         ::testing::Combine(::testing::Values(2, 3), ::testing::Values(0, 1, 2, 3, 4)));

}  // namespace
}  // namespace genform
