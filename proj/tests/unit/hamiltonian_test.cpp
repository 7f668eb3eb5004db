#include <gtest/gtest.h>

#include <cmath>

#include "genform/hamiltonian.hpp"
#include "support.hpp"

namespace genform {
namespace {

using testing::form_of;
using testing::idx;
using testing::matrix_of;
using testing::P;

// Omega = x3 dx1 dx2 + dx1 dx3 + dx2 dx4 (not closed), Upsilon = d Omega / eps.
GenSymplectic curved_fixture(const Rational& eps) {
  const OrdinaryForm omega =
      form_of(4, idx({1, 2}), "x3") + form_of(4, idx({1, 3}), "1") + form_of(4, idx({2, 4}), "1");
  const GenForm s(omega, eps.inverse() * exterior_derivative(omega), eps);
  const PolyMatrix inv = matrix_of(4, {{"0", "0", "1", "0"}, {"0", "0", "0", "1"}, {"-1", "0", "0", "-1*x3"},
                                       {"0", "-1", "x3", "0"}});
  return symplectic_validate(s, inv);
}

TEST(Symplectic, Validation) {
  const PolyMatrix inv2 = matrix_of(2, {{"0", "-1"}, {"1", "0"}});
  const OrdinaryForm dpdq = form_of(2, idx({1, 2}), "-1");  // x1 = q, x2 = p
  EXPECT_NO_THROW(symplectic_validate(GenForm::from_body(dpdq, Rational(0)), inv2));
  EXPECT_NO_THROW(symplectic_validate(GenForm::from_body(dpdq, Rational(1)), inv2));

  const GenSymplectic canon = canonical_symplectic(2, Rational(1));
  const GenForm bad(canon.omega(), form_of(4, idx({1, 2, 3}), "1"), Rational(1));
  EXPECT_THROW(symplectic_validate(bad, canon.omega_inv()), ValidationError);
  EXPECT_THROW(symplectic_validate(GenForm::from_body(dpdq, Rational(0)), matrix_of(2, {{"0", "1"}, {"-1", "0"}})),
               ValidationError);
  EXPECT_THROW(symplectic_validate(GenForm::zero(3, 2, Rational(0)), poly_identity(3, 3)), DimensionError);
  EXPECT_NO_THROW(curved_fixture(Rational(2)));
}

TEST(KernelField, Examples) {
  const GenSymplectic s = canonical_symplectic(1, Rational(1));
  EXPECT_TRUE(is_kernel_field(GenVectorField::zero(2, Rational(1)), s));
  EXPECT_FALSE(is_kernel_field(GenVectorField::ordinary(VectorField::coordinate(2, 0), Rational(1)), s));
  // i_W s has soul -w^a_b Omega_ac dx^b dx^c; it vanishes iff w^a_b Omega_ac = S_bc
  // is symmetric. Take S = [[1, x1], [x1, 0]].
  const PolyMatrix S = matrix_of(2, {{"1", "x1"}, {"x1", "0"}});
  const GenVectorField W = kernel_field(s, S);
  EXPECT_TRUE(is_kernel_field(W, s));
  EXPECT_FALSE(W.vt().is_zero());
  // Independent solve: Omega = -dx1 dx2 means Omega_12 = -1, Omega_21 = 1, so
  // w^2_b = S_b1 and w^1_b = -S_b2.
  Tensor11 expected(2);
  expected(1, 0) = P("1", 2);
  expected(1, 1) = P("x1", 2);
  expected(0, 0) = P("-1*x1", 2);
  EXPECT_EQ(W.vt(), expected);
}

TEST(HamiltonianField, ClassicalOscillator) {
  const GenSymplectic s = canonical_symplectic(1, Rational(0));
  const GenForm H = GenForm::scalar(P("1/2*x1^2 + 1/2*x2^2", 2), Rational(0));
  const HamiltonianField V = hamiltonian_vf(s, H);
  VectorField expected(2);
  expected[0] = P("x2", 2);
  expected[1] = P("-1*x1", 2);
  EXPECT_EQ(V.field, GenVectorField::ordinary(expected, Rational(0)));
  EXPECT_TRUE(hamiltonian_residual(s, V.field, H).is_zero());
}

TEST(HamiltonianField, ConstantHamiltonian) {
  const GenSymplectic s = curved_fixture(Rational(1));
  const GenForm H = GenForm::scalar(P("5/3", 4), Rational(1));
  EXPECT_EQ(hamiltonian_vf(s, H).field, GenVectorField::zero(4, Rational(1)));
}

TEST(HamiltonianField, GaugeShift) {
  for (int t = 0; t < 10; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 40, t);
    const Rational eps = rng.epsilon();
    const GenSymplectic s = eps.is_zero() ? canonical_symplectic(2, eps) : curved_fixture(eps);
    const GenForm H = rng.gen_form(4, 0, eps);
    const Polynomial l = rng.polynomial(4);
    const GenForm L = GenForm::from_soul(OrdinaryForm::scalar(l), eps);
    const GenForm shifted = H + exterior_derivative(L);
    // d(l m) = eps l + dl m: h picks up eps l, k picks up dl.
    EXPECT_EQ(shifted.body(), H.body() + OrdinaryForm::scalar(eps * l));
    EXPECT_EQ(shifted.soul(), H.soul() + exterior_derivative(OrdinaryForm::scalar(l)));
    const GenVectorField V = hamiltonian_vf(s, H).field;
    EXPECT_TRUE(hamiltonian_residual(s, V, shifted).is_zero());
    EXPECT_EQ(hamiltonian_vf(s, shifted).field, V);
  }
}

TEST(HamiltonianField, ComponentFormulaNeedsFallbackForNonClosedK) {
  const Rational eps(1);
  const GenSymplectic s = canonical_symplectic(1, eps);
  // dk = 0: the component formula and the solve agree.
  const GenForm closed(OrdinaryForm::scalar(P("x1*x2", 2)), form_of(2, idx({1}), "1"), eps);
  EXPECT_FALSE(hamiltonian_vf(s, closed).used_fallback);
  // dk != 0: the sign of k_[b,c] in the component formula fails the defining relation.
  const GenForm open(OrdinaryForm::scalar(P("x1*x2", 2)), form_of(2, idx({1}), "x2"), eps);
  EXPECT_FALSE(hamiltonian_residual(s, hamiltonian_vf_formula(s, open), open).is_zero());
  const HamiltonianField V = hamiltonian_vf(s, open);
  EXPECT_TRUE(V.used_fallback);
  EXPECT_TRUE(hamiltonian_residual(s, V.field, open).is_zero());
}

TEST(HamiltonianField, SimplifiedCaseGivesScalarSoul) {
  const Rational eps(1, 2), v0(3);
  const std::size_t l = 2;
  const GenSymplectic s = canonical_symplectic(l, eps);
  auto rng = harness::RandomSource::for_trial(testing::kSeed, 41);
  const Polynomial h = rng.polynomial(4);
  OrdinaryForm k(4, 1);
  for (std::size_t a = 0; a < l; ++a) k.add_term(bit(a), Rational(2) * v0 * Polynomial::variable(4, l + a));
  const GenForm H(OrdinaryForm::scalar(h), k, eps);
  const GenVectorField V = simplified_hamiltonian_vf(s, H, Polynomial::constant(4, v0));
  for (std::size_t a = 0; a < l; ++a) {
    EXPECT_EQ(V.v()[a], h.partial(l + a));
    EXPECT_EQ(V.v()[l + a], -(h.partial(a) - Rational(2) * eps * v0 * Polynomial::variable(4, l + a)));
  }
  EXPECT_EQ(V.vt(), Tensor11::identity(4, Polynomial::constant(4, v0)));
  EXPECT_EQ(hamiltonian_vf(s, H).field, V);
}

TEST(HamiltonianField, SimplifiedCaseConstraints) {
  const GenSymplectic s = canonical_symplectic(2, Rational(1));
  const OrdinaryForm k = form_of(4, idx({1}), "2*x3") + form_of(4, idx({2}), "2*x4");
  EXPECT_TRUE(simplified_consistency(s.omega(), k, P("1", 4)).ok());
  EXPECT_FALSE(simplified_consistency(s.omega(), k, P("2", 4)).dk_matches);
  EXPECT_FALSE(simplified_consistency(s.omega(), k, P("x1", 4)).v0_admissible);
  const GenForm H(OrdinaryForm::scalar(P("x1", 4)), k, Rational(1));
  EXPECT_THROW(simplified_hamiltonian_vf(s, H, P("2", 4)), ValidationError);
}

class HamiltonianProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(HamiltonianProperties, DefiningRelationLieAndBracketClosure) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 15; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 42, t);
    Rational eps = rng.epsilon();
    GenSymplectic s = canonical_symplectic(n / 2, eps);
    if (n == 4 && !eps.is_zero()) s = curved_fixture(eps);
    const GenForm H = rng.gen_form(n, 0, eps), G = rng.gen_form(n, 0, eps);
    const GenVectorField VH = hamiltonian_vf(s, H).field, VG = hamiltonian_vf(s, G).field;
    EXPECT_TRUE(hamiltonian_residual(s, VH, H).is_zero());
    EXPECT_TRUE(lie_derivative(VH, s.s()).is_zero());
    const auto K = hamiltonian_potential(s, bracket(VH, VG));
    ASSERT_TRUE(K.has_value());
    EXPECT_TRUE(hamiltonian_residual(s, bracket(VH, VG), *K).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, HamiltonianProperties, ::testing::Values(2, 4));

TEST(Oscillator, UndampedMatchesCosine) {
  const Trajectory traj = integrate_hamilton(Rational(0), Rational(1), 1, {1.0}, {0.0}, 5.0, 1e-3);
  ASSERT_EQ(traj.rows.size(), 5001u);
  double err = 0;
  for (const auto& row : traj.rows) err = std::max(err, std::abs(row[1] - std::cos(row[0])));
  EXPECT_LT(err, 1e-6);
  EXPECT_NEAR(traj.rows.back()[0], 5.0, 1e-12);
}

TEST(Oscillator, AntiDampedMatchesClosedForm) {
  // eps v0 = 1/2: q'' - q' + q = 0, roots (1 +- i sqrt 3)/2.
  const Trajectory traj = integrate_hamilton(Rational(1), Rational(1, 2), 1, {1.0}, {0.0}, 5.0, 1e-3);
  const double w = std::sqrt(3.0) / 2;
  double err = 0;
  for (const auto& row : traj.rows) {
    const double t = row[0];
    const double exact = std::exp(t / 2) * (std::cos(w * t) - (0.5 / w) * std::sin(w * t));
    err = std::max(err, std::abs(row[1] - exact));
  }
  EXPECT_LT(err, 1e-6);
  const OscillatorSummary summary = oscillator_summary(Rational(1), Rational(1, 2), traj, {1.0}, {0.0});
  EXPECT_NEAR(summary.max_err, err, 1e-15);
  EXPECT_GE(summary.order_estimate, 3.8);
}

TEST(Oscillator, DampingSign) {
  auto energy = [](const std::vector<double>& row) { return 0.5 * (row[1] * row[1] + row[2] * row[2]); };
  const Trajectory grow = integrate_hamilton(Rational(1), Rational(1, 4), 1, {1.0}, {0.0}, 10.0, 1e-2);
  const Trajectory decay = integrate_hamilton(Rational(-1), Rational(1, 4), 1, {1.0}, {0.0}, 10.0, 1e-2);
  EXPECT_GT(energy(grow.rows.back()), energy(grow.rows.front()));
  EXPECT_LT(energy(decay.rows.back()), energy(decay.rows.front()));
}

TEST(Oscillator, CsvLayoutAndErrors) {
  const Trajectory traj = integrate_hamilton(Rational(0), Rational(1), 2, {1.0, 0.5}, {0.0, 0.0}, 0.2, 0.1);
  EXPECT_EQ(traj.csv().substr(0, traj.csv().find('\n')), "t,q1,q2,p1,p2");
  EXPECT_EQ(traj.rows.size(), 3u);
  EXPECT_THROW(integrate_hamilton(Rational(0), Rational(1), 1, {1.0}, {0.0}, 1.0, -0.1), std::invalid_argument);
  EXPECT_THROW(integrate_hamilton(Rational(0), Rational(1), 1, {1.0, 2.0}, {0.0}, 1.0, 0.1), DimensionError);
  EXPECT_THROW(integrate_hamilton(Rational(100), Rational(100), 1, {1.0}, {0.0}, 1000.0, 0.5), std::runtime_error);
}

TEST(Oscillator, ClosedFormBranches) {
  for (double c : {0.0, 0.5, 1.0, 1.5, -2.0}) {
    const double h = 1e-5, t = 0.7;
    const auto [q, p] = oscillator_closed_form(c, 0.3, -0.4, t);
    const double qp = oscillator_closed_form(c, 0.3, -0.4, t + h).first;
    const double qm = oscillator_closed_form(c, 0.3, -0.4, t - h).first;
    EXPECT_NEAR((qp - qm) / (2 * h), p, 1e-6);
    const double pp = oscillator_closed_form(c, 0.3, -0.4, t + h).second;
    const double pm = oscillator_closed_form(c, 0.3, -0.4, t - h).second;
    EXPECT_NEAR((pp - pm) / (2 * h) - 2 * c * p + q, 0.0, 1e-5);
  }
}

}  // namespace
}  // namespace genform
