#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "genform/gen_form.hpp"
#include "genform/gen_vector.hpp"
#include "genform/matrix.hpp"

namespace genform {

/// Closed, non-degenerate generalized two-form s = Omega + Upsilon m together
/// with the inverse matrix of Omega, normalized so that
/// Omega^{ac} Omega_{bc} = delta^a_b.
class GenSymplectic {
 public:
  const GenForm& s() const { return s_; }
  const OrdinaryForm& omega() const { return s_.body(); }
  const OrdinaryForm& upsilon() const { return s_.soul(); }
  const PolyMatrix& omega_inv() const { return omega_inv_; }
  std::size_t dim() const { return s_.dim(); }
  const Rational& epsilon() const { return s_.epsilon(); }

 private:
  GenSymplectic(GenForm s, PolyMatrix omega_inv) : s_(std::move(s)), omega_inv_(std::move(omega_inv)) {}
  friend GenSymplectic symplectic_validate(const GenForm& s, const PolyMatrix& omega_inv);

  GenForm s_;
  PolyMatrix omega_inv_;
};

/// Checks degree 2, even dimension, d s = 0 and the inverse relation exactly.
/// Throws ValidationError (or DegreeError/DimensionError) naming the failure.
GenSymplectic symplectic_validate(const GenForm& s, const PolyMatrix& omega_inv);

/// Full antisymmetric component matrix F_ab of a two-form stored on the
/// increasing basis, so that F = 1/2 F_ab dx^a dx^b.
PolyMatrix two_form_matrix(const OrdinaryForm& f);

/// Pure field W with i_W s = 0.
bool is_kernel_field(const GenVectorField& W, const GenSymplectic& s);

/// Kernel field w^a_b = Omega^{ac} S_bc built from a symmetric S.
GenVectorField kernel_field(const GenSymplectic& s, const PolyMatrix& symmetric);

struct HamiltonianField {
  GenVectorField field;
  /// True when the component formula failed the defining relation
  /// and the field came from the direct solve instead.
  bool used_fallback;
};

/// Closed component formula
///   v^a = Omega^{ab}(eps k_b - h_{,b}),
///   v^a_b = Omega^{ca}(k_{[b,c]} - 1/2 v^m Upsilon_{mbc}),
/// evaluated literally.
GenVectorField hamiltonian_vf_formula(const GenSymplectic& s, const GenForm& H);

/// Direct solution of i_V s = -d H with zero kernel component:
///   v^a = Omega^{ab}(eps k_b - h_{,b}),  v^a_b = Omega^{ac} T_bc,
/// where T = 1/2 (dk + i_v Upsilon) as a full antisymmetric matrix.
GenVectorField hamiltonian_vf_solve(const GenSymplectic& s, const GenForm& H);

/// Tries the component formula, re-verifies i_V s + d H = 0 and falls back to
/// the direct solve. Throws ValidationError if neither satisfies it.
HamiltonianField hamiltonian_vf(const GenSymplectic& s, const GenForm& H);

/// i_V s + d H, zero exactly when V is Hamiltonian for H.
GenForm hamiltonian_residual(const GenSymplectic& s, const GenVectorField& V, const GenForm& H);

/// K with i_V s = -d K, found by integrating on the star-shaped chart with the
/// radial homotopy operator. Empty when i_V s is not exact.
std::optional<GenForm> hamiltonian_potential(const GenSymplectic& s, const GenVectorField& V);

/// Conditions for the simplified case s = Omega with an embedded field
/// (v, v0): 2 v0 Omega = dk and, when dim > 2, constant v0.
struct SimplifiedConsistency {
  bool dk_matches;
  bool v0_admissible;
  bool ok() const { return dk_matches && v0_admissible; }
};
SimplifiedConsistency simplified_consistency(const OrdinaryForm& omega, const OrdinaryForm& k, const Polynomial& v0);

/// Embedded Hamiltonian field (v, v0) for s = Omega, H = h + k m; checks the
/// consistency conditions first (ValidationError) and re-verifies the result.
GenVectorField simplified_hamiltonian_vf(const GenSymplectic& s, const GenForm& H, const Polynomial& v0);

/// Symplectic coordinates x = (q^1..q^l, p_1..p_l) on R^{2l}:
/// Omega = dp_a dq^a, Upsilon = 0.
GenSymplectic canonical_symplectic(std::size_t l, const Rational& epsilon);

/// H = h + k m with h = sum 1/2 (q^2 + p^2) and k = 2 v0 p_a dq^a.
GenForm oscillator_hamiltonian(std::size_t l, const Rational& v0, const Rational& epsilon);

struct Trajectory {
  std::size_t l;
  /// Rows of (t, q^1..q^l, p_1..p_l).
  std::vector<std::vector<double>> rows;

  std::string csv() const;
};

/// Classical fixed-step RK4 for dx/dt = v(x). Throws std::runtime_error on a
/// non-finite state.
std::vector<std::vector<double>> integrate_rk4(const VectorField& v, std::vector<double> x0, double t_end, double dt);

/// Generalized Hamilton equations dq/dt = dh/dp, dp/dt = -(dh/dq - 2 eps v0 p)
/// for the oscillator h, integrated with RK4 from the ordinary part of the
/// symbolic Hamiltonian field.
Trajectory integrate_hamilton(const Rational& epsilon, const Rational& v0, std::size_t l,
                              const std::vector<double>& q0, const std::vector<double>& p0, double t_end, double dt);

/// Exact solution of q'' - 2c q' + q = 0 with q(0) = q0, q'(0) = p0, returning
/// (q, p = q').
std::pair<double, double> oscillator_closed_form(double c, double q0, double p0, double t);

struct OscillatorSummary {
  double max_err;
  double order_estimate;
};

/// Max |q - q_exact| over all steps and components, plus the observed order
/// log2(err(0.1) / err(0.05)) on the same problem.
OscillatorSummary oscillator_summary(const Rational& epsilon, const Rational& v0, const Trajectory& traj,
                                     const std::vector<double>& q0, const std::vector<double>& p0);

}  // namespace genform
