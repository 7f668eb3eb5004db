#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "genform/form.hpp"
#include "genform/gen_form.hpp"
#include "genform/gen_vector.hpp"
#include "genform/matrix.hpp"

namespace genform {

using FormMatrix = Matrix<OrdinaryForm>;

/// Zero-filled n x n matrix of ordinary forms of the given degree.
FormMatrix zero_form_matrix(std::size_t n, std::size_t dim, int degree);
/// Zero-filled n x n matrix of generalized forms of the given degree.
GenFormMatrix zero_gen_matrix(std::size_t n, std::size_t dim, int degree, const Rational& epsilon);

/// Entrywise exterior derivative.
FormMatrix exterior_derivative(const FormMatrix& a);
GenFormMatrix exterior_derivative(const GenFormMatrix& a);
/// Matrix product with the wedge product on entries.
FormMatrix wedge(const FormMatrix& a, const FormMatrix& b);
/// P * f and f * P for a matrix of functions f.
FormMatrix left_multiply(const PolyMatrix& f, const FormMatrix& a);
FormMatrix right_multiply(const FormMatrix& a, const PolyMatrix& f);
/// Builds alpha + beta m entrywise.
GenFormMatrix assemble(const FormMatrix& body, const FormMatrix& soul, const Rational& epsilon);
FormMatrix bodies(const GenFormMatrix& a);
FormMatrix souls(const GenFormMatrix& a);
bool is_zero(const FormMatrix& a);
/// Common degree of all entries; DegreeError if they differ.
int uniform_degree(const GenFormMatrix& a);

/// Generalized affine connection A^mu_nu = alpha^mu_nu + beta^mu_nu m on one
/// chart. Row index mu, column index nu; every entry is a generalized 1-form.
class GenConnection {
 public:
  explicit GenConnection(GenFormMatrix a);
  static GenConnection from_parts(const FormMatrix& alpha, const FormMatrix& beta, const Rational& epsilon);
  static GenConnection zero(std::size_t dim, const Rational& epsilon);

  std::size_t dim() const { return a_.rows(); }
  const Rational& epsilon() const { return epsilon_; }
  const GenFormMatrix& matrix() const { return a_; }
  const GenForm& operator()(std::size_t mu, std::size_t nu) const { return a_(mu, nu); }
  /// Ordinary 1-form part.
  FormMatrix alpha() const { return bodies(a_); }
  /// Ordinary 2-form part.
  FormMatrix beta() const { return souls(a_); }

  friend bool operator==(const GenConnection& a, const GenConnection& b) { return a.a_ == b.a_; }

 private:
  GenFormMatrix a_;
  Rational epsilon_;
};

/// F = dA + A A.
GenFormMatrix curvature(const GenConnection& A);

/// d alpha + alpha alpha for a matrix of ordinary 1-forms.
FormMatrix ordinary_curvature(const FormMatrix& alpha);
/// D P = dP + alpha P - (-1)^p P alpha for a (1,1)-tensor valued ordinary p-form.
FormMatrix ordinary_cov_ext_d(const FormMatrix& alpha, const FormMatrix& p);

/// F = (calF + eps beta) + (D beta) m, with calF = d alpha + alpha alpha and
/// D beta = d beta + alpha beta - beta alpha.
GenFormMatrix curvature_expanded(const GenConnection& A);

/// A' = G^-1 dG + G^-1 A G. Throws ValidationError unless G G^-1 = G^-1 G = 1.
GenConnection transform_connection(const GenConnection& A, const PolyMatrix& G, const PolyMatrix& G_inv);
/// G^-1 P G for a tensor valued form.
GenFormMatrix conjugate(const GenFormMatrix& p, const PolyMatrix& G, const PolyMatrix& G_inv);

/// dF + A F - F A, identically zero.
GenFormMatrix bianchi_residual(const GenConnection& A);

/// DP = dP + A P + (-1)^{p+1} P A for a (1,1)-tensor valued generalized p-form.
GenFormMatrix cov_ext_d_tensor(const GenConnection& A, const GenFormMatrix& P);

/// Dv^mu = dv^mu + A^mu_nu v^nu, one generalized 1-form per component.
std::vector<GenForm> cov_deriv_vf(const GenConnection& A, const GenVectorField& V);
/// Body Dv - eps w, soul D w + beta v, where w^mu = v^mu_nu dx^nu and D is the
/// covariant exterior derivative of alpha.
std::vector<GenForm> cov_deriv_vf_expanded(const GenConnection& A, const GenVectorField& V);
/// i_W applied to each Dv^mu, read back as a generalized vector field.
GenVectorField cov_deriv_vf_along(const GenConnection& A, const GenVectorField& W, const GenVectorField& V);

struct FlatnessCertificate {
  bool flat = false;
  /// calF + eps beta = 0
  bool body_vanishes = false;
  /// D beta = 0
  bool soul_vanishes = false;
  FormMatrix body_residual;
  FormMatrix soul_residual;
};

FlatnessCertificate flatness_check(const GenConnection& A);

/// Generalized metric g_{mu nu} = gamma_{mu nu} + chi_{mu nu} m with the exact
/// polynomial inverse of gamma supplied by the caller.
class GenMetric {
 public:
  GenMetric(GenFormMatrix g, PolyMatrix gamma_inv);
  static GenMetric from_parts(const PolyMatrix& gamma, const FormMatrix& chi, const PolyMatrix& gamma_inv,
                              const Rational& epsilon);

  std::size_t dim() const { return g_.rows(); }
  const Rational& epsilon() const { return epsilon_; }
  const GenFormMatrix& matrix() const { return g_; }
  const PolyMatrix& gamma_inv() const { return gamma_inv_; }
  PolyMatrix gamma() const;
  FormMatrix chi() const { return souls(g_); }

 private:
  GenFormMatrix g_;
  PolyMatrix gamma_inv_;
  Rational epsilon_;
};

/// g^{mu nu} = gamma^{mu nu} - chi^{mu nu} m, chi^{mu nu} = gamma^{mu rho} gamma^{nu sigma} chi_{rho sigma}.
GenFormMatrix metric_inverse(const GenMetric& g);

/// Q_{mu nu} = dg_{mu nu} - g_{mu lambda} A^lambda_nu - g_{lambda nu} A^lambda_mu.
GenFormMatrix nonmetricity(const GenConnection& A, const GenMetric& g);
/// Q = (q - eps chi) + [D chi - (beta_{mu nu} + beta_{nu mu})] m with
/// beta_{mu nu} = gamma_{mu lambda} beta^lambda_nu.
GenFormMatrix nonmetricity_expanded(const GenConnection& A, const GenMetric& g);

/// q_{mu nu} = d gamma_{mu nu} - gamma_{mu lambda} alpha^lambda_nu - gamma_{lambda nu} alpha^lambda_mu.
FormMatrix ordinary_nonmetricity(const PolyMatrix& gamma, const FormMatrix& alpha);
/// D chi_{mu nu} = d chi_{mu nu} - alpha^lambda_mu chi_{lambda nu} - alpha^lambda_nu chi_{mu lambda}.
FormMatrix covariant_lower_pair(const FormMatrix& chi, const FormMatrix& alpha);

/// alpha^mu_nu = Gamma^mu_{rho nu} dx^rho for the Christoffel symbols of gamma.
FormMatrix levi_civita(const PolyMatrix& gamma, const PolyMatrix& gamma_inv);
/// T^mu = alpha^mu_nu dx^nu.
std::vector<OrdinaryForm> torsion(const FormMatrix& alpha);
bool is_torsion_free(const FormMatrix& alpha);

struct TheoremResult {
  GenMetric metric;
  GenConnection connection;
  GenFormMatrix nonmetricity;
  GenFormMatrix curvature;
  /// Closed-form curvature for the case, evaluated on the same inputs.
  GenFormMatrix closed_form_curvature;
  /// Case (ii) only: the curvature re-derived from the construction.
  std::optional<GenFormMatrix> derived_curvature;

  bool nonmetricity_vanishes() const { return is_zero(nonmetricity); }
  bool curvature_matches_closed_form() const { return curvature == closed_form_curvature; }
};

/// Case eps = 0: A = alpha + (beta_tilde + 1/2 gamma^{mu lambda} D chi_{lambda nu}) m.
/// `alpha` must be torsion free and metric for gamma; `beta_tilde` (mixed
/// indices) must be antisymmetric after lowering and defaults to zero.
/// Throws ValidationError on bad input or if Q != 0 after construction.
TheoremResult metric_connection_eps0(const PolyMatrix& gamma, const PolyMatrix& gamma_inv, const FormMatrix& chi,
                                     const FormMatrix& alpha, const std::optional<FormMatrix>& beta_tilde = {});

/// Case eps != 0: g = gamma + (q / eps) m and
/// A = alpha + [beta_tilde - 1/(2 eps) (calF^mu_nu + gamma^{mu lambda} calF_{nu lambda})] m
/// with calF_{mu nu} = gamma_{mu lambda} calF^lambda_nu. Any chi is replaced by q / eps.
TheoremResult metric_connection_eps(const PolyMatrix& gamma, const PolyMatrix& gamma_inv, const FormMatrix& alpha,
                                    const Rational& epsilon, const std::optional<FormMatrix>& beta_tilde = {});

/// Closed-form curvature for eps != 0, read with gamma raising and
/// lowering: 1/2 (calF^mu_nu - calF_nu^mu) - 1/(2 eps)(q_{nu lambda} calF^{lambda mu}
/// + q^{mu lambda} calF_{nu lambda}) m.
GenFormMatrix closed_form_curvature_eps(const PolyMatrix& gamma, const PolyMatrix& gamma_inv, const FormMatrix& alpha,
                                   const Rational& epsilon);

std::string to_string(const GenFormMatrix& a);

}  // namespace genform
