#include "genform/connection.hpp"

#include <bit>
#include <sstream>

#include "genform/error.hpp"

namespace genform {

namespace {

std::size_t form_dim(const FormMatrix& a) { return a(0, 0).dim(); }

void check_square(std::size_t rows, std::size_t cols, std::size_t dim, const char* what) {
  if (rows != cols) throw DimensionError(std::string(what) + ": matrix must be square");
  if (rows != dim) throw DimensionError(std::string(what) + ": matrix size must equal the dimension");
}

PolyMatrix check_inverse_pair(const PolyMatrix& G, const PolyMatrix& G_inv, const char* what) {
  if (!is_identity(G * G_inv) || !is_identity(G_inv * G)) {
    throw ValidationError(std::string(what) + ": supplied inverse is not a two-sided inverse");
  }
  return G_inv;
}

OrdinaryForm one_form_dx(std::size_t dim, std::size_t axis) { return OrdinaryForm::dx(dim, axis); }

// M_{mu nu} = gamma_{mu lambda} M^lambda_nu
FormMatrix lower_first(const PolyMatrix& gamma, const FormMatrix& m) { return left_multiply(gamma, m); }

// M^mu_nu = gamma^{mu lambda} M_{lambda nu}
FormMatrix raise_first(const PolyMatrix& gamma_inv, const FormMatrix& m) { return left_multiply(gamma_inv, m); }

bool lowered_antisymmetric(const PolyMatrix& gamma, const FormMatrix& mixed) {
  const FormMatrix low = lower_first(gamma, mixed);
  for (std::size_t r = 0; r < low.rows(); ++r) {
    for (std::size_t c = 0; c < low.cols(); ++c) {
      if (!(low(r, c) + low(c, r)).is_zero()) return false;
    }
  }
  return true;
}

void check_metric_inputs(const PolyMatrix& gamma, const PolyMatrix& gamma_inv, const FormMatrix& alpha,
                         const char* what) {
  const std::size_t n = gamma.rows();
  check_square(gamma.rows(), gamma.cols(), n, what);
  if (alpha.rows() != n || alpha.cols() != n) throw DimensionError(std::string(what) + ": alpha shape mismatch");
  if (gamma(0, 0).dim() != n) throw DimensionError(std::string(what) + ": metric size must equal the dimension");
  if (!(gamma == gamma.transpose())) throw ValidationError(std::string(what) + ": gamma is not symmetric");
  check_inverse_pair(gamma, gamma_inv, what);
}

}  // namespace

FormMatrix zero_form_matrix(std::size_t n, std::size_t dim, int degree) {
  return FormMatrix(n, n, OrdinaryForm(dim, degree));
}

GenFormMatrix zero_gen_matrix(std::size_t n, std::size_t dim, int degree, const Rational& epsilon) {
  return GenFormMatrix(n, n, GenForm::zero(dim, degree, epsilon));
}

FormMatrix exterior_derivative(const FormMatrix& a) {
  return a.map([](const OrdinaryForm& f) { return exterior_derivative(f); });
}

GenFormMatrix exterior_derivative(const GenFormMatrix& a) {
  return a.map([](const GenForm& f) { return exterior_derivative(f); });
}

FormMatrix wedge(const FormMatrix& a, const FormMatrix& b) {
  if (a.cols() != b.rows() || a.cols() == 0) throw DimensionError("matrix wedge: shape mismatch");
  FormMatrix out(a.rows(), b.cols(), wedge(a(0, 0), b(0, 0)));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      OrdinaryForm acc = wedge(a(r, 0), b(0, c));
      for (std::size_t k = 1; k < a.cols(); ++k) acc += wedge(a(r, k), b(k, c));
      out(r, c) = std::move(acc);
    }
  }
  return out;
}

FormMatrix left_multiply(const PolyMatrix& f, const FormMatrix& a) {
  if (f.cols() != a.rows()) throw DimensionError("left_multiply: shape mismatch");
  FormMatrix out(f.rows(), a.cols(), OrdinaryForm(form_dim(a), a(0, 0).degree()));
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (std::size_t k = 0; k < f.cols(); ++k) out(r, c) += f(r, k) * a(k, c);
    }
  }
  return out;
}

FormMatrix right_multiply(const FormMatrix& a, const PolyMatrix& f) {
  if (a.cols() != f.rows()) throw DimensionError("right_multiply: shape mismatch");
  FormMatrix out(a.rows(), f.cols(), OrdinaryForm(form_dim(a), a(0, 0).degree()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      for (std::size_t k = 0; k < a.cols(); ++k) out(r, c) += f(k, c) * a(r, k);
    }
  }
  return out;
}

GenFormMatrix assemble(const FormMatrix& body, const FormMatrix& soul, const Rational& epsilon) {
  if (body.rows() != soul.rows() || body.cols() != soul.cols()) throw DimensionError("assemble: shape mismatch");
  GenFormMatrix out(body.rows(), body.cols(), GenForm(body(0, 0), soul(0, 0), epsilon));
  for (std::size_t r = 0; r < body.rows(); ++r) {
    for (std::size_t c = 0; c < body.cols(); ++c) out(r, c) = GenForm(body(r, c), soul(r, c), epsilon);
  }
  return out;
}

FormMatrix bodies(const GenFormMatrix& a) {
  return a.map([](const GenForm& f) { return f.body(); });
}

FormMatrix souls(const GenFormMatrix& a) {
  return a.map([](const GenForm& f) { return f.soul(); });
}

bool is_zero(const FormMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_zero()) return false;
    }
  }
  return true;
}

int uniform_degree(const GenFormMatrix& a) {
  const int p = a(0, 0).degree();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c).degree() != p) throw DegreeError("matrix entries have mixed degrees");
    }
  }
  return p;
}

GenConnection::GenConnection(GenFormMatrix a) : a_(std::move(a)), epsilon_(a_(0, 0).epsilon()) {
  check_square(a_.rows(), a_.cols(), a_(0, 0).dim(), "GenConnection");
  for (std::size_t r = 0; r < a_.rows(); ++r) {
    for (std::size_t c = 0; c < a_.cols(); ++c) {
      const GenForm& e = a_(r, c);
      if (e.degree() != 1) throw DegreeError("GenConnection: entries must be generalized 1-forms");
      if (e.dim() != dim()) throw DimensionError("GenConnection: entry dimension mismatch");
      if (e.epsilon() != epsilon_) throw EpsilonMismatch("GenConnection: entries disagree on epsilon");
    }
  }
}

GenConnection GenConnection::from_parts(const FormMatrix& alpha, const FormMatrix& beta, const Rational& epsilon) {
  return GenConnection(assemble(alpha, beta, epsilon));
}

GenConnection GenConnection::zero(std::size_t dim, const Rational& epsilon) {
  return GenConnection(zero_gen_matrix(dim, dim, 1, epsilon));
}

GenFormMatrix curvature(const GenConnection& A) { return exterior_derivative(A.matrix()) + A.matrix() * A.matrix(); }

FormMatrix ordinary_curvature(const FormMatrix& alpha) { return exterior_derivative(alpha) + wedge(alpha, alpha); }

FormMatrix ordinary_cov_ext_d(const FormMatrix& alpha, const FormMatrix& p) {
  const int deg = p(0, 0).degree();
  const FormMatrix pa = wedge(p, alpha);
  return exterior_derivative(p) + wedge(alpha, p) + (deg % 2 == 0 ? -pa : pa);
}

GenFormMatrix curvature_expanded(const GenConnection& A) {
  const FormMatrix alpha = A.alpha();
  const FormMatrix beta = A.beta();
  const FormMatrix body = ordinary_curvature(alpha) + beta.map([&](const OrdinaryForm& b) {
    return A.epsilon() * b;
  });
  return assemble(body, ordinary_cov_ext_d(alpha, beta), A.epsilon());
}

GenFormMatrix conjugate(const GenFormMatrix& p, const PolyMatrix& G, const PolyMatrix& G_inv) {
  const Rational& eps = p(0, 0).epsilon();
  return as_gen_forms(G_inv, eps) * p * as_gen_forms(G, eps);
}

GenConnection transform_connection(const GenConnection& A, const PolyMatrix& G, const PolyMatrix& G_inv) {
  check_square(G.rows(), G.cols(), A.dim(), "transform_connection");
  check_inverse_pair(G, G_inv, "transform_connection");
  const Rational& eps = A.epsilon();
  const GenFormMatrix gi = as_gen_forms(G_inv, eps);
  const GenFormMatrix g = as_gen_forms(G, eps);
  return GenConnection(gi * exterior_derivative(g) + gi * A.matrix() * g);
}

GenFormMatrix bianchi_residual(const GenConnection& A) {
  const GenFormMatrix F = curvature(A);
  return exterior_derivative(F) + A.matrix() * F - F * A.matrix();
}

GenFormMatrix cov_ext_d_tensor(const GenConnection& A, const GenFormMatrix& P) {
  check_square(P.rows(), P.cols(), A.dim(), "cov_ext_d_tensor");
  const int p = uniform_degree(P);
  const GenFormMatrix pa = P * A.matrix();
  return exterior_derivative(P) + A.matrix() * P + (p % 2 == 0 ? Rational(-1) : Rational(1)) * pa;
}

std::vector<GenForm> cov_deriv_vf(const GenConnection& A, const GenVectorField& V) {
  if (V.dim() != A.dim()) throw DimensionError("cov_deriv_vf: dimension mismatch");
  if (V.epsilon() != A.epsilon()) throw EpsilonMismatch("cov_deriv_vf: epsilon mismatch");
  const std::size_t n = A.dim();
  std::vector<GenForm> out;
  out.reserve(n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    GenForm acc = exterior_derivative(V.component(mu));
    for (std::size_t nu = 0; nu < n; ++nu) acc += A(mu, nu) * V.component(nu);
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<GenForm> cov_deriv_vf_expanded(const GenConnection& A, const GenVectorField& V) {
  if (V.dim() != A.dim()) throw DimensionError("cov_deriv_vf_expanded: dimension mismatch");
  if (V.epsilon() != A.epsilon()) throw EpsilonMismatch("cov_deriv_vf_expanded: epsilon mismatch");
  const std::size_t n = A.dim();
  const Rational& eps = A.epsilon();
  const FormMatrix alpha = A.alpha();
  const FormMatrix beta = A.beta();

  std::vector<OrdinaryForm> w;
  for (std::size_t mu = 0; mu < n; ++mu) {
    OrdinaryForm wm(n, 1);
    for (std::size_t nu = 0; nu < n; ++nu) wm += V.vt()(mu, nu) * one_form_dx(n, nu);
    w.push_back(std::move(wm));
  }

  std::vector<GenForm> out;
  out.reserve(n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    OrdinaryForm body = exterior_derivative(OrdinaryForm::scalar(V.v()[mu])) - eps * w[mu];
    OrdinaryForm soul = exterior_derivative(w[mu]);
    for (std::size_t nu = 0; nu < n; ++nu) {
      body += V.v()[nu] * alpha(mu, nu);
      soul += wedge(alpha(mu, nu), w[nu]) + V.v()[nu] * beta(mu, nu);
    }
    out.emplace_back(std::move(body), std::move(soul), eps);
  }
  return out;
}

GenVectorField cov_deriv_vf_along(const GenConnection& A, const GenVectorField& W, const GenVectorField& V) {
  if (W.dim() != A.dim() || W.epsilon() != A.epsilon()) {
    throw DimensionError("cov_deriv_vf_along: direction field does not match the connection");
  }
  const std::size_t n = A.dim();
  const std::vector<GenForm> dv = cov_deriv_vf(A, V);
  VectorField v(n);
  Tensor11 vt(n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    const GenForm c = interior(W, dv[mu]);
    if (c.degree() != 0) throw DegreeError("cov_deriv_vf_along: contraction is not a generalized 0-form");
    v[mu] = c.body().component(0);
    for (const auto& [m, coeff] : c.soul().components()) {
      vt(mu, static_cast<std::size_t>(std::countr_zero(m))) = coeff;
    }
  }
  return GenVectorField(std::move(v), std::move(vt), A.epsilon());
}

FlatnessCertificate flatness_check(const GenConnection& A) {
  const GenFormMatrix F = curvature(A);
  FlatnessCertificate cert{.body_residual = bodies(F), .soul_residual = souls(F)};
  cert.body_vanishes = is_zero(cert.body_residual);
  cert.soul_vanishes = is_zero(cert.soul_residual);
  cert.flat = cert.body_vanishes && cert.soul_vanishes;
  return cert;
}

GenMetric::GenMetric(GenFormMatrix g, PolyMatrix gamma_inv)
    : g_(std::move(g)), gamma_inv_(std::move(gamma_inv)), epsilon_(g_(0, 0).epsilon()) {
  const std::size_t n = g_.rows();
  check_square(g_.rows(), g_.cols(), g_(0, 0).dim(), "GenMetric");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const GenForm& e = g_(r, c);
      if (e.degree() != 0) throw DegreeError("GenMetric: entries must be generalized 0-forms");
      if (e.epsilon() != epsilon_) throw EpsilonMismatch("GenMetric: entries disagree on epsilon");
      if (!(e == g_(c, r))) throw ValidationError("GenMetric: metric is not symmetric");
    }
  }
  check_square(gamma_inv_.rows(), gamma_inv_.cols(), n, "GenMetric inverse");
  check_inverse_pair(gamma(), gamma_inv_, "GenMetric");
}

GenMetric GenMetric::from_parts(const PolyMatrix& gamma, const FormMatrix& chi, const PolyMatrix& gamma_inv,
                                const Rational& epsilon) {
  return GenMetric(assemble(gamma.map([](const Polynomial& p) { return OrdinaryForm::scalar(p); }), chi, epsilon),
                   gamma_inv);
}

PolyMatrix GenMetric::gamma() const {
  return g_.map([](const GenForm& f) { return f.body().component(0); });
}

GenFormMatrix metric_inverse(const GenMetric& g) {
  const PolyMatrix& gi = g.gamma_inv();
  const FormMatrix chi_up = right_multiply(left_multiply(gi, g.chi()), gi.transpose());
  const FormMatrix body = gi.map([](const Polynomial& p) { return OrdinaryForm::scalar(p); });
  return assemble(body, chi_up.map([](const OrdinaryForm& f) { return -f; }), g.epsilon());
}

GenFormMatrix nonmetricity(const GenConnection& A, const GenMetric& g) {
  if (A.dim() != g.dim()) throw DimensionError("nonmetricity: dimension mismatch");
  if (A.epsilon() != g.epsilon()) throw EpsilonMismatch("nonmetricity: epsilon mismatch");
  const std::size_t n = A.dim();
  const GenFormMatrix& G = g.matrix();
  GenFormMatrix out = exterior_derivative(G);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      for (std::size_t l = 0; l < n; ++l) {
        out(mu, nu) -= G(mu, l) * A(l, nu);
        out(mu, nu) -= G(l, nu) * A(l, mu);
      }
    }
  }
  return out;
}

FormMatrix ordinary_nonmetricity(const PolyMatrix& gamma, const FormMatrix& alpha) {
  const FormMatrix ga = left_multiply(gamma, alpha);
  const FormMatrix dg = exterior_derivative(gamma.map([](const Polynomial& p) { return OrdinaryForm::scalar(p); }));
  return dg - ga - ga.transpose();
}

FormMatrix covariant_lower_pair(const FormMatrix& chi, const FormMatrix& alpha) {
  const std::size_t n = chi.rows();
  FormMatrix out = exterior_derivative(chi);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      for (std::size_t l = 0; l < n; ++l) {
        out(mu, nu) -= wedge(alpha(l, mu), chi(l, nu));
        out(mu, nu) -= wedge(alpha(l, nu), chi(mu, l));
      }
    }
  }
  return out;
}

GenFormMatrix nonmetricity_expanded(const GenConnection& A, const GenMetric& g) {
  if (A.dim() != g.dim()) throw DimensionError("nonmetricity_expanded: dimension mismatch");
  if (A.epsilon() != g.epsilon()) throw EpsilonMismatch("nonmetricity_expanded: epsilon mismatch");
  const PolyMatrix gamma = g.gamma();
  const FormMatrix chi = g.chi();
  const FormMatrix alpha = A.alpha();
  const FormMatrix beta_low = lower_first(gamma, A.beta());
  const FormMatrix body =
      ordinary_nonmetricity(gamma, alpha) - chi.map([&](const OrdinaryForm& c) { return g.epsilon() * c; });
  const FormMatrix soul = covariant_lower_pair(chi, alpha) - beta_low - beta_low.transpose();
  return assemble(body, soul, A.epsilon());
}

FormMatrix levi_civita(const PolyMatrix& gamma, const PolyMatrix& gamma_inv) {
  const std::size_t n = gamma.rows();
  check_square(n, gamma.cols(), gamma(0, 0).dim(), "levi_civita");
  check_inverse_pair(gamma, gamma_inv, "levi_civita");
  FormMatrix out = zero_form_matrix(n, n, 1);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      for (std::size_t rho = 0; rho < n; ++rho) {
        // Gamma^mu_{rho nu}
        Polynomial c(n);
        for (std::size_t l = 0; l < n; ++l) {
          const Polynomial s = gamma(l, nu).partial(rho) + gamma(l, rho).partial(nu) - gamma(rho, nu).partial(l);
          if (!s.is_zero()) c += gamma_inv(mu, l) * s;
        }
        if (!c.is_zero()) out(mu, nu) += (Rational(1, 2) * c) * one_form_dx(n, rho);
      }
    }
  }
  return out;
}

std::vector<OrdinaryForm> torsion(const FormMatrix& alpha) {
  const std::size_t n = alpha.rows();
  const std::size_t dim = form_dim(alpha);
  std::vector<OrdinaryForm> out;
  for (std::size_t mu = 0; mu < n; ++mu) {
    OrdinaryForm t(dim, 2);
    for (std::size_t nu = 0; nu < n; ++nu) t += wedge(alpha(mu, nu), one_form_dx(dim, nu));
    out.push_back(std::move(t));
  }
  return out;
}

bool is_torsion_free(const FormMatrix& alpha) {
  for (const OrdinaryForm& t : torsion(alpha)) {
    if (!t.is_zero()) return false;
  }
  return true;
}

TheoremResult metric_connection_eps0(const PolyMatrix& gamma, const PolyMatrix& gamma_inv, const FormMatrix& chi,
                                     const FormMatrix& alpha, const std::optional<FormMatrix>& beta_tilde) {
  check_metric_inputs(gamma, gamma_inv, alpha, "metric_connection_eps0");
  const std::size_t n = gamma.rows();
  const Rational eps(0);
  if (!is_torsion_free(alpha)) throw ValidationError("metric_connection_eps0: alpha has torsion");
  if (!is_zero(ordinary_nonmetricity(gamma, alpha))) {
    throw ValidationError("metric_connection_eps0: alpha is not metric for gamma");
  }
  const FormMatrix bt = beta_tilde.value_or(zero_form_matrix(n, n, 2));
  if (!lowered_antisymmetric(gamma, bt)) {
    throw ValidationError("metric_connection_eps0: beta_tilde is not antisymmetric after lowering");
  }

  const GenMetric g = GenMetric::from_parts(gamma, chi, gamma_inv, eps);
  const FormMatrix half_dchi =
      raise_first(gamma_inv, covariant_lower_pair(chi, alpha)).map([](const OrdinaryForm& f) {
        return Rational(1, 2) * f;
      });
  const GenConnection A = GenConnection::from_parts(alpha, bt + half_dchi, eps);
  GenFormMatrix Q = nonmetricity(A, g);
  if (!is_zero(Q)) throw ValidationError("metric_connection_eps0: non-metricity is nonzero after construction");

  // F = calF + [1/2 (calF chi - chi calF) + D beta_tilde] m with chi^mu_nu raised.
  const FormMatrix cal_f = ordinary_curvature(alpha);
  const FormMatrix chi_mixed = raise_first(gamma_inv, chi);
  const FormMatrix comm = wedge(cal_f, chi_mixed) - wedge(chi_mixed, cal_f);
  const FormMatrix closed_form_soul =
      comm.map([](const OrdinaryForm& f) { return Rational(1, 2) * f; }) + ordinary_cov_ext_d(alpha, bt);
  GenFormMatrix F = curvature(A);
  return TheoremResult{.metric = g,
                       .connection = A,
                       .nonmetricity = std::move(Q),
                       .curvature = std::move(F),
                       .closed_form_curvature = assemble(cal_f, closed_form_soul, eps),
                       .derived_curvature = std::nullopt};
}

namespace {

struct CaseTwoTerms {
  FormMatrix cal_f;
  FormMatrix q;
  // calF_nu^mu = gamma^{mu lambda} calF_{nu lambda}
  FormMatrix cal_f_transposed;
  // q_{nu lambda} calF^{lambda mu}
  FormMatrix q_low_f;
  // q^{mu lambda} calF_{nu lambda}
  FormMatrix q_up_f;
};

CaseTwoTerms case_two_terms(const PolyMatrix& gamma, const PolyMatrix& gamma_inv, const FormMatrix& alpha) {
  const std::size_t n = gamma.rows();
  const std::size_t dim = form_dim(alpha);
  CaseTwoTerms t{.cal_f = ordinary_curvature(alpha),
                 .q = ordinary_nonmetricity(gamma, alpha),
                 .cal_f_transposed = zero_form_matrix(n, dim, 2),
                 .q_low_f = zero_form_matrix(n, dim, 3),
                 .q_up_f = zero_form_matrix(n, dim, 3)};
  const FormMatrix f_low = lower_first(gamma, t.cal_f);                   // calF_{mu nu}
  const FormMatrix f_up = right_multiply(t.cal_f, gamma_inv);             // calF^{mu nu}
  const FormMatrix q_up = right_multiply(left_multiply(gamma_inv, t.q), gamma_inv);  // q^{mu nu}
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      for (std::size_t l = 0; l < n; ++l) {
        t.cal_f_transposed(mu, nu) += gamma_inv(mu, l) * f_low(nu, l);
        t.q_low_f(mu, nu) += wedge(t.q(nu, l), f_up(l, mu));
        t.q_up_f(mu, nu) += wedge(q_up(mu, l), f_low(nu, l));
      }
    }
  }
  return t;
}

FormMatrix scaled(const FormMatrix& a, const Rational& c) {
  return a.map([&](const OrdinaryForm& f) { return c * f; });
}

}  // namespace

GenFormMatrix closed_form_curvature_eps(const PolyMatrix& gamma, const PolyMatrix& gamma_inv, const FormMatrix& alpha,
                                   const Rational& epsilon) {
  if (epsilon.is_zero()) throw ValidationError("closed_form_curvature_eps: epsilon must be nonzero");
  const CaseTwoTerms t = case_two_terms(gamma, gamma_inv, alpha);
  const Rational half(1, 2);
  const FormMatrix body = scaled(t.cal_f - t.cal_f_transposed, half);
  const FormMatrix soul = scaled(t.q_low_f + t.q_up_f, -half / epsilon);
  return assemble(body, soul, epsilon);
}

TheoremResult metric_connection_eps(const PolyMatrix& gamma, const PolyMatrix& gamma_inv, const FormMatrix& alpha,
                                    const Rational& epsilon, const std::optional<FormMatrix>& beta_tilde) {
  if (epsilon.is_zero()) throw ValidationError("metric_connection_eps: epsilon must be nonzero");
  check_metric_inputs(gamma, gamma_inv, alpha, "metric_connection_eps");
  const std::size_t n = gamma.rows();
  const FormMatrix bt = beta_tilde.value_or(zero_form_matrix(n, n, 2));
  if (!lowered_antisymmetric(gamma, bt)) {
    throw ValidationError("metric_connection_eps: beta_tilde is not antisymmetric after lowering");
  }

  const CaseTwoTerms t = case_two_terms(gamma, gamma_inv, alpha);
  const Rational half(1, 2);
  const GenMetric g = GenMetric::from_parts(gamma, scaled(t.q, Rational(1) / epsilon), gamma_inv, epsilon);
  const FormMatrix beta = bt - scaled(t.cal_f + t.cal_f_transposed, half / epsilon);
  const GenConnection A = GenConnection::from_parts(alpha, beta, epsilon);
  GenFormMatrix Q = nonmetricity(A, g);
  if (!is_zero(Q)) throw ValidationError("metric_connection_eps: non-metricity is nonzero after construction");

  // beta_tilde adds eps beta_tilde + (D beta_tilde) m to both curvature readings.
  const GenFormMatrix extra = assemble(scaled(bt, epsilon), ordinary_cov_ext_d(alpha, bt), epsilon);
  // D(gamma^{mu lambda} calF_{nu lambda}) = q_{nu lambda} calF^{lambda mu} - q^{mu lambda} calF_{nu lambda}.
  const GenFormMatrix derived = assemble(scaled(t.cal_f - t.cal_f_transposed, half),
                                         scaled(t.q_low_f - t.q_up_f, -half / epsilon), epsilon) +
                                extra;
  GenFormMatrix F = curvature(A);
  return TheoremResult{.metric = g,
                       .connection = A,
                       .nonmetricity = std::move(Q),
                       .curvature = std::move(F),
                       .closed_form_curvature = closed_form_curvature_eps(gamma, gamma_inv, alpha, epsilon) + extra,
                       .derived_curvature = derived};
}

std::string to_string(const GenFormMatrix& a) {
  std::ostringstream os;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      os << "[" << r + 1 << "," << c + 1 << "] " << to_string(a(r, c)) << "\n";
    }
  }
  return os.str();
}

}  // namespace genform
