#include "genform/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace genform {

namespace {

Polynomial one(std::size_t n) { return Polynomial::constant(n, Rational(1)); }

// Upsilon_{abc} of a three-form stored on the increasing basis.
Polynomial three_form_component(const OrdinaryForm& f, std::size_t a, std::size_t b, std::size_t c) {
  const Mask ma = bit(static_cast<unsigned>(a)), mb = bit(static_cast<unsigned>(b)),
             mc = bit(static_cast<unsigned>(c));
  const int s1 = product_sign(ma, mb);
  if (s1 == 0) return Polynomial(f.dim());
  const int s2 = product_sign(ma | mb, mc);
  if (s2 == 0) return Polynomial(f.dim());
  const Polynomial comp = f.component(ma | mb | mc);
  return s1 * s2 > 0 ? comp : -comp;
}

// c_b = eps k_b - h_{,b}, then v^a = Omega^{ab} c_b.
VectorField ordinary_part(const GenSymplectic& s, const GenForm& H) {
  const std::size_t n = s.dim();
  const Polynomial h = H.body().component(0);
  VectorField v(n);
  for (std::size_t b = 0; b < n; ++b) {
    const Polynomial c = s.epsilon() * H.soul().component(bit(static_cast<unsigned>(b))) - h.partial(b);
    if (c.is_zero()) continue;
    for (std::size_t a = 0; a < n; ++a) v[a] += s.omega_inv()(a, b) * c;
  }
  return v;
}

void check_problem(const GenSymplectic& s, const GenForm& H) {
  if (H.degree() != 0) throw DegreeError("hamiltonian: H must be a generalized 0-form");
  if (H.dim() != s.dim()) throw DimensionError("hamiltonian: dimension mismatch");
  if (H.epsilon() != s.epsilon()) throw EpsilonMismatch("hamiltonian: epsilon mismatch");
}

}  // namespace

PolyMatrix two_form_matrix(const OrdinaryForm& f) {
  if (f.degree() != 2) throw DegreeError("two_form_matrix: expected a two-form");
  const std::size_t n = f.dim();
  PolyMatrix out(n, n, Polynomial(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Polynomial c = f.component(bit(static_cast<unsigned>(a)) | bit(static_cast<unsigned>(b)));
      out(a, b) = c;
      out(b, a) = -c;
    }
  }
  return out;
}

GenSymplectic symplectic_validate(const GenForm& s, const PolyMatrix& omega_inv) {
  const std::size_t n = s.dim();
  if (s.degree() != 2) throw DegreeError("symplectic_validate: s must be a generalized two-form");
  if (n % 2 != 0) throw DimensionError("symplectic_validate: odd dimension " + std::to_string(n));
  if (omega_inv.rows() != n || omega_inv.cols() != n) {
    throw DimensionError("symplectic_validate: omega_inv must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  const GenForm ds = exterior_derivative(s);
  if (!ds.is_zero()) throw ValidationError("symplectic_validate: s is not closed, d s = " + to_string(ds));
  // Omega^{ac} Omega_{bc} = delta^a_b
  if (!is_identity(omega_inv * two_form_matrix(s.body()).transpose())) {
    throw ValidationError("symplectic_validate: omega_inv is not the inverse of Omega");
  }
  return GenSymplectic(s, omega_inv);
}

bool is_kernel_field(const GenVectorField& W, const GenSymplectic& s) {
  if (W.dim() != s.dim()) throw DimensionError("is_kernel_field: dimension mismatch");
  if (!W.v().is_zero()) return false;
  return interior(W, s.s()).is_zero();
}

GenVectorField kernel_field(const GenSymplectic& s, const PolyMatrix& symmetric) {
  const std::size_t n = s.dim();
  if (!(symmetric == symmetric.transpose())) throw ValidationError("kernel_field: S must be symmetric");
  Tensor11 t(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) t(a, b) += s.omega_inv()(a, c) * symmetric(b, c);
    }
  }
  return GenVectorField::pure(t, s.epsilon());
}

GenVectorField hamiltonian_vf_formula(const GenSymplectic& s, const GenForm& H) {
  check_problem(s, H);
  const std::size_t n = s.dim();
  const VectorField v = ordinary_part(s, H);
  const OrdinaryForm& k = H.soul();
  Tensor11 t(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Polynomial acc(n);
      for (std::size_t c = 0; c < n; ++c) {
        const Polynomial& inv = s.omega_inv()(c, a);
        if (inv.is_zero()) continue;
        Polynomial inner = Rational(1, 2) * (k.component(bit(static_cast<unsigned>(c))).partial(b) -
                                             k.component(bit(static_cast<unsigned>(b))).partial(c));
        for (std::size_t m = 0; m < n; ++m) {
          inner -= Rational(1, 2) * (v[m] * three_form_component(s.upsilon(), m, b, c));
        }
        acc += inv * inner;
      }
      t(a, b) = std::move(acc);
    }
  }
  return GenVectorField(v, std::move(t), s.epsilon());
}

GenVectorField hamiltonian_vf_solve(const GenSymplectic& s, const GenForm& H) {
  check_problem(s, H);
  const std::size_t n = s.dim();
  const VectorField v = ordinary_part(s, H);
  const PolyMatrix F = two_form_matrix(exterior_derivative(H.soul()) + interior(v, s.upsilon()));
  Tensor11 t(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Polynomial acc(n);
      for (std::size_t c = 0; c < n; ++c) acc += s.omega_inv()(a, c) * F(b, c);
      t(a, b) = Rational(1, 2) * acc;
    }
  }
  return GenVectorField(v, std::move(t), s.epsilon());
}

GenForm hamiltonian_residual(const GenSymplectic& s, const GenVectorField& V, const GenForm& H) {
  return interior(V, s.s()) + exterior_derivative(H);
}

HamiltonianField hamiltonian_vf(const GenSymplectic& s, const GenForm& H) {
  GenVectorField formula = hamiltonian_vf_formula(s, H);
  if (hamiltonian_residual(s, formula, H).is_zero()) return {std::move(formula), false};
  GenVectorField solved = hamiltonian_vf_solve(s, H);
  const GenForm residual = hamiltonian_residual(s, solved, H);
  if (!residual.is_zero()) {
    throw ValidationError("hamiltonian_vf: defining relation fails, residual " + to_string(residual));
  }
  return {std::move(solved), true};
}

std::optional<GenForm> hamiltonian_potential(const GenSymplectic& s, const GenVectorField& V) {
  const GenForm X = interior(V, s.s());
  // -d K = X with K = kappa + lambda m: d lambda = -X', d kappa = -X + eps lambda.
  const OrdinaryForm lambda = homotopy(-X.soul());
  const OrdinaryForm kappa = homotopy(s.epsilon() * lambda - X.body());
  GenForm K(kappa, lambda, s.epsilon());
  if (!(exterior_derivative(K) == -X)) return std::nullopt;
  return K;
}

SimplifiedConsistency simplified_consistency(const OrdinaryForm& omega, const OrdinaryForm& k, const Polynomial& v0) {
  const bool dk_matches = (Rational(2) * (v0 * omega)) == exterior_derivative(k);
  const bool v0_admissible = omega.dim() <= 2 || v0.is_constant();
  return {dk_matches, v0_admissible};
}

GenVectorField simplified_hamiltonian_vf(const GenSymplectic& s, const GenForm& H, const Polynomial& v0) {
  check_problem(s, H);
  if (!s.upsilon().is_zero()) throw ValidationError("simplified_hamiltonian_vf: s must be the ordinary form Omega");
  const SimplifiedConsistency c = simplified_consistency(s.omega(), H.soul(), v0);
  if (!c.dk_matches) throw ValidationError("simplified_hamiltonian_vf: 2 v0 Omega != dk");
  if (!c.v0_admissible) throw ValidationError("simplified_hamiltonian_vf: v0 must be constant when dim > 2");
  GenVectorField V = embed_generalized(ordinary_part(s, H), v0, s.epsilon());
  const GenForm residual = hamiltonian_residual(s, V, H);
  if (!residual.is_zero()) {
    throw ValidationError("simplified_hamiltonian_vf: defining relation fails, residual " + to_string(residual));
  }
  return V;
}

GenSymplectic canonical_symplectic(std::size_t l, const Rational& epsilon) {
  const std::size_t n = 2 * l;
  OrdinaryForm omega(n, 2);
  PolyMatrix inv(n, n, Polynomial(n));
  for (std::size_t a = 0; a < l; ++a) {
    // dp_a dq^a = -dx^a dx^{l+a}
    omega.add_term(bit(static_cast<unsigned>(a)) | bit(static_cast<unsigned>(l + a)), -one(n));
    inv(a, l + a) = -one(n);
    inv(l + a, a) = one(n);
  }
  return symplectic_validate(GenForm::from_body(omega, epsilon), inv);
}

GenForm oscillator_hamiltonian(std::size_t l, const Rational& v0, const Rational& epsilon) {
  const std::size_t n = 2 * l;
  Polynomial h(n);
  OrdinaryForm k(n, 1);
  for (std::size_t a = 0; a < l; ++a) {
    const Polynomial q = Polynomial::variable(n, a), p = Polynomial::variable(n, l + a);
    h += Rational(1, 2) * (q * q + p * p);
    k.add_term(bit(static_cast<unsigned>(a)), Rational(2) * v0 * p);
  }
  return GenForm(OrdinaryForm::scalar(h), k, epsilon);
}

std::string Trajectory::csv() const {
  std::ostringstream os;
  os << 't';
  for (std::size_t a = 1; a <= l; ++a) os << ",q" << a;
  for (std::size_t a = 1; a <= l; ++a) os << ",p" << a;
  os << '\n' << std::setprecision(12);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<double>> integrate_rk4(const VectorField& v, std::vector<double> x, double t_end, double dt) {
  if (!(dt > 0) || !(t_end > 0)) throw std::invalid_argument("integrate_rk4: dt and t_end must be positive");
  if (x.size() != v.dim()) throw DimensionError("integrate_rk4: initial state has wrong length");
  const std::size_t n = x.size();
  const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
  auto field = [&](const std::vector<double>& y) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[i].eval(y);
    return out;
  };
  auto axpy = [n](const std::vector<double>& y, double h, const std::vector<double>& k) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + h * k[i];
    return out;
  };
  std::vector<std::vector<double>> rows;
  rows.reserve(steps + 1);
  auto record = [&](double t) {
    std::vector<double> row{t};
    row.insert(row.end(), x.begin(), x.end());
    rows.push_back(std::move(row));
  };
  record(0.0);
  for (std::size_t s = 1; s <= steps; ++s) {
    const auto k1 = field(x);
    const auto k2 = field(axpy(x, dt / 2, k1));
    const auto k3 = field(axpy(x, dt / 2, k2));
    const auto k4 = field(axpy(x, dt, k3));
    for (std::size_t i = 0; i < n; ++i) x[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    for (double xi : x) {
      if (!std::isfinite(xi)) {
        throw std::runtime_error("integrate_rk4: non-finite state at t = " + std::to_string(s * dt));
      }
    }
    record(static_cast<double>(s) * dt);
  }
  return rows;
}

Trajectory integrate_hamilton(const Rational& epsilon, const Rational& v0, std::size_t l,
                              const std::vector<double>& q0, const std::vector<double>& p0, double t_end, double dt) {
  if (l == 0 || 2 * l > kMaxDim) throw DimensionError("integrate_hamilton: unsupported l");
  if (q0.size() != l || p0.size() != l) throw DimensionError("integrate_hamilton: q0 and p0 must have length l");
  const GenSymplectic s = canonical_symplectic(l, epsilon);
  const GenForm H = oscillator_hamiltonian(l, v0, epsilon);
  const GenVectorField V = simplified_hamiltonian_vf(s, H, Polynomial::constant(2 * l, v0));
  std::vector<double> x0 = q0;
  x0.insert(x0.end(), p0.begin(), p0.end());
  return {l, integrate_rk4(V.v(), std::move(x0), t_end, dt)};
}

std::pair<double, double> oscillator_closed_form(double c, double q0, double p0, double t) {
  const double disc = 1.0 - c * c;
  const double ect = std::exp(c * t);
  if (disc > 0) {
    const double w = std::sqrt(disc);
    const double A = q0, B = (p0 - c * q0) / w;
    const double cs = std::cos(w * t), sn = std::sin(w * t);
    const double q = ect * (A * cs + B * sn);
    const double p = c * q + ect * w * (B * cs - A * sn);
    return {q, p};
  }
  if (disc == 0) {
    const double B = p0 - c * q0;
    const double q = ect * (q0 + B * t);
    return {q, c * q + ect * B};
  }
  const double r = std::sqrt(-disc);
  const double rp = c + r, rm = c - r;
  const double C1 = (p0 - rm * q0) / (rp - rm), C2 = q0 - C1;
  const double ep = std::exp(rp * t), em = std::exp(rm * t);
  return {C1 * ep + C2 * em, C1 * rp * ep + C2 * rm * em};
}

namespace {

double max_error(double c, const Trajectory& traj, const std::vector<double>& q0, const std::vector<double>& p0) {
  double err = 0;
  for (const auto& row : traj.rows) {
    for (std::size_t a = 0; a < traj.l; ++a) {
      err = std::max(err, std::abs(row[1 + a] - oscillator_closed_form(c, q0[a], p0[a], row[0]).first));
    }
  }
  return err;
}

}  // namespace

OscillatorSummary oscillator_summary(const Rational& epsilon, const Rational& v0, const Trajectory& traj,
                                     const std::vector<double>& q0, const std::vector<double>& p0) {
  const double c = (epsilon * v0).to_double();
  const double t_end = traj.rows.back()[0];
  const double coarse = max_error(c, integrate_hamilton(epsilon, v0, traj.l, q0, p0, t_end, 0.1), q0, p0);
  const double fine = max_error(c, integrate_hamilton(epsilon, v0, traj.l, q0, p0, t_end, 0.05), q0, p0);
  return {max_error(c, traj, q0, p0), std::log2(coarse / fine)};
}

}  // namespace genform
