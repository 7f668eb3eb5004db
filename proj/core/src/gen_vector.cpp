#include "genform/gen_vector.hpp"

#include <sstream>

#include "genform/error.hpp"

namespace genform {

namespace {

// w^r = v^r_s dx^s
OrdinaryForm row_form(const Tensor11& t, std::size_t r) {
  const std::size_t n = t.dim();
  OrdinaryForm out(n, 1);
  for (std::size_t s = 0; s < n; ++s) out.add_term(bit(static_cast<unsigned>(s)), t(r, s));
  return out;
}

OrdinaryForm coordinate_interior(std::size_t axis, const OrdinaryForm& a) {
  return interior(VectorField::coordinate(a.dim(), axis), a);
}

GenForm coordinate_interior(std::size_t axis, const GenForm& a) {
  return interior(VectorField::coordinate(a.dim(), axis), a);
}

Rational parity(int p) { return (p % 2 == 0) ? Rational(1) : Rational(-1); }

void check_pair(const GenVectorField& V, const GenForm& a, const char* op) {
  if (V.dim() != a.dim()) throw DimensionError(std::string(op) + ": dimension mismatch");
  if (V.epsilon() != a.epsilon()) {
    throw EpsilonMismatch(std::string(op) + ": epsilon mismatch (" + V.epsilon().str() + " vs " +
                          a.epsilon().str() + ")");
  }
}

void check_pair(const GenVectorField& V, const GenVectorField& W, const char* op) {
  if (V.dim() != W.dim()) throw DimensionError(std::string(op) + ": dimension mismatch");
  if (V.epsilon() != W.epsilon()) {
    throw EpsilonMismatch(std::string(op) + ": epsilon mismatch (" + V.epsilon().str() + " vs " +
                          W.epsilon().str() + ")");
  }
}

}  // namespace

GenVectorField::GenVectorField(VectorField v, Tensor11 vt, Rational epsilon)
    : v_(std::move(v)), vt_(std::move(vt)), epsilon_(std::move(epsilon)) {
  if (v_.dim() != vt_.dim()) throw DimensionError("GenVectorField: v and vt dimensions differ");
}

GenVectorField GenVectorField::ordinary(const VectorField& v, const Rational& epsilon) {
  return GenVectorField(v, Tensor11(v.dim()), epsilon);
}

GenVectorField GenVectorField::pure(const Tensor11& vt, const Rational& epsilon) {
  return GenVectorField(VectorField(vt.dim()), vt, epsilon);
}

GenVectorField GenVectorField::zero(std::size_t dim, const Rational& epsilon) {
  return GenVectorField(VectorField(dim), Tensor11(dim), epsilon);
}

GenForm GenVectorField::component(std::size_t r) const {
  return GenForm(OrdinaryForm::scalar(v_[r]), row_form(vt_, r), epsilon_);
}

GenVectorField& GenVectorField::operator+=(const GenVectorField& o) {
  check_pair(*this, o, "GenVectorField +");
  v_ += o.v_;
  vt_ += o.vt_;
  return *this;
}

GenVectorField operator-(GenVectorField a, const GenVectorField& b) { return a += Rational(-1) * b; }

GenForm interior(const GenVectorField& V, const GenForm& a) {
  check_pair(V, a, "interior");
  GenForm out = GenForm::zero(a.dim(), a.degree() - 1, a.epsilon());
  for (std::size_t r = 0; r < a.dim(); ++r) out += V.component(r) * coordinate_interior(r, a);
  return out;
}

GenForm interior_expanded(const GenVectorField& V, const GenForm& a) {
  check_pair(V, a, "interior_expanded");
  const std::size_t n = a.dim();
  OrdinaryForm gamma(n, a.degree());
  for (std::size_t r = 0; r < n; ++r) gamma += wedge(row_form(V.vt(), r), coordinate_interior(r, a.body()));
  OrdinaryForm soul = interior(V.v(), a.soul()) + parity(a.degree() - 1) * gamma;
  return GenForm(interior(V.v(), a.body()), std::move(soul), a.epsilon());
}

GenForm interior_anticommutator(const GenVectorField& V, const GenVectorField& W, const GenForm& a) {
  return interior(W, interior(V, a)) + interior(V, interior(W, a));
}

GenForm interior_anticommutator_closed_form(const GenVectorField& V, const GenVectorField& W, const GenForm& a) {
  check_pair(V, a, "interior_anticommutator_closed_form");
  check_pair(W, a, "interior_anticommutator_closed_form");
  const std::size_t n = a.dim();
  OrdinaryForm soul(n, a.degree() - 1);
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial c(n);
    for (std::size_t s = 0; s < n; ++s) c += V.vt()(r, s) * W.v()[s] + W.vt()(r, s) * V.v()[s];
    if (!c.is_zero()) soul += c * coordinate_interior(r, a.body());
  }
  return GenForm::from_soul(parity(a.degree() - 1) * soul, a.epsilon());
}

GenForm lie_derivative(const GenVectorField& V, const GenForm& a) {
  check_pair(V, a, "lie_derivative");
  return exterior_derivative(interior(V, a)) + interior(V, exterior_derivative(a));
}

GenForm lie_derivative_expanded(const GenVectorField& V, const GenForm& a) {
  check_pair(V, a, "lie_derivative_expanded");
  GenForm out = GenForm::zero(a.dim(), a.degree(), a.epsilon());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const GenForm vr = V.component(r);
    out += vr * partial(a, r);
    out += exterior_derivative(vr) * coordinate_interior(r, a);
  }
  return out;
}

GenForm lie_derivative_by_degree(const GenVectorField& V, const GenForm& a) {
  check_pair(V, a, "lie_derivative_by_degree");
  const std::size_t n = a.dim();
  const int p = a.degree();
  const Rational& eps = a.epsilon();
  const VectorField& v = V.v();
  const Tensor11& vt = V.vt();
  const OrdinaryForm& rho = a.body();
  const OrdinaryForm& sigma = a.soul();

  if (p == -1) return GenForm::from_soul(lie_derivative(v, sigma), eps);

  if (p == 0) {
    // L_v sigma + v^a_b (d_a rho - eps sigma_a) dx^b
    const Polynomial& r0 = rho.component(0);
    OrdinaryForm soul = lie_derivative(v, sigma);
    for (std::size_t b = 0; b < n; ++b) {
      Polynomial c(n);
      for (std::size_t al = 0; al < n; ++al) {
        c += vt(al, b) * (r0.partial(al) - eps * sigma.component(bit(static_cast<unsigned>(al))));
      }
      soul.add_term(bit(static_cast<unsigned>(b)), c);
    }
    return GenForm(lie_derivative(v, rho), std::move(soul), eps);
  }

  OrdinaryForm body = lie_derivative(v, rho);
  OrdinaryForm soul = lie_derivative(v, sigma);
  OrdinaryForm shift_body(n, p), shift_soul(n, p + 1), drho(n, p + 1), dvt(n, p + 1);
  for (std::size_t al = 0; al < n; ++al) {
    const OrdinaryForm w = row_form(vt, al);
    const OrdinaryForm rho_a = coordinate_interior(al, rho);
    shift_body += wedge(w, rho_a);
    shift_soul += wedge(w, coordinate_interior(al, sigma));
    OrdinaryForm d_rho(n, p);
    for (const auto& [m, c] : rho.components()) d_rho.add_term(m, c.partial(al));
    drho += wedge(w, d_rho);
    // d_l v^a_b dx^b dx^l (i_a rho)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t l = 0; l < n; ++l) {
        const Polynomial c = vt(al, b).partial(l);
        if (c.is_zero() || b == l) continue;
        const OrdinaryForm pair = wedge(OrdinaryForm::dx(n, b), OrdinaryForm::dx(n, l));
        dvt += c * wedge(pair, rho_a);
      }
    }
  }
  body -= eps * shift_body;
  soul += parity(p) * drho;
  soul += parity(p) * dvt;
  soul -= eps * shift_soul;
  return GenForm(std::move(body), std::move(soul), eps);
}

GenVectorField bracket(const GenVectorField& V, const GenVectorField& W) {
  check_pair(V, W, "bracket");
  const std::size_t n = V.dim();
  const Rational& eps = V.epsilon();
  const VectorField& v = V.v();
  const VectorField& w = W.v();
  const Tensor11& vt = V.vt();
  const Tensor11& wt = W.vt();
  Tensor11 out(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t al = 0; al < n; ++al) {
      Polynomial c(n);
      for (std::size_t b = 0; b < n; ++b) {
        c += v[b] * wt(g, al).partial(b) - w[b] * vt(g, al).partial(b);
        c += wt(g, b) * v[b].partial(al) - vt(g, b) * w[b].partial(al);
        c += vt(b, al) * w[g].partial(b) - wt(b, al) * v[g].partial(b);
        c += eps * (vt(g, b) * wt(b, al) - wt(g, b) * vt(b, al));
      }
      out(g, al) = std::move(c);
    }
  }
  return GenVectorField(bracket(v, w), std::move(out), eps);
}

DerivativeSplit split_exterior_derivative(const GenForm& a) {
  const GenForm d0 = exterior_derivative(a.with_epsilon(Rational(0))).with_epsilon(a.epsilon());
  const GenForm d1 = GenForm::from_body(parity(a.degree() + 1) * a.soul(), a.epsilon());
  return {d0, d1};
}

GenForm modified_lie_derivative(const GenVectorField& V, const GenForm& a) {
  check_pair(V, a, "modified_lie_derivative");
  if (!scalar_part(V)) {
    throw ValidationError("modified_lie_derivative: vt must be a multiple of the identity");
  }
  const GenVectorField V1 = V.pure_part();
  const GenForm correction = split_exterior_derivative(interior(V1, a)).d0 +
                             interior(V1, split_exterior_derivative(a).d0);
  return lie_derivative(V, a) - correction;
}

GenVectorField embed_generalized(const VectorField& v, const Polynomial& v0, const Rational& epsilon) {
  return GenVectorField(v, Tensor11::identity(v.dim(), v0), epsilon);
}

std::optional<Polynomial> scalar_part(const GenVectorField& V) {
  const Tensor11& t = V.vt();
  const std::size_t n = t.dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      if (r == s ? t(r, s) != t(0, 0) : !t(r, s).is_zero()) return std::nullopt;
    }
  }
  return t(0, 0);
}

GenForm interior_embedded(const VectorField& v, const Polynomial& v0, const GenForm& a) {
  const int p = a.degree();
  OrdinaryForm soul = interior(v, a.soul());
  if (p >= 1) soul += (parity(p - 1) * Rational(p)) * (v0 * a.body());
  return GenForm(interior(v, a.body()), std::move(soul), a.epsilon());
}

GenVectorField bracket_embedded(const VectorField& v, const Polynomial& v0, const VectorField& w,
                                const Polynomial& w0, const Rational& epsilon) {
  return embed_generalized(bracket(v, w), v.apply(w0) - w.apply(v0), epsilon);
}

std::string to_string(const GenVectorField& V) {
  std::ostringstream os;
  const std::size_t n = V.dim();
  os << "v = (";
  for (std::size_t r = 0; r < n; ++r) os << (r ? ", " : "") << V.v()[r].str();
  os << "), vt = [";
  for (std::size_t r = 0; r < n; ++r) {
    os << (r ? ", " : "") << '[';
    for (std::size_t s = 0; s < n; ++s) os << (s ? ", " : "") << V.vt()(r, s).str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace genform

namespace genform {

std::array<Tensor11, 3> quaternion_units() {
  constexpr std::size_t n = 4;
  // Images of the basis (1, i, j, k) under left multiplication: unit u sends
  // e_s to sign[u][s] * e_{target[u][s]}.
  constexpr int target[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  constexpr int sign[3][4] = {{1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::array<Tensor11, 3> J{Tensor11(n), Tensor11(n), Tensor11(n)};
  for (std::size_t u = 0; u < 3; ++u) {
    for (std::size_t s = 0; s < n; ++s) {
      J[u](static_cast<std::size_t>(target[u][s]), s) = Polynomial::constant(n, Rational(sign[u][s]));
    }
  }
  const Tensor11 minus_one = Tensor11::identity(n, Polynomial::constant(n, Rational(-1)));
  for (std::size_t a = 0; a < 3; ++a) {
    if (!(J[a] * J[a] == minus_one)) throw ValidationError("quaternion_units: J^2 != -1");
    for (std::size_t b = 0; b < 3; ++b) {
      if (a == b) continue;
      const std::size_t c = 3 - a - b;
      // e_abc = +1 for cyclic (a, b, c).
      const bool cyclic = (b == (a + 1) % 3);
      const Tensor11 expected = cyclic ? J[c] : Rational(-1) * J[c];
      if (!(J[a] * J[b] == expected)) throw ValidationError("quaternion_units: J_a J_b != e_abc J_c");
    }
  }
  return J;
}

std::array<GenVectorField, 3> so3_fields(const Rational& epsilon) {
  const Rational scale = epsilon.is_zero() ? Rational(1, 2) : (Rational(2) * epsilon).inverse();
  const auto J = quaternion_units();
  return {GenVectorField::pure(scale * J[0], epsilon), GenVectorField::pure(scale * J[1], epsilon),
          GenVectorField::pure(scale * J[2], epsilon)};
}

}  // namespace genform
