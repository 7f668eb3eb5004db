#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "genform/gen_form.hpp"
#include "genform/vector_field.hpp"

namespace genform {

/// Type N=1 vector field V = (v^r + v^r_s dx^s m) d/dx^r, i.e. an ordinary
/// vector field v together with a (1,1) tensor vt. Its components are the
/// generalized zero-forms v^r + v^r_s dx^s m.
class GenVectorField {
 public:
  GenVectorField(VectorField v, Tensor11 vt, Rational epsilon);

  static GenVectorField ordinary(const VectorField& v, const Rational& epsilon);
  static GenVectorField pure(const Tensor11& vt, const Rational& epsilon);
  static GenVectorField zero(std::size_t dim, const Rational& epsilon);

  std::size_t dim() const { return v_.dim(); }
  const Rational& epsilon() const { return epsilon_; }
  const VectorField& v() const { return v_; }
  const Tensor11& vt() const { return vt_; }
  bool is_ordinary() const { return vt_.is_zero(); }
  bool is_pure() const { return v_.is_zero(); }

  /// Generalized zero-form component v^r + v^r_s dx^s m.
  GenForm component(std::size_t r) const;

  /// Unique decomposition V = v + V_(1).
  GenVectorField ordinary_part() const { return ordinary(v_, epsilon_); }
  GenVectorField pure_part() const { return pure(vt_, epsilon_); }

  GenVectorField& operator+=(const GenVectorField& o);
  friend GenVectorField operator+(GenVectorField a, const GenVectorField& b) { return a += b; }
  friend GenVectorField operator-(GenVectorField a, const GenVectorField& b);
  friend GenVectorField operator*(const Rational& c, const GenVectorField& a) {
    return GenVectorField(c * a.v_, c * a.vt_, a.epsilon_);
  }
  friend bool operator==(const GenVectorField&, const GenVectorField&) = default;

 private:
  VectorField v_;
  Tensor11 vt_;
  Rational epsilon_;
};

/// i_V r = v^r i_{d/dx^r} r with generalized-zero-form components.
GenForm interior(const GenVectorField& V, const GenForm& a);

/// Closed form of the same contraction: zero on (-1)-forms, sigma_a v^a m on
/// 0-forms and i_v r + gamma m with gamma = (-1)^{p-1} v^a_b dx^b (i_a rho)
/// for p >= 1.
GenForm interior_expanded(const GenVectorField& V, const GenForm& a);

/// (i_W i_V + i_V i_W) a by composition.
GenForm interior_anticommutator(const GenVectorField& V, const GenVectorField& W, const GenForm& a);

/// (-1)^{p-1} [(v^a_b w^b + w^a_b v^b) i_a rho] m
GenForm interior_anticommutator_closed_form(const GenVectorField& V, const GenVectorField& W, const GenForm& a);

/// L_V = d i_V + i_V d.
GenForm lie_derivative(const GenVectorField& V, const GenForm& a);

/// Operator form L_V r = v^a d_a r + d(v^a) i_a r, where d_a acts on
/// components and v^a, d(v^a) are generalized forms.
GenForm lie_derivative_expanded(const GenVectorField& V, const GenForm& a);

/// Component expansions by degree: sigma-only formula for p = -1, the
/// L_v rho + [L_v sigma + v^a_b(d_a rho - eps sigma_a) dx^b] m formula for
/// p = 0 and the ordinary-form expansion for p >= 1.
GenForm lie_derivative_by_degree(const GenVectorField& V, const GenForm& a);

/// Bracket by the component formula; satisfies
/// (L_V L_W - L_W L_V) r = L_[V,W] r.
GenVectorField bracket(const GenVectorField& V, const GenVectorField& W);

/// d = d0 + eps d1, with d0 the derivative at eps = 0 and d1 m = 1,
/// d1 alpha = 0, d1(alpha + alpha' m) = (-1)^{p+1} alpha'.
struct DerivativeSplit {
  GenForm d0;
  GenForm d1;
};
DerivativeSplit split_exterior_derivative(const GenForm& a);

/// Modified Lie derivative L_V r - (d0 i_{V(1)} + i_{V(1)} d0) r for a field
/// with vt = v0 * identity. Throws ValidationError otherwise.
GenForm modified_lie_derivative(const GenVectorField& V, const GenForm& a);

/// The generalized vector field (v, v0): vt = v0 * identity.
GenVectorField embed_generalized(const VectorField& v, const Polynomial& v0, const Rational& epsilon);

/// v0 when vt = v0 * identity, nothing otherwise.
std::optional<Polynomial> scalar_part(const GenVectorField& V);

/// Contraction by an embedded field: i_v r + (-1)^{p-1} p v0 rho m.
GenForm interior_embedded(const VectorField& v, const Polynomial& v0, const GenForm& a);

/// Bracket of embedded fields: ([v,w], v(w0) - w(v0)).
GenVectorField bracket_embedded(const VectorField& v, const Polynomial& v0, const VectorField& w,
                                const Polynomial& w0, const Rational& epsilon);

std::string to_string(const GenVectorField& V);

/// Constant matrices of left multiplication by the quaternion units i, j, k
/// on R^4 = span(1, i, j, k). Before returning, checks exactly that
/// J_a J_b = e_abc J_c for a != b and J_a J_a = -1; throws ValidationError
/// otherwise.
std::array<Tensor11, 3> quaternion_units();

/// Pure constant fields V_a = J_a / (2 eps), closing into so(3) under the
/// bracket when eps != 0; for eps = 0 the fields are J_a / 2.
std::array<GenVectorField, 3> so3_fields(const Rational& epsilon);

}  // namespace genform
