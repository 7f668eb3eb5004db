#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "genform/error.hpp"
#include "genform/exp_poly.hpp"
#include "genform/grassmann.hpp"
#include "genform/polynomial.hpp"
#include "genform/vector_field.hpp"

namespace genform {

/// Commutative coefficient ring with formal partial derivatives. `R(dim)` is
/// the zero element in `dim` variables.
template <class R>
concept CoefficientRing = std::equality_comparable<R> && requires(const R a, const R b, std::size_t i) {
  R(i);
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.partial(i) } -> std::convertible_to<R>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.dim() } -> std::convertible_to<std::size_t>;
};

/// Ordinary p-form on R^n stored on the strictly increasing coordinate basis:
/// sum over I of c_I dx^{i1}...dx^{ip}. A degree outside [0, n] can only hold
/// the zero form.
template <CoefficientRing R>
class BasicForm {
 public:
  using Components = std::map<Mask, R>;

  BasicForm(std::size_t dim, int degree) : dim_(dim), degree_(degree) {
    if (dim == 0 || dim > kMaxDim) throw DimensionError("form: bad dimension");
  }

  /// A function viewed as a 0-form.
  static BasicForm scalar(const R& f) {
    BasicForm out(f.dim(), 0);
    out.add_term(0, f);
    return out;
  }

  static BasicForm monomial(std::size_t dim, Mask m, const R& coeff) {
    BasicForm out(dim, grade(m));
    out.add_term(m, coeff);
    return out;
  }

  /// dx^{axis+1}
  static BasicForm dx(std::size_t dim, std::size_t axis)
    requires std::constructible_from<R, Polynomial>
  {
    return monomial(dim, bit(static_cast<unsigned>(axis)), R(Polynomial::constant(dim, Rational(1))));
  }

  std::size_t dim() const { return dim_; }
  int degree() const { return degree_; }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  R component(Mask m) const {
    auto it = components_.find(m);
    return it == components_.end() ? R(dim_) : it->second;
  }

  void add_term(Mask m, const R& c) {
    if (grade(m) != degree_) throw DegreeError("form: basis element does not match degree");
    if (m >> dim_) throw DimensionError("form: basis index beyond dimension");
    if (c.dim() != dim_) throw DimensionError("form: coefficient dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) components_.erase(it);
    }
  }

  BasicForm& operator+=(const BasicForm& o) {
    check_compatible(o, "+");
    for (const auto& [m, c] : o.components_) add_term(m, c);
    return *this;
  }
  BasicForm& operator-=(const BasicForm& o) {
    check_compatible(o, "-");
    for (const auto& [m, c] : o.components_) add_term(m, -c);
    return *this;
  }
  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  BasicForm operator-() const {
    BasicForm out(dim_, degree_);
    for (const auto& [m, c] : components_) out.components_.emplace(m, -c);
    return out;
  }

  /// Multiplication by a function (a 0-form).
  friend BasicForm operator*(const R& f, const BasicForm& a) {
    if (f.dim() != a.dim_) throw DimensionError("form: function dimension mismatch");
    BasicForm out(a.dim_, a.degree_);
    if (f.is_zero()) return out;
    for (const auto& [m, c] : a.components_) out.add_term(m, f * c);
    return out;
  }
  friend BasicForm operator*(const Rational& s, const BasicForm& a) {
    BasicForm out(a.dim_, a.degree_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.components_) out.components_.emplace(m, c * s);
    return out;
  }

  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.components_ == b.components_;
  }

 private:
  void check_compatible(const BasicForm& o, const char* op) const {
    if (o.dim_ != dim_) throw DimensionError(std::string("form ") + op + ": dimension mismatch");
    if (o.degree_ != degree_) {
      throw DegreeError(std::string("form ") + op + ": degree mismatch (" + std::to_string(degree_) + " vs " +
                        std::to_string(o.degree_) + ")");
    }
  }

  std::size_t dim_;
  int degree_;
  Components components_;
};

using OrdinaryForm = BasicForm<Polynomial>;
using ExpForm = BasicForm<ExpPoly>;

template <CoefficientRing R>
BasicForm<R> wedge(const BasicForm<R>& a, const BasicForm<R>& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge: dimension mismatch");
  BasicForm<R> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.components()) {
    for (const auto& [mb, cb] : b.components()) {
      const int s = product_sign(ma, mb);
      if (s == 0) continue;
      out.add_term(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

/// d(c dx^I) = sum_k d_k c dx^k dx^I
template <CoefficientRing R>
BasicForm<R> exterior_derivative(const BasicForm<R>& a) {
  BasicForm<R> out(a.dim(), a.degree() + 1);
  for (const auto& [m, c] : a.components()) {
    for (unsigned k = 0; k < a.dim(); ++k) {
      const int s = product_sign(bit(k), m);
      if (s == 0) continue;
      R dc = c.partial(k);
      if (dc.is_zero()) continue;
      out.add_term(m | bit(k), s > 0 ? dc : -dc);
    }
  }
  return out;
}

/// Contraction with v; uses the left derivative with respect to each dx^a.
template <CoefficientRing R>
  requires std::constructible_from<R, Polynomial>
BasicForm<R> interior(const VectorField& v, const BasicForm<R>& a) {
  if (v.dim() != a.dim()) throw DimensionError("interior: dimension mismatch");
  BasicForm<R> out(a.dim(), a.degree() - 1);
  for (const auto& [m, c] : a.components()) {
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const unsigned i = static_cast<unsigned>(std::countr_zero(rest));
      if (v[i].is_zero()) continue;
      R term = R(v[i]) * c;
      out.add_term(m & ~bit(i), left_derivative_sign(m, i) > 0 ? term : -term);
    }
  }
  return out;
}

/// Lie derivative by the coordinate formula
///   L_v(c dx^I) = v(c) dx^I + c sum_r dx^{i1}..d(v^{ir})..dx^{ip}.
template <CoefficientRing R>
  requires std::constructible_from<R, Polynomial>
BasicForm<R> lie_derivative(const VectorField& v, const BasicForm<R>& a) {
  if (v.dim() != a.dim()) throw DimensionError("lie_derivative: dimension mismatch");
  const std::size_t n = a.dim();
  BasicForm<R> out(n, a.degree());
  for (const auto& [m, c] : a.components()) {
    R vc(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!v[k].is_zero()) vc = vc + R(v[k]) * c.partial(k);
    }
    out.add_term(m, vc);
    // Replace the r-th differential dx^{i} by dv^{i} = d_k v^i dx^k.
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const unsigned i = static_cast<unsigned>(std::countr_zero(rest));
      const Mask others = m & ~bit(i);
      // Moving dx^k from the front into slot i costs left_derivative_sign(m, i).
      const int slot_sign = left_derivative_sign(m, i);
      for (unsigned k = 0; k < n; ++k) {
        const int s = product_sign(bit(k), others);
        if (s == 0) continue;
        Polynomial dv = v[i].partial(k);
        if (dv.is_zero()) continue;
        R term = R(dv) * c;
        out.add_term(others | bit(k), s * slot_sign > 0 ? term : -term);
      }
    }
  }
  return out;
}

/// Radial homotopy operator of the Poincare lemma on R^n,
///   (h w)(x) = int_0^1 t^{p-1} i_X w(t x) dt,  X = x^i d_i.
/// For closed w of degree p >= 1, d(h w) = w.
OrdinaryForm homotopy(const OrdinaryForm& a);

/// Pullback along phi: R^m -> R^n given by n polynomials in m variables.
OrdinaryForm pullback(std::span<const Polynomial> phi, const OrdinaryForm& a);

std::string to_string(const OrdinaryForm& a);

}  // namespace genform
