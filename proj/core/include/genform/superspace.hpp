#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "genform/gen_form.hpp"
#include "genform/gen_vector.hpp"
#include "genform/grassmann.hpp"
#include "genform/polynomial.hpp"

namespace genform {

/// Grassmann polynomial in odd generators z1..zn, mu with polynomial
/// coefficients. Generator g < n is z_{g+1}; generator n is mu (ordered last).
class SuperFunction {
 public:
  SuperFunction(std::size_t dim, Rational epsilon);

  static SuperFunction constant(std::size_t dim, const Rational& epsilon, const Polynomial& c);
  /// The single generator z_{g+1} (g < dim) or mu (g == dim).
  static SuperFunction generator(std::size_t dim, const Rational& epsilon, unsigned g);

  std::size_t dim() const { return dim_; }
  const Rational& epsilon() const { return epsilon_; }
  Mask mu_bit() const { return bit(static_cast<unsigned>(dim_)); }
  const std::map<Mask, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Mask m, const Polynomial& c);

  /// Left derivative with respect to generator g.
  SuperFunction odd_derivative(unsigned g) const;
  /// Coefficientwise d/dx^{axis+1}.
  SuperFunction partial(std::size_t axis) const;

  SuperFunction& operator+=(const SuperFunction& o);
  SuperFunction& operator-=(const SuperFunction& o);
  friend SuperFunction operator+(SuperFunction a, const SuperFunction& b) { return a += b; }
  friend SuperFunction operator-(SuperFunction a, const SuperFunction& b) { return a -= b; }
  SuperFunction operator-() const;
  friend SuperFunction operator*(const SuperFunction& a, const SuperFunction& b);
  friend SuperFunction operator*(const Polynomial& c, const SuperFunction& a);
  friend SuperFunction operator*(const Rational& c, const SuperFunction& a);
  friend bool operator==(const SuperFunction&, const SuperFunction&) = default;

  /// Debug text, e.g. "x1 * z1 z3 mu + 2".
  std::string str() const;

 private:
  void check_compatible(const SuperFunction& o) const;

  std::size_t dim_;
  Rational epsilon_;
  std::map<Mask, Polynomial> terms_;
};

SuperFunction to_super(const GenForm& a);

/// Inverse of to_super. All terms must share one generalized degree (number
/// of z generators, minus one if mu is present); throws DegreeError otherwise.
/// `degree` fixes the degree of a zero result and, if given, is enforced.
GenForm from_super(const SuperFunction& f, std::optional<int> degree = std::nullopt);

/// z^a d/dx^a + eps d/dmu
SuperFunction super_d(const SuperFunction& f);

/// v^a d/dz^a
SuperFunction super_interior(const VectorField& v, const SuperFunction& f);
/// (v^r + v^r_s z^s mu) d/dz^r
SuperFunction super_interior(const GenVectorField& V, const SuperFunction& f);

/// v^a d/dx^a + d_b v^a z^b d/dz^a
SuperFunction super_lie(const VectorField& v, const SuperFunction& f);

/// Even vector field
///   v^a d_a + d_b v^a z^b d/dz^a - eps v^a_b z^b d/dz^a
///   + v^a_b z^b mu d_a + d_c v^a_b z^c z^b mu d/dz^a.
SuperFunction super_lie(const GenVectorField& V, const SuperFunction& f);

/// Supercommutator d i_V + i_V d.
SuperFunction super_lie_commutator(const GenVectorField& V, const SuperFunction& f);

}  // namespace genform
