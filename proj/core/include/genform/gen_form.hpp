#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "genform/form.hpp"
#include "genform/rational.hpp"

namespace genform {

/// Type N=1 generalized p-form a = alpha + alpha' m, -1 <= p <= n, where m is
/// the minus one-form with m^2 = 0, alpha m = (-1)^p m alpha and dm = epsilon.
///
/// `body` is the ordinary p-form alpha, `soul` the ordinary (p+1)-form alpha'.
/// Every operand of a binary operation must carry the same epsilon.
class GenForm {
 public:
  GenForm(OrdinaryForm body, OrdinaryForm soul, Rational epsilon);

  static GenForm zero(std::size_t dim, int degree, const Rational& epsilon);
  /// The unit generalized 0-form.
  static GenForm one(std::size_t dim, const Rational& epsilon);
  /// The minus one-form m itself.
  static GenForm m(std::size_t dim, const Rational& epsilon);
  static GenForm from_body(const OrdinaryForm& body, const Rational& epsilon);
  /// soul * m as a generalized form of degree soul.degree() - 1.
  static GenForm from_soul(const OrdinaryForm& soul, const Rational& epsilon);
  static GenForm scalar(const Polynomial& f, const Rational& epsilon);

  std::size_t dim() const { return body_.dim(); }
  int degree() const { return body_.degree(); }
  const OrdinaryForm& body() const { return body_; }
  const OrdinaryForm& soul() const { return soul_; }
  const Rational& epsilon() const { return epsilon_; }
  bool is_zero() const { return body_.is_zero() && soul_.is_zero(); }

  /// Same body and soul, different ambient dm.
  GenForm with_epsilon(const Rational& epsilon) const { return GenForm(body_, soul_, epsilon); }

  GenForm& operator+=(const GenForm& o);
  GenForm& operator-=(const GenForm& o);
  friend GenForm operator+(GenForm a, const GenForm& b) { return a += b; }
  friend GenForm operator-(GenForm a, const GenForm& b) { return a -= b; }
  GenForm operator-() const { return GenForm(-body_, -soul_, epsilon_); }
  friend GenForm operator*(const Rational& c, const GenForm& a) {
    return GenForm(c * a.body_, c * a.soul_, a.epsilon_);
  }
  /// Exterior product of generalized forms.
  friend GenForm operator*(const GenForm& a, const GenForm& b);

  friend bool operator==(const GenForm& a, const GenForm& b) {
    return a.epsilon_ == b.epsilon_ && a.body_ == b.body_ && a.soul_ == b.soul_;
  }

 private:
  void check_compatible(const GenForm& o, const char* op) const;

  OrdinaryForm body_;
  OrdinaryForm soul_;
  Rational epsilon_;
};

/// (alpha + alpha' m)(beta + beta' m) = alpha beta + (alpha beta' + (-1)^q alpha' beta) m
GenForm wedge(const GenForm& a, const GenForm& b);

/// d(alpha + alpha' m) = [d alpha + (-1)^{p+1} epsilon alpha'] + (d alpha') m
GenForm exterior_derivative(const GenForm& a);

/// Pullback applied to body and soul; m pulls back to m.
GenForm pullback(std::span<const Polynomial> phi, const GenForm& a);

/// i_v a = i_v alpha + (i_v alpha') m for an ordinary vector field v.
GenForm interior(const VectorField& v, const GenForm& a);

/// L_v a = L_v alpha + (L_v alpha') m, the componentwise form of i_v d + d i_v.
GenForm lie_derivative(const VectorField& v, const GenForm& a);

/// Componentwise partial derivative d/dx^{axis+1} of body and soul, i.e. the
/// Lie derivative along a coordinate field.
GenForm partial(const GenForm& a, std::size_t axis);

std::string to_string(const GenForm& a);

}  // namespace genform
