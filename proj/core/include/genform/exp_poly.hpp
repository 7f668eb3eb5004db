#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genform/polynomial.hpp"

namespace genform {

/// Finite sums  sum_i p_i * exp(q_i)  with polynomial p_i and q_i.
///
/// Equality is syntactic after merging identical exponents: terms whose
/// exponent polynomials differ are treated as independent. The constant term
/// of q stays inside q, so tau * e^c is the single term (tau, q = c).
class ExpPoly {
 public:
  using Term = std::pair<Polynomial, Polynomial>;  // (exponent q, coefficient p)

  explicit ExpPoly(std::size_t dim);
  ExpPoly(const Polynomial& p);  // NOLINT(google-explicit-constructor): q = 0 embedding

  /// c * exp(q)
  static ExpPoly exp(const Polynomial& q, const Rational& c = Rational(1));
  /// r * e^s, a constant.
  static ExpPoly constant(std::size_t dim, const Rational& r, const Rational& s = Rational(0));

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True when every term has constant coefficient and constant exponent.
  bool is_constant() const;
  /// Returns (r, s) when the value is the single constant term r * e^s
  /// (or zero, reported as (0, 0)).
  std::pair<Rational, Rational> as_scaled_exponential() const;

  /// Multiplicative inverse of a single term c * exp(q) with constant c != 0.
  ExpPoly inverse() const;

  ExpPoly partial(std::size_t axis) const;
  double eval(std::span<const double> point) const;
  std::string str() const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(ExpPoly a, const Rational& c);
  ExpPoly operator-() const;

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

 private:
  static std::vector<Term> canonicalize(std::vector<Term> terms);

  std::size_t dim_;
  std::vector<Term> terms_;  // sorted by exponent, coefficients nonzero
};

std::ostream& operator<<(std::ostream& os, const ExpPoly& e);

}  // namespace genform
